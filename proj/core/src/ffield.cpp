/*
   Copyright 2026 The ppbinom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ppbinom/ffield.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "ppbinom/errors.hpp"

namespace ppbinom {

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace modp {

Residue pow(Residue a, std::uint64_t k, std::uint32_t p) noexcept {
    Residue result = 1 % p;
    Residue base = a % p;
    while (k) {
        if (k & 1) result = mul(result, base, p);
        base = mul(base, base, p);
        k >>= 1;
    }
    return result;
}

Residue inv(Residue a, std::uint32_t p) {
    if (a % p == 0) throw Error(ErrorCode::ZeroInverse, "inverse of 0 mod " + std::to_string(p));
    return pow(a, p - 2, p);
}

Residue reduce(std::int64_t v, std::uint32_t p) noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<Residue>(r);
}

}  // namespace modp

Residue lucas_binom(std::uint32_t p, std::uint64_t m, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > m) return 0;
    auto kk = static_cast<std::uint64_t>(k);
    Residue result = 1;
    while (m || kk) {
        const auto mi = static_cast<Residue>(m % p);
        const auto ki = static_cast<Residue>(kk % p);
        if (ki > mi) return 0;
        // C(mi, ki) with mi < p: the denominator is a unit mod p.
        Residue num = 1, den = 1;
        for (Residue t = 0; t < ki; ++t) {
            num = modp::mul(num, mi - t, p);
            den = modp::mul(den, t + 1, p);
        }
        result = modp::mul(result, modp::mul(num, modp::inv(den, p), p), p);
        m /= p;
        kk /= p;
    }
    return result;
}

// ---------------------------------------------------------------- FpPoly

FpPoly::FpPoly(std::uint32_t p, std::vector<Residue> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= p_;
    trim();
}

FpPoly FpPoly::monomial(std::uint32_t p, std::size_t degree, Residue c) {
    std::vector<Residue> v(degree + 1, 0);
    v[degree] = c;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Residue FpPoly::evaluate(Residue x) const noexcept {
    Residue acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = modp::add(modp::mul(acc, x, p_), *it, p_);
    }
    return acc;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    const Residue li = modp::inv(lead(), p_);
    FpPoly out(*this);
    for (auto& c : out.coeffs_) c = modp::mul(c, li, p_);
    return out;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    const auto p = a.p_;
    std::vector<Residue> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = modp::add(a.coeff(k), b.coeff(k), p);
    return FpPoly(p, std::move(v));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    const auto p = a.p_;
    std::vector<Residue> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = modp::sub(a.coeff(k), b.coeff(k), p);
    return FpPoly(p, std::move(v));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    const auto p = a.p_;
    if (a.is_zero() || b.is_zero()) return FpPoly(p);
    std::vector<Residue> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] = modp::add(v[i + j], modp::mul(a.coeffs_[i], b.coeffs_[j], p), p);
        }
    }
    return FpPoly(p, std::move(v));
}

std::string FpPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Residue c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (c != 1 || k == 0) os << c;
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

FpDivMod divmod(const FpPoly& num, const FpPoly& den) {
    const auto p = num.modulus();
    if (den.is_zero()) throw Error(ErrorCode::ZeroInverse, "polynomial division by zero");
    std::vector<Residue> r = num.coeffs();
    const int dd = den.degree();
    if (num.degree() < dd) return {FpPoly(p), num};
    std::vector<Residue> quo(static_cast<std::size_t>(num.degree() - dd + 1), 0);
    const Residue li = modp::inv(den.lead(), p);
    for (int k = num.degree(); k >= dd; --k) {
        const Residue c = modp::mul(r[static_cast<std::size_t>(k)], li, p);
        quo[static_cast<std::size_t>(k - dd)] = c;
        if (c == 0) continue;
        for (int t = 0; t <= dd; ++t) {
            auto& slot = r[static_cast<std::size_t>(k - dd + t)];
            slot = modp::sub(slot, modp::mul(c, den.coeff(static_cast<std::size_t>(t)), p), p);
        }
    }
    r.resize(static_cast<std::size_t>(dd));
    return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(r))};
}

FpPoly operator%(const FpPoly& num, const FpPoly& den) { return divmod(num, den).remainder; }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FpPoly powmod(const FpPoly& base, std::uint64_t k, const FpPoly& mod) {
    const auto p = mod.modulus();
    FpPoly result = FpPoly(p, {1}) % mod;
    FpPoly b = base % mod;
    while (k) {
        if (k & 1) result = (result * b) % mod;
        b = (b * b) % mod;
        k >>= 1;
    }
    return result;
}

bool is_irreducible(const FpPoly& m) {
    const int n = m.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const auto p = m.modulus();
    const FpPoly x = FpPoly::monomial(p, 1);

    // x^{p^k} mod m for k = 0..n, by repeated p-th powering.
    std::vector<FpPoly> frob{x % m};
    for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, m));

    if (!(frob[static_cast<std::size_t>(n)] - frob[0]).is_zero()) return false;
    for (auto r : prime_divisors(static_cast<std::uint64_t>(n))) {
        const auto k = static_cast<std::size_t>(static_cast<std::uint64_t>(n) / r);
        if (gcd(frob[k] - x, m).degree() != 0) return false;
    }
    return true;
}

std::vector<Residue> roots_in_prime_field(const FpPoly& f) {
    std::vector<Residue> out;
    if (f.is_zero()) return out;
    for (Residue r = 0; r < f.modulus(); ++r) {
        if (f.evaluate(r) == 0) out.push_back(r);
    }
    return out;
}

// -------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e, std::uint64_t size_bound) : p_(p), e_(e) {
    if (!is_prime(p)) throw Error(ErrorCode::NonPrimeP, std::to_string(p) + " is not prime");
    if (e == 0) throw Error(ErrorCode::InvalidArgument, "extension exponent must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t k = 0; k < e; ++k) {
        q *= p;
        if (q > size_bound) break;
    }
    if (q > size_bound || q * q > size_bound) {
        throw Error(ErrorCode::SizeExceeded,
                    std::to_string(p) + "^" + std::to_string(2 * e) + " exceeds the field size bound " +
                        std::to_string(size_bound));
    }
    q_ = q;
    size_ = q * q;

    const std::uint32_t n = degree();
    for (std::uint64_t idx = 0; idx < size_; ++idx) {
        std::vector<Residue> c(n + 1, 0);
        std::uint64_t t = idx;
        for (std::uint32_t k = 0; k < n; ++k) {
            c[k] = static_cast<Residue>(t % p);
            t /= p;
        }
        c[n] = 1;
        FpPoly candidate(p, std::move(c));
        if (is_irreducible(candidate)) {
            modulus_ = std::move(candidate);
            break;
        }
    }

    if (size_ <= kTableBound) build_tables();
}

FieldCtx make_field(std::uint32_t p, std::uint32_t e) { return FieldCtx(p, e); }

std::string FieldCtx::descriptor() const { return std::to_string(p_) + "^" + std::to_string(e_); }

FieldElem FieldCtx::from_int(std::int64_t v) const noexcept { return FieldElem{modp::reduce(v, p_)}; }

FieldElem FieldCtx::from_code(std::uint64_t code) const {
    if (code >= size_) {
        throw Error(ErrorCode::InvalidArgument,
                    "element code " + std::to_string(code) + " out of range for F_" + std::to_string(size_));
    }
    return FieldElem{static_cast<std::uint32_t>(code)};
}

FieldElem FieldCtx::from_coeffs(const std::vector<Residue>& coeffs) const {
    if (coeffs.size() > degree()) throw Error(ErrorCode::InvalidArgument, "too many coefficients");
    std::uint64_t code = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) code = code * p_ + coeffs[k] % p_;
    return FieldElem{static_cast<std::uint32_t>(code)};
}

std::vector<Residue> FieldCtx::coeffs(FieldElem a) const {
    std::vector<Residue> out(degree(), 0);
    std::uint32_t t = a.code();
    for (auto& c : out) {
        c = t % p_;
        t /= p_;
    }
    return out;
}

FieldElem FieldCtx::add_digits(FieldElem a, FieldElem b) const noexcept {
    if (p_ == 2) return FieldElem{a.code() ^ b.code()};
    std::uint32_t x = a.code(), y = b.code(), out = 0, scale = 1;
    while (x || y) {
        out += modp::add(x % p_, y % p_, p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return FieldElem{out};
}

FieldElem FieldCtx::mul_poly(FieldElem a, FieldElem b) const noexcept {
    const FpPoly prod = FpPoly(p_, coeffs(a)) * FpPoly(p_, coeffs(b));
    const FpPoly r = prod % modulus_;
    return from_coeffs(r.coeffs());
}

FieldElem FieldCtx::pow_slow(FieldElem a, std::uint64_t k) const noexcept {
    FieldElem result = one();
    while (k) {
        if (k & 1) result = mul_poly(result, a);
        a = mul_poly(a, a);
        k >>= 1;
    }
    return result;
}

void FieldCtx::build_tables() {
    const std::uint64_t order = size_ - 1;
    const auto factors = prime_divisors(order);
    FieldElem g{};
    for (std::uint32_t c = 2; c < size_; ++c) {
        const FieldElem cand{c};
        const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) {
            return pow_slow(cand, order / r) != one();
        });
        if (primitive) {
            g = cand;
            break;
        }
    }
    // size_ >= 4, so a primitive element always exists among codes >= 2.
    generator_ = g;
    exp_.resize(order);
    log_.assign(size_, kNoLog);
    FieldElem cur = one();
    for (std::uint64_t k = 0; k < order; ++k) {
        exp_[k] = cur.code();
        log_[cur.code()] = static_cast<std::uint32_t>(k);
        cur = mul_poly(cur, g);
    }
    zech_.resize(order);
    for (std::uint64_t k = 0; k < order; ++k) {
        const FieldElem s = add_digits(one(), FieldElem{exp_[k]});
        zech_[k] = s.is_zero() ? kNoLog : log_[s.code()];
    }
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const noexcept {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (p_ == 2 || !has_tables()) return add_digits(a, b);
    const std::uint64_t order = size_ - 1;
    const std::uint64_t la = log_[a.code()], lb = log_[b.code()];
    const std::uint32_t z = zech_[(lb + order - la) % order];
    if (z == kNoLog) return zero();
    return FieldElem{exp_[(la + z) % order]};
}

FieldElem FieldCtx::neg(FieldElem a) const noexcept {
    if (p_ == 2) return a;
    std::uint32_t x = a.code(), out = 0, scale = 1;
    while (x) {
        out += modp::neg(x % p_, p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return FieldElem{out};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const noexcept {
    if (a.is_zero() || b.is_zero()) return zero();
    if (!has_tables()) return mul_poly(a, b);
    const std::uint64_t order = size_ - 1;
    return FieldElem{exp_[(std::uint64_t{log_[a.code()]} + log_[b.code()]) % order]};
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of 0 in F_" + std::to_string(size_));
    return pow(a, -1);
}

FieldElem FieldCtx::pow(FieldElem a, std::int64_t k) const {
    const auto order = static_cast<std::int64_t>(size_ - 1);
    if (a.is_zero()) {
        if (k < 0) throw Error(ErrorCode::ZeroInverse, "negative power of 0");
        return k == 0 ? one() : zero();
    }
    std::int64_t r = k % order;
    if (r < 0) r += order;
    const auto kk = static_cast<std::uint64_t>(r);
    if (!has_tables()) return pow_slow(a, kk);
    return FieldElem{exp_[std::uint64_t{log_[a.code()]} * kk % static_cast<std::uint64_t>(order)]};
}

bool FieldCtx::is_primitive_cube_root(FieldElem y) const noexcept {
    return add(add(mul(y, y), y), one()).is_zero();
}

std::vector<FieldElem> FieldCtx::subfield_q_members() const {
    std::vector<FieldElem> out;
    out.reserve(q_);
    for (std::uint64_t c = 0; c < size_; ++c) {
        const FieldElem z{static_cast<std::uint32_t>(c)};
        if (pow(z, static_cast<std::int64_t>(q_)) == z) out.push_back(z);
    }
    return out;
}

FieldDescriptor parse_field_descriptor(std::string_view text) {
    auto parse_u32 = [&](std::string_view s) {
        std::uint32_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
            throw Error(ErrorCode::InvalidArgument, "bad field descriptor '" + std::string(text) + "'");
        }
        return v;
    };
    const auto caret = text.find('^');
    FieldDescriptor d{};
    if (caret == std::string_view::npos) {
        d = {parse_u32(text), 1};
    } else {
        d = {parse_u32(text.substr(0, caret)), parse_u32(text.substr(caret + 1))};
    }
    if (!is_prime(d.p)) throw Error(ErrorCode::NonPrimeP, std::to_string(d.p) + " is not prime");
    if (d.e == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be >= 1");
    return d;
}

}  // namespace ppbinom
