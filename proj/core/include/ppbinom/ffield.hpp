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

#ifndef PPBINOM_FFIELD_HPP
#define PPBINOM_FFIELD_HPP

// Exact arithmetic in F_p, F_p[x] and the extension F_{p^n} = F_p[x]/(m).
//
// Elements of F_{p^n} are identified with their coefficient vectors
// (c_0, ..., c_{n-1}) over F_p, and stored as the base-p integer
// sum c_k p^k. That integer is also the text/JSON encoding of an element
// and fixes the enumeration order of the whole field.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ppbinom {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

namespace modp {

inline Residue add(Residue a, Residue b, std::uint32_t p) noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p ? s - p : s);
}
inline Residue sub(Residue a, Residue b, std::uint32_t p) noexcept {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p - b);
}
inline Residue neg(Residue a, std::uint32_t p) noexcept { return a == 0 ? 0 : p - a; }
inline Residue mul(Residue a, Residue b, std::uint32_t p) noexcept {
    return static_cast<Residue>(std::uint64_t{a} * b % p);
}
Residue pow(Residue a, std::uint64_t k, std::uint32_t p) noexcept;
/// Inverse of a nonzero residue; throws ZeroInverse on 0.
Residue inv(Residue a, std::uint32_t p);
/// Canonical residue of a signed integer.
Residue reduce(std::int64_t v, std::uint32_t p) noexcept;

}  // namespace modp

/// C(m, k) mod p by Lucas' theorem. Out-of-range k (negative or above m)
/// gives 0, which is the convention the Hermite sums rely on.
Residue lucas_binom(std::uint32_t p, std::uint64_t m, std::int64_t k);

/// Dense polynomial over F_p, little-endian, no trailing zeros.
class FpPoly {
public:
    FpPoly() = default;
    explicit FpPoly(std::uint32_t p) : p_(p) {}
    FpPoly(std::uint32_t p, std::vector<Residue> coeffs);

    static FpPoly monomial(std::uint32_t p, std::size_t degree, Residue c = 1);

    std::uint32_t modulus() const noexcept { return p_; }
    const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Residue coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
    Residue lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return lead() == 1; }

    Residue evaluate(Residue x) const noexcept;
    FpPoly monic() const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly&, const FpPoly&) = default;

    /// Pretty form such as "x^2+x+1".
    std::string to_string(char var = 'x') const;

private:
    void trim() noexcept;

    std::uint32_t p_ = 2;
    std::vector<Residue> coeffs_;
};

struct FpDivMod {
    FpPoly quotient;
    FpPoly remainder;
};

FpDivMod divmod(const FpPoly& num, const FpPoly& den);
FpPoly operator%(const FpPoly& num, const FpPoly& den);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
FpPoly powmod(const FpPoly& base, std::uint64_t k, const FpPoly& mod);
/// Rabin's test.
bool is_irreducible(const FpPoly& m);
/// Roots in F_p in ascending order.
std::vector<Residue> roots_in_prime_field(const FpPoly& f);

class FieldElem {
public:
    constexpr FieldElem() = default;
    explicit constexpr FieldElem(std::uint32_t code) : code_(code) {}

    constexpr std::uint32_t code() const noexcept { return code_; }
    constexpr bool is_zero() const noexcept { return code_ == 0; }

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

private:
    std::uint32_t code_ = 0;
};

/// F_{p^n}, n = 2e, with q = p^e. Immutable once built; share by const&.
class FieldCtx {
public:
    static constexpr std::uint64_t kDefaultSizeBound = std::uint64_t{1} << 24;
    static constexpr std::uint64_t kTableBound = std::uint64_t{1} << 20;

    /// Builds the canonical context: the modulus is the first irreducible
    /// monic polynomial of degree 2e when the lower coefficients are read
    /// as a base-p integer and enumerated upward.
    FieldCtx(std::uint32_t p, std::uint32_t e, std::uint64_t size_bound = kDefaultSizeBound);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t degree() const noexcept { return 2 * e_; }
    std::uint64_t q() const noexcept { return q_; }
    /// q^2, the number of elements.
    std::uint64_t size() const noexcept { return size_; }
    const FpPoly& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !exp_.empty(); }
    /// Primitive element used for the log tables (zero when tables are off).
    FieldElem generator() const noexcept { return generator_; }

    FieldElem zero() const noexcept { return FieldElem{0}; }
    FieldElem one() const noexcept { return FieldElem{1}; }
    /// The image of an integer in the prime subfield.
    FieldElem from_int(std::int64_t v) const noexcept;
    /// Checked decoding of a serialized element.
    FieldElem from_code(std::uint64_t code) const;
    FieldElem from_coeffs(const std::vector<Residue>& coeffs) const;
    std::vector<Residue> coeffs(FieldElem a) const;

    FieldElem add(FieldElem a, FieldElem b) const noexcept;
    FieldElem sub(FieldElem a, FieldElem b) const noexcept;
    FieldElem neg(FieldElem a) const noexcept;
    FieldElem mul(FieldElem a, FieldElem b) const noexcept;
    FieldElem inv(FieldElem a) const;
    /// a^k; negative k is taken mod q^2-1 and requires a != 0.
    FieldElem pow(FieldElem a, std::int64_t k) const;

    bool is_primitive_cube_root(FieldElem y) const noexcept;
    /// {z : z^q = z} in ascending code order.
    std::vector<FieldElem> subfield_q_members() const;

    /// "p^e", e.g. "2^3".
    std::string descriptor() const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
    }

private:
    FieldElem add_digits(FieldElem a, FieldElem b) const noexcept;
    FieldElem mul_poly(FieldElem a, FieldElem b) const noexcept;
    FieldElem pow_slow(FieldElem a, std::uint64_t k) const noexcept;
    void build_tables();

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint64_t q_;
    std::uint64_t size_;
    FpPoly modulus_;
    FieldElem generator_{};
    std::vector<std::uint32_t> exp_;   // exp_[k] = g^k, k < size-1
    std::vector<std::uint32_t> log_;   // log_[code]
    std::vector<std::uint32_t> zech_;  // log(1 + g^k), kNoLog when 1 + g^k = 0
};

FieldCtx make_field(std::uint32_t p, std::uint32_t e);

struct FieldDescriptor {
    std::uint32_t p;
    std::uint32_t e;
};

/// Parses "p^e" (or a bare prime, meaning e = 1).
FieldDescriptor parse_field_descriptor(std::string_view text);

}  // namespace ppbinom

#endif  // PPBINOM_FFIELD_HPP
