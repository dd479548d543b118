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

#include "ppbinom/poly.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "ppbinom/errors.hpp"

namespace ppbinom {

ZDivMod divmod_unit_lead(const ZPoly& num, const ZPoly& den) {
    if (den.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
    const BigInt lc = den.lead();
    if (abs(lc) != 1) throw Error(ErrorCode::InvalidArgument, "divisor must have leading coefficient +-1");
    std::vector<BigInt> r = num.coeffs();
    const int dd = den.degree();
    if (num.degree() < dd) return {ZPoly{}, num};
    std::vector<BigInt> quo(static_cast<std::size_t>(num.degree() - dd + 1), BigInt(0));
    for (int k = num.degree(); k >= dd; --k) {
        const BigInt c = r[static_cast<std::size_t>(k)] * lc;  // lc = +-1 is its own inverse
        quo[static_cast<std::size_t>(k - dd)] = c;
        if (c == 0) continue;
        for (int t = 0; t <= dd; ++t) r[static_cast<std::size_t>(k - dd + t)] -= c * den.coeffs()[static_cast<std::size_t>(t)];
    }
    r.resize(static_cast<std::size_t>(dd));
    return {ZPoly(std::move(quo)), ZPoly(std::move(r))};
}

QPoly divide_exact(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
    std::vector<BigRat> r = num.coeffs();
    const int dd = den.degree();
    if (num.is_zero()) return {};
    if (num.degree() < dd) throw Error(ErrorCode::NotDivisible, "divisor has larger degree");
    std::vector<BigRat> quo(static_cast<std::size_t>(num.degree() - dd + 1), BigRat(0));
    for (int k = num.degree(); k >= dd; --k) {
        const BigRat c = r[static_cast<std::size_t>(k)] / den.lead();
        quo[static_cast<std::size_t>(k - dd)] = c;
        if (c == 0) continue;
        for (int t = 0; t <= dd; ++t) r[static_cast<std::size_t>(k - dd + t)] -= c * den.coeffs()[static_cast<std::size_t>(t)];
    }
    for (int k = 0; k < dd; ++k) {
        if (r[static_cast<std::size_t>(k)] != 0) throw Error(ErrorCode::NotDivisible, "nonzero remainder");
    }
    return QPoly(std::move(quo));
}

ZPoly pseudo_remainder(const ZPoly& num, const ZPoly& den) {
    if (den.is_zero()) throw Error(ErrorCode::NotDivisible, "pseudo-division by the zero polynomial");
    const int dd = den.degree();
    if (num.degree() < dd) return num;
    const BigInt& lc = den.lead();
    std::vector<BigInt> r = num.coeffs();
    for (int k = num.degree(); k >= dd; --k) {
        const BigInt c = r[static_cast<std::size_t>(k)];
        // r <- lc * r - c * x^{k-dd} * den
        for (auto& x : r) x *= lc;
        if (c != 0) {
            for (int t = 0; t <= dd; ++t) r[static_cast<std::size_t>(k - dd + t)] -= c * den.coeffs()[static_cast<std::size_t>(t)];
        }
    }
    r.resize(static_cast<std::size_t>(dd));
    return ZPoly(std::move(r));
}

BigInt content(const ZPoly& f) {
    BigInt g = 0;
    for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly divide_exact(const ZPoly& f, const BigInt& d) {
    std::vector<BigInt> v = f.coeffs();
    for (auto& c : v) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
            throw Error(ErrorCode::NotDivisible, "coefficient not divisible by " + d.get_str());
        }
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return ZPoly(std::move(v));
}

ZPoly primitive_part(const ZPoly& f) {
    if (f.is_zero()) return f;
    return divide_exact(f, content(f));
}

QPoly to_qpoly(const ZPoly& f) {
    std::vector<BigRat> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.emplace_back(c);
    return QPoly(std::move(v));
}

namespace {

template <class Coeff>
std::string pretty_impl(const DensePoly<Coeff>& f, char var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const Coeff& c = f.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Coeff mag = abs(c);
        if (negative) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

template <class Coeff>
std::string terms_impl(const DensePoly<Coeff>& f, char var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const Coeff& c = f.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << c.get_str() << '*' << var << '^' << k;
    }
    return os.str();
}

template <class Coeff>
DensePoly<Coeff> terms_parse(const std::string& text, char var) {
    std::istringstream is(text);
    std::string tok;
    std::vector<Coeff> v;
    bool any = false;
    while (is >> tok) {
        any = true;
        if (tok == "0") continue;
        const std::string marker = std::string("*") + var + "^";
        const auto pos = tok.find(marker);
        if (pos == std::string::npos) throw Error(ErrorCode::InvalidArgument, "bad term '" + tok + "'");
        Coeff c;
        std::size_t k = 0;
        try {
            c = Coeff(tok.substr(0, pos));
            k = std::stoul(tok.substr(pos + marker.size()));
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "bad term '" + tok + "'");
        }
        if (v.size() <= k) v.resize(k + 1, Coeff(0));
        v[k] += c;
    }
    if (!any) throw Error(ErrorCode::InvalidArgument, "empty polynomial text");
    for (auto& c : v) {
        if constexpr (std::is_same_v<Coeff, BigRat>) c.canonicalize();
    }
    return DensePoly<Coeff>(std::move(v));
}

template <class Coeff>
std::string json_impl(const DensePoly<Coeff>& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : f.coeffs()) arr.push_back(c.get_str());
    return arr.dump();
}

template <class Coeff>
DensePoly<Coeff> json_parse(const std::string& text) {
    std::vector<Coeff> v;
    try {
        const auto arr = nlohmann::json::parse(text);
        if (!arr.is_array()) throw Error(ErrorCode::InvalidArgument, "expected a JSON array");
        for (const auto& item : arr) {
            Coeff c(item.get<std::string>());
            if constexpr (std::is_same_v<Coeff, BigRat>) c.canonicalize();
            v.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::InvalidArgument, e.what());
    }
    return DensePoly<Coeff>(std::move(v));
}

}  // namespace

std::string to_pretty(const ZPoly& f, char var) { return pretty_impl(f, var); }
std::string to_pretty(const QPoly& f, char var) { return pretty_impl(f, var); }
std::string to_terms(const ZPoly& f, char var) { return terms_impl(f, var); }
std::string to_terms(const QPoly& f, char var) { return terms_impl(f, var); }
ZPoly zpoly_from_terms(const std::string& text, char var) { return terms_parse<BigInt>(text, var); }
QPoly qpoly_from_terms(const std::string& text, char var) { return terms_parse<BigRat>(text, var); }
std::string to_json_array(const ZPoly& f) { return json_impl(f); }
std::string to_json_array(const QPoly& f) { return json_impl(f); }
ZPoly zpoly_from_json_array(const std::string& json) { return json_parse<BigInt>(json); }
QPoly qpoly_from_json_array(const std::string& json) { return json_parse<BigRat>(json); }

}  // namespace ppbinom
