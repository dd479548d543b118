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

#ifndef PPBINOM_POLY_HPP
#define PPBINOM_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace ppbinom {

using BigInt = mpz_class;
/// mpq_class keeps itself in lowest terms with a positive denominator as
/// long as every value passes through its arithmetic operators.
using BigRat = mpq_class;

/// Dense univariate polynomial, little-endian, no trailing zeros. The zero
/// polynomial is the empty vector.
template <class Coeff>
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    DensePoly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

    static DensePoly monomial(const Coeff& c, std::size_t degree) {
        std::vector<Coeff> v(degree + 1, Coeff(0));
        v[degree] = c;
        return DensePoly(std::move(v));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Coeff>& coeffs() const noexcept { return c_; }
    Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }
    const Coeff& lead() const { return c_.back(); }

    template <class X>
    X evaluate(const X& x) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    DensePoly& operator+=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    DensePoly& operator*=(const Coeff& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(DensePoly a, const Coeff& s) { return a *= s; }
    friend DensePoly operator-(DensePoly a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> v(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(v));
    }
    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

    /// Coefficients read backwards against a fixed degree:
    /// result_k = coeff(degree - k).
    DensePoly reversed(std::size_t degree) const {
        std::vector<Coeff> v(degree + 1, Coeff(0));
        for (std::size_t k = 0; k <= degree; ++k) v[k] = coeff(degree - k);
        return DensePoly(std::move(v));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using ZPoly = DensePoly<BigInt>;
using QPoly = DensePoly<BigRat>;

struct ZDivMod {
    ZPoly quotient;
    ZPoly remainder;
};

/// Division by a divisor whose leading coefficient is +-1 (no fractions).
ZDivMod divmod_unit_lead(const ZPoly& num, const ZPoly& den);
/// Exact division over Q; throws NotDivisible on a nonzero remainder.
QPoly divide_exact(const QPoly& num, const QPoly& den);
/// lc(den)^{deg num - deg den + 1} * num mod den.
ZPoly pseudo_remainder(const ZPoly& num, const ZPoly& den);
BigInt content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);
/// Exact coefficientwise division; throws NotDivisible otherwise.
ZPoly divide_exact(const ZPoly& f, const BigInt& d);

QPoly to_qpoly(const ZPoly& f);

/// "2y^5+3y^4-23y^3-8y^2-9y+44".
std::string to_pretty(const ZPoly& f, char var = 'y');
std::string to_pretty(const QPoly& f, char var = 'v');
/// Space-separated "coeff*y^k" terms, highest degree first:
/// "2*y^5 3*y^4 -23*y^3 -8*y^2 -9*y^1 44*y^0". Zero terms are omitted and
/// the zero polynomial is "0".
std::string to_terms(const ZPoly& f, char var = 'y');
std::string to_terms(const QPoly& f, char var = 'v');
/// Inverse of to_terms; throws InvalidArgument on malformed input.
ZPoly zpoly_from_terms(const std::string& text, char var = 'y');
QPoly qpoly_from_terms(const std::string& text, char var = 'v');
/// JSON array of decimal strings, index = power ("num/den" for rationals).
std::string to_json_array(const ZPoly& f);
std::string to_json_array(const QPoly& f);
ZPoly zpoly_from_json_array(const std::string& json);
QPoly qpoly_from_json_array(const std::string& json);

}  // namespace ppbinom

#endif  // PPBINOM_POLY_HPP
