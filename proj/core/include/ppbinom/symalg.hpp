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

#ifndef PPBINOM_SYMALG_HPP
#define PPBINOM_SYMALG_HPP

// Exact symbolic side of the classification: the bracket polynomial B_alpha(v)
// whose vanishing encodes S(alpha, a) = 0, the integer polynomials g_alpha
// extracted from it, integer resultants and the mod-p gcd chains used to
// eliminate characteristics.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ppbinom/ffield.hpp"
#include "ppbinom/poly.hpp"

namespace ppbinom {

/// x(x-1)...(x-n+1)/n! over Q.
BigRat gen_binom(const BigRat& x, unsigned n);

/// B_alpha(v) = sum_{i=0}^{alpha} (-1)^i C(alpha,i)
///              sum_{l=0}^{2} C(i + (2alpha-1+l)/3, alpha) v^{3i+l}.
/// Requires alpha = 2 mod 3, alpha >= 2 (BadAlpha otherwise).
QPoly bracket_poly(unsigned alpha);

struct GPolyRecord {
    unsigned alpha = 0;
    /// Smallest d with 3^d * bracket integral.
    unsigned d_alpha = 0;
    QPoly bracket;
    ZPoly g;
    /// Smallest q for which S(alpha, a) is given by the bracket (2alpha+4).
    std::uint64_t q_bound = 0;
};

/// 3^d * B(v) = v (v^2+v+1) * rev_{3alpha-1}(g)(v), solved for g.
/// Throws FractionalResidue if the bracket has a denominator that is not a
/// power of 3, and NotDivisible if v(v^2+v+1) does not divide it.
GPolyRecord g_poly(unsigned alpha);

enum class BridgeForm {
    /// Evaluate at y = a^{(q+1)/3}.
    Printed,
    /// Evaluate at the conjugate y^q.
    Conjugate,
};

/// (-a)^{(alpha+1)q/3} z^{-3alpha-2} (z^2+z+1) 3^{-d_alpha} g_alpha(z) in F_{q^2}.
/// With BridgeForm::Conjugate this equals s_q(ctx, a, alpha) for every
/// nonzero a once q >= q_bound; with BridgeForm::Printed only when y lies in
/// the subfield F_q (then y^q = y). Requires 3 | q+1 and a != 0.
FieldElem g_bridge(const FieldCtx& ctx, FieldElem a, const GPolyRecord& rec, BridgeForm form);

/// Res(f, g) over Z by the subresultant PRS.
BigInt resultant_z(const ZPoly& f, const ZPoly& g);

struct Factorization {
    int sign = 1;
    std::vector<std::pair<BigInt, unsigned>> factors;  // ascending primes
    /// Unfactored part (1 when complete).
    BigInt cofactor = 1;
    bool complete = true;
};

/// Trial division by every integer up to `bound`. A leftover cofactor no
/// larger than bound^2 is prime; anything larger is reported incomplete.
Factorization factor_trial(const BigInt& n, std::uint64_t bound = 1'000'000);

FpPoly reduce_mod_p(const ZPoly& f, std::uint32_t p);
/// Monic gcd of the mod-p reductions; AllZero if every one reduces to 0.
FpPoly gcd_mod_p(std::span<const ZPoly> polys, std::uint32_t p);
Residue eval_mod_p(const ZPoly& f, std::int64_t x, std::uint32_t p);
/// f evaluated at an element of F_{q^2}, coefficients taken mod p.
FieldElem eval_in_field(const ZPoly& f, const FieldCtx& ctx, FieldElem x);

}  // namespace ppbinom

#endif  // PPBINOM_SYMALG_HPP
