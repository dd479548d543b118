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

#ifndef PPBINOM_HERMITE_HPP
#define PPBINOM_HERMITE_HPP

// Power sums of f = a*x + x^{3q-2} over F_{q^2} and the Hermite-criterion
// machinery built on them.
//
// For 0 <= alpha <= q-1 only the exponents s = alpha + (q-1-alpha)*q can
// carry a nonzero power sum, and
//
//     sum_x f(x)^s = -a^{(alpha+1)(1-q)} * S(alpha, a),
//     S(alpha, a)  = sum C(alpha, i) C(q-1-alpha, j) a^{-i-jq},
//
// the sum running over pairs with -alpha-1+3(i-j) a multiple of q+1.
// S is stored without the leading minus.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ppbinom/ffield.hpp"

namespace ppbinom {

class BinomialMap {
public:
    /// Throws PreconditionViolated when a == 0.
    BinomialMap(const FieldCtx& ctx, FieldElem a);

    const FieldCtx& ctx() const noexcept { return *ctx_; }
    FieldElem a() const noexcept { return a_; }
    std::uint64_t exponent() const noexcept { return 3 * ctx_->q() - 2; }

    /// a*x + x^{3q-2}, evaluated literally (no reduction of the exponent).
    FieldElem operator()(FieldElem x) const {
        return ctx_->add(ctx_->mul(a_, x), ctx_->pow(x, static_cast<std::int64_t>(exponent())));
    }

private:
    const FieldCtx* ctx_;
    FieldElem a_;
};

/// The exponent alpha + (q-1-alpha)*q.
std::uint64_t reduced_index(std::uint64_t q, std::uint64_t alpha) noexcept;

/// Exact sum of f(x)^s over all of F_{q^2}; the ground truth.
FieldElem power_sum(const FieldCtx& ctx, FieldElem a, std::uint64_t s);

/// S(alpha, a), computed from the at most three admissible differences
/// i - j. Cost O(q).
FieldElem s_q(const FieldCtx& ctx, FieldElem a, std::uint64_t alpha);

/// Multiples l(q+1) of q+1 inside the exponent range of -alpha-1+3(i-j).
///
/// Two upper ends are recorded. The displayed interval in the source
/// derivation ends at alpha-1, but the exponent range actually reached
/// (and used for every computation here) is [2alpha+2-3q, 2alpha-1].
struct IntervalCensus {
    std::int64_t q = 0;
    std::int64_t alpha = 0;
    std::int64_t lo = 0;
    std::int64_t hi_stated = 0;
    std::int64_t hi_working = 0;
    std::vector<std::int64_t> multiples;         // l with l(q+1) in [lo, hi_working]
    std::vector<std::int64_t> stated_multiples;  // l with l(q+1) in [lo, hi_stated]
};

IntervalCensus interval_census(std::uint64_t q, std::uint64_t alpha);

/// Bijectivity by direct evaluation with early exit on the first collision.
bool brute_pp_test(const FieldCtx& ctx, FieldElem a);

/// True iff 0 is the only root of f in F_{q^2}, by enumeration.
bool only_trivial_root(const FieldCtx& ctx, FieldElem a);

/// Hermite criterion on the reduced index set: the root condition plus
/// S(alpha, a) = 0 for every alpha.
bool hermite_pp_test(const FieldCtx& ctx, FieldElem a);

/// Hermite criterion over every exponent 1..q^2-2 from raw power sums.
/// Slow (O(q^4) per a); only accepted for q <= 8.
bool hermite_pp_test_full(const FieldCtx& ctx, FieldElem a);

struct PowerSumProfile {
    std::vector<std::pair<std::uint64_t, FieldElem>> entries;  // (s, sum f^s), alpha ascending
};

PowerSumProfile power_sum_profile(const FieldCtx& ctx, FieldElem a);

struct ProfileVerdict {
    PowerSumProfile profile;
    FieldElem y;
    /// (q^2-1)/2 for odd q, absent for even q.
    std::optional<std::uint64_t> exceptional_index;
    FieldElem expected_exceptional;
    bool holds = false;
};

/// Power-sum profile when y = a^{(q+1)/3} is a primitive cube root of
/// unity: every entry vanishes except, for odd q, the one at (q^2-1)/2,
/// which equals a^{-(q+1)(3q-2)/6}(1+y). Throws PreconditionViolated when
/// 3 does not divide q+1 or y^2+y+1 != 0.
ProfileVerdict cube_root_profile(const FieldCtx& ctx, FieldElem a);

}  // namespace ppbinom

#endif  // PPBINOM_HERMITE_HPP
