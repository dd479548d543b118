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

#ifndef PPBINOM_CLASSIFY_HPP
#define PPBINOM_CLASSIFY_HPP

// The classification of a*x + x^{3q-2} as a permutation of F_{q^2}: the
// closed-form predicate, its sporadic table, the elimination argument that
// bounds the sporadic characteristics, and exhaustive sweeps comparing the
// predicate with brute force and with the Hermite test.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ppbinom/ffield.hpp"
#include "ppbinom/poly.hpp"
#include "ppbinom/symalg.hpp"

namespace ppbinom {

/// One sporadic row: f permutes F_{q^2} when a^k satisfies the condition.
struct SporadicSpec {
    std::uint64_t q;
    unsigned k;
    /// Either a root of the product of the given factors (evaluated in
    /// F_{q^2}, coefficients mod p) or membership in a residue set.
    std::variant<std::vector<ZPoly>, std::vector<std::int64_t>> condition;
    std::string label;
};

const std::vector<SporadicSpec>& sporadic_table();

/// q = 2^{odd} and a^{(q+1)/3} is a primitive cube root of unity.
bool in_infinite_family(const FieldCtx& ctx, FieldElem a);
bool matches_sporadic(const SporadicSpec& row, const FieldCtx& ctx, FieldElem a);
bool theorem_predicate(const FieldCtx& ctx, FieldElem a);

inline constexpr std::uint64_t kCensusTargets[] = {2, 5, 8, 11, 17, 23, 29, 32};

struct SporadicCensus {
    std::uint64_t q = 0;
    std::vector<FieldElem> elements;  // ascending codes
};

/// All nonzero a with theorem_predicate true; UnsupportedQ outside kCensusTargets.
SporadicCensus sporadic_census(std::uint64_t q);

struct PrimePower {
    std::uint64_t q;
    std::uint32_t p;
    std::uint32_t e;
};

/// Prime powers 2 <= q <= bound, ascending.
std::vector<PrimePower> prime_powers_up_to(std::uint64_t bound);
/// Throws InvalidArgument when q is not a prime power.
PrimePower as_prime_power(std::uint64_t q);

struct PPVerdict {
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    FieldElem a;
    std::optional<bool> brute;
    std::optional<bool> hermite;
    bool predicted = false;
    /// Every computed test equals the prediction.
    bool agree = false;
};

enum class SweepMethod { Brute, Hermite, Both };

std::optional<SweepMethod> parse_sweep_method(std::string_view text);
std::string_view to_string(SweepMethod m);

PPVerdict evaluate_verdict(const FieldCtx& ctx, FieldElem a, SweepMethod method);

struct SweepOptions {
    std::uint64_t q_max = 13;
    SweepMethod method = SweepMethod::Both;
    unsigned jobs = 1;
    /// q_max above this is rejected with SizeExceeded.
    std::uint64_t q_cap = 32;
    /// When set, only this many a per q are checked, drawn with `seed`.
    std::optional<std::size_t> sample;
    std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kDefaultSweepCap = 32;
inline constexpr std::uint64_t kHardSweepCap = 128;

struct QSummary {
    std::uint64_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint64_t checked = 0;
    /// By brute force when it ran, otherwise by the Hermite test.
    std::uint64_t pp_count = 0;
    std::uint64_t predicted_count = 0;
    std::uint64_t disagreements = 0;
};

struct SweepResult {
    std::vector<PPVerdict> verdicts;  // sorted by (q, a)
    std::vector<QSummary> per_q;
    std::vector<PPVerdict> disagreements;
};

SweepResult sweep(const SweepOptions& options);

/// Fibers of a -> a^{(q+1)/3} on F_{q^2}^*, each of size (q+1)/3, ordered
/// by smallest member. Requires 3 | q+1.
std::vector<std::vector<FieldElem>> coset_classes(const FieldCtx& ctx);

struct RootEvaluation {
    Residue root = 0;
    unsigned alpha = 0;
    Residue value = 0;
};

struct PrimeChain {
    std::uint32_t p = 0;
    FpPoly gcd;                     // gcd(g_2, g_5, g_8) mod p
    std::vector<Residue> roots;     // roots of gcd in F_p, 0 included if present
    bool gcd_splits = true;         // gcd is a product of linear factors over F_p
    std::vector<RootEvaluation> evaluations;
    /// Exclusive upper bound on q forced by the chain (0 = unbounded).
    std::uint64_t q_limit = 0;
    std::vector<std::uint64_t> candidate_q;
    std::string note;
};

/// One comparison of a recomputed intermediate against its published value.
struct FixtureCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool match = false;
};

struct EliminationReport {
    std::vector<GPolyRecord> g;  // alpha = 2, 5, 8, 11, 14
    BigInt resultant;
    Factorization factorization;
    std::vector<std::uint32_t> rejected_primes;
    std::vector<std::uint32_t> surviving_primes;
    std::vector<PrimeChain> chains;
    /// q below the elimination range that only a direct search settles.
    std::vector<std::uint64_t> small_q_searched;
    /// Sporadic q left after elimination (the p = 2 family is handled by
    /// the cube-root profile, not here).
    std::vector<std::uint64_t> candidate_q;
    std::vector<FixtureCheck> checks;

    bool fixtures_match() const;
};

/// Runs the elimination end to end and records a FixtureCheck for every
/// published intermediate. Never throws on a mismatch.
EliminationReport run_elimination();
/// run_elimination(), throwing FixtureMismatch (naming every failed check)
/// unless all published intermediates are reproduced.
EliminationReport elimination_pipeline();

}  // namespace ppbinom

#endif  // PPBINOM_CLASSIFY_HPP
