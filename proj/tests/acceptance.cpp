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

// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Every check is exact; time limits are wall clock.
//
// `--expect-red 2,3` changes only the exit status: it is then zero exactly
// when the failing criteria are the listed ones. The printed verdicts are
// unaffected.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ppbinom/classify.hpp"
#include "ppbinom/errors.hpp"
#include "ppbinom/ffield.hpp"
#include "ppbinom/hermite.hpp"
#include "ppbinom/reference.hpp"
#include "ppbinom/symalg.hpp"

namespace {

using namespace ppbinom;

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int number;
    std::string title;
    double limit_s;  // 0 = no time limit
    std::function<Outcome()> body;
};

FieldCtx field_for(std::uint64_t q) {
    const auto pp = as_prime_power(q);
    return FieldCtx(pp.p, pp.e);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

// -------------------------------------------------------------------- 1

Outcome g_fixtures() {
    const std::size_t expected_len[] = {6, 15, 24, 33, 42};
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < std::size(reference::kAlphas); ++i) {
        const unsigned alpha = reference::kAlphas[i];
        const auto rec = g_poly(alpha);
        const auto tag = "g_" + std::to_string(alpha);
        if (rec.g.coeffs().size() != expected_len[i]) bad.push_back(tag + " length");
        if (rec.g != reference::printed_g(alpha)) bad.push_back(tag + " coefficients");
        if (rec.d_alpha != reference::kDAlpha[i]) bad.push_back("d_" + std::to_string(alpha));
    }
    if (!bad.empty()) return {false, "differs: " + join(bad, ", ")};
    return {true, "120 coefficients and d = (2,6,10,15,19) reproduced"};
}

// -------------------------------------------------------------------- 2

Outcome resultant_value() {
    const BigInt r = resultant_z(g_poly(2).g, g_poly(5).g);
    const auto f = factor_trial(r);
    const BigInt published = reference::resultant_g2_g5();

    bool same_factors = f.complete && f.factors.size() == reference::resultant_g2_g5_factors().size();
    if (same_factors) {
        const auto expected = reference::resultant_g2_g5_factors();
        for (std::size_t i = 0; i < expected.size(); ++i) {
            same_factors = same_factors && f.factors[i].first == static_cast<unsigned long>(expected[i].first) &&
                           f.factors[i].second == expected[i].second;
        }
    }
    std::ostringstream d;
    d << "computed " << r.get_str() << (f.complete ? ", factorization complete" : ", factorization incomplete")
      << (same_factors ? " with the published primes and multiplicities" : " with different primes");
    if (r != published && abs(r) == abs(published)) d << "; sign -1 is absent from the published product";
    return {r == published && same_factors, d.str()};
}

// -------------------------------------------------------------------- 3

Outcome elimination() {
    const auto rep = run_elimination();
    std::vector<std::string> bad;
    int relevant = 0;
    for (const auto& c : rep.checks) {
        const bool in_scope = c.name.rfind("surviving", 0) == 0 || c.name.rfind("gcd(", 0) == 0 ||
                              c.name.rfind("g_11(", 0) == 0 || c.name.rfind("g_14(", 0) == 0;
        if (!in_scope) continue;
        ++relevant;
        if (!c.match) bad.push_back(c.name + " = " + c.actual + " (published " + c.expected + ")");
    }
    std::ostringstream d;
    d << (relevant - static_cast<int>(bad.size())) << "/" << relevant << " reproduced";
    if (!bad.empty()) d << "; " << join(bad, "; ");
    return {bad.empty() && relevant == 8, d.str()};
}

// -------------------------------------------------------------------- 4

Outcome theorem_sweep() {
    const std::map<std::uint64_t, std::uint64_t> counts{{2, 2},   {5, 10}, {8, 15},  {11, 16},
                                                        {17, 12}, {23, 8}, {29, 10}, {32, 22}};
    SweepOptions opt;
    opt.q_max = 32;
    opt.method = SweepMethod::Brute;
    opt.jobs = 1;
    const auto res = sweep(opt);
    std::vector<std::string> bad;
    std::uint64_t checked = 0;
    for (const auto& s : res.per_q) {
        checked += s.checked;
        const auto it = counts.find(s.q);
        const std::uint64_t want = it == counts.end() ? 0 : it->second;
        if (s.checked != s.q * s.q - 1) bad.push_back("q=" + std::to_string(s.q) + " incomplete");
        if (s.pp_count != want) {
            bad.push_back("q=" + std::to_string(s.q) + " count " + std::to_string(s.pp_count));
        }
    }
    std::ostringstream d;
    d << res.per_q.size() << " q, " << checked << " pairs, " << res.disagreements.size() << " disagreements";
    if (!bad.empty()) d << "; " << join(bad, ", ");
    return {bad.empty() && res.disagreements.empty() && res.per_q.size() == prime_powers_up_to(32).size(), d.str()};
}

// -------------------------------------------------------------------- 5

Outcome hermite_equivalence() {
    SweepOptions opt;
    opt.q_max = 13;
    opt.method = SweepMethod::Both;
    const auto res = sweep(opt);
    std::size_t diff = 0;
    for (const auto& v : res.verdicts) diff += !(v.brute && v.hermite && *v.brute == *v.hermite);
    std::ostringstream d;
    d << res.verdicts.size() << " pairs, " << diff << " disagreements";
    return {diff == 0 && !res.verdicts.empty(), d.str()};
}

// -------------------------------------------------------------------- 6

FieldElem identity_rhs(const FieldCtx& ctx, FieldElem a, std::int64_t alpha, FieldElem s) {
    const auto q = static_cast<std::int64_t>(ctx.q());
    return ctx.neg(ctx.mul(ctx.pow(a, (alpha + 1) * (1 - q)), s));
}

Outcome power_sum_identity() {
    std::uint64_t checked = 0, failed = 0;
    auto check = [&](const FieldCtx& ctx, FieldElem a, std::uint64_t alpha) {
        ++checked;
        const auto lhs = power_sum(ctx, a, reduced_index(ctx.q(), alpha));
        failed += lhs != identity_rhs(ctx, a, static_cast<std::int64_t>(alpha), s_q(ctx, a, alpha));
    };
    for (std::uint64_t q : {5u, 8u, 11u}) {
        const FieldCtx ctx = field_for(q);
        for (std::uint64_t c = 1; c < ctx.size(); ++c) {
            for (std::uint64_t alpha = 0; alpha < q; ++alpha) check(ctx, FieldElem{static_cast<std::uint32_t>(c)}, alpha);
        }
    }
    std::mt19937_64 rng(20240607);
    for (std::uint64_t q : {17u, 23u, 29u, 32u}) {
        const FieldCtx ctx = field_for(q);
        std::uniform_int_distribution<std::uint32_t> pick_a(1, static_cast<std::uint32_t>(ctx.size() - 1));
        std::uniform_int_distribution<std::uint64_t> pick_alpha(0, q - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const FieldElem a{pick_a(rng)};
            check(ctx, a, pick_alpha(rng));
        }
    }
    std::ostringstream d;
    d << checked << " (q, a, alpha) checked, " << failed << " failures";
    return {failed == 0, d.str()};
}

// -------------------------------------------------------------------- 7

Outcome cube_root_case() {
    std::uint64_t elements = 0, failed = 0;
    for (std::uint64_t q : {2u, 8u, 32u, 5u, 11u, 17u, 23u, 29u}) {
        const FieldCtx ctx = field_for(q);
        const auto qi = static_cast<std::int64_t>(q);
        const std::uint64_t half = q % 2 ? (q * q - 1) / 2 : 0;
        for (std::uint64_t c = 1; c < ctx.size(); ++c) {
            const FieldElem a{static_cast<std::uint32_t>(c)};
            const FieldElem y = ctx.pow(a, (qi + 1) / 3);
            if (!ctx.is_primitive_cube_root(y)) continue;
            ++elements;
            const auto profile = power_sum_profile(ctx, a);
            bool ok = !profile.entries.empty();
            for (const auto& [s, value] : profile.entries) {
                if (s == half) {
                    const FieldElem want =
                        ctx.mul(ctx.pow(a, -(qi + 1) * (3 * qi - 2) / 6), ctx.add(ctx.one(), y));
                    ok = ok && value == want;
                } else {
                    ok = ok && value.is_zero();
                }
            }
            failed += !ok;
        }
    }
    std::ostringstream d;
    d << elements << " elements with y a primitive cube root, " << failed << " failures";
    return {failed == 0 && elements > 0, d.str()};
}

// -------------------------------------------------------------------- 8

Outcome numeric_bridge() {
    const std::uint64_t qs[] = {8, 11, 17, 23, 29, 32, 41, 47};
    std::mt19937_64 rng(3141592653);
    std::uint64_t checked = 0, printed_fail = 0, conjugate_fail = 0;
    for (std::size_t i = 0; i < std::size(reference::kAlphas); ++i) {
        const auto rec = g_poly(reference::kAlphas[i]);
        for (std::uint64_t q : qs) {
            if (q < reference::kQThreshold[i]) continue;
            const FieldCtx ctx = field_for(q);
            std::uniform_int_distribution<std::uint32_t> pick_a(1, static_cast<std::uint32_t>(ctx.size() - 1));
            for (int trial = 0; trial < 50; ++trial) {
                const FieldElem a{pick_a(rng)};
                const FieldElem s = s_q(ctx, a, rec.alpha);
                ++checked;
                printed_fail += g_bridge(ctx, a, rec, BridgeForm::Printed) != s;
                conjugate_fail += g_bridge(ctx, a, rec, BridgeForm::Conjugate) != s;
            }
        }
    }
    std::ostringstream d;
    d << checked << " (q, alpha, a) checked; evaluated at y: " << printed_fail
      << " failures; evaluated at y^q: " << conjugate_fail << " failures";
    return {printed_fail == 0, d.str()};
}

// -------------------------------------------------------------------- 9

Outcome full_scale() {
    SweepOptions opt;
    opt.q_max = 128;
    opt.q_cap = kHardSweepCap;
    opt.method = SweepMethod::Brute;
    const auto res = sweep(opt);
    std::uint64_t checked = 0, pp128 = 0;
    for (const auto& s : res.per_q) {
        checked += s.checked;
        if (s.q == 128) pp128 = s.pp_count;
    }
    std::ostringstream d;
    d << "brute force over every q <= 128: " << checked << " pairs, " << res.disagreements.size()
      << " disagreements, " << pp128 << " PPs at q = 128; arbitrary k is not checked";
    return {res.disagreements.empty() && pp128 > 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    std::optional<std::set<int>> expect_red;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--expect-red" && i + 1 < argc) {
            expect_red.emplace();
            std::stringstream list(argv[++i]);
            for (std::string item; std::getline(list, item, ',');) expect_red->insert(std::atoi(item.c_str()));
        } else {
            std::fprintf(stderr, "usage: %s [--expect-red N[,N...]]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "g-polynomial fixtures", 1, g_fixtures},
        {2, "resultant of g_2 and g_5", 5, resultant_value},
        {3, "elimination pipeline intermediates", 5, elimination},
        {4, "theorem equivalence sweep, q <= 32", 60, theorem_sweep},
        {5, "Hermite test equals brute force, q <= 13", 30, hermite_equivalence},
        {6, "power-sum identity", 0, power_sum_identity},
        {7, "cube-root power-sum profile", 30, cube_root_case},
        {8, "numeric bridge from g_alpha to S", 0, numeric_bridge},
        {9, "full-scale run, q = 128", 900, full_scale},
    };

    int failures = 0;
    std::set<int> red;
    for (const auto& c : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            out = c.body();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_s == 0 || secs < c.limit_s;
        const bool pass = out.ok && in_time;
        failures += !pass;
        if (!pass) red.insert(c.number);

        char timing[64];
        if (c.limit_s > 0) {
            std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, c.limit_s);
        } else {
            std::snprintf(timing, sizeof timing, "%.2fs", secs);
        }
        std::printf("criterion %d %s  %s (%s): %s%s\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(), timing,
                    out.detail.c_str(), in_time ? "" : "; over the time limit");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    if (expect_red) {
        const bool as_expected = red == *expect_red;
        std::printf("failing criteria %s the expected set\n", as_expected ? "match" : "do not match");
        return as_expected ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
