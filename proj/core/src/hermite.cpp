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

#include "ppbinom/hermite.hpp"

#include <algorithm>
#include <string>

#include "ppbinom/errors.hpp"

namespace ppbinom {

namespace {

void require_nonzero(FieldElem a) {
    if (a.is_zero()) throw Error(ErrorCode::PreconditionViolated, "a must be nonzero");
}

// Floor/ceil division for a positive divisor.
std::int64_t floor_div(std::int64_t n, std::int64_t d) { return n >= 0 ? n / d : -((-n + d - 1) / d); }
std::int64_t ceil_div(std::int64_t n, std::int64_t d) { return -floor_div(-n, d); }

std::vector<std::int64_t> multiples_in(std::int64_t lo, std::int64_t hi, std::int64_t step) {
    std::vector<std::int64_t> out;
    for (std::int64_t l = ceil_div(lo, step); l * step <= hi; ++l) out.push_back(l);
    return out;
}

}  // namespace

BinomialMap::BinomialMap(const FieldCtx& ctx, FieldElem a) : ctx_(&ctx), a_(a) { require_nonzero(a); }

std::uint64_t reduced_index(std::uint64_t q, std::uint64_t alpha) noexcept { return alpha + (q - 1 - alpha) * q; }

FieldElem power_sum(const FieldCtx& ctx, FieldElem a, std::uint64_t s) {
    const BinomialMap f(ctx, a);
    FieldElem acc = ctx.zero();
    const auto ss = static_cast<std::int64_t>(s);
    for (std::uint64_t c = 1; c < ctx.size(); ++c) {
        acc = ctx.add(acc, ctx.pow(f(FieldElem{static_cast<std::uint32_t>(c)}), ss));
    }
    return acc;
}

IntervalCensus interval_census(std::uint64_t q, std::uint64_t alpha) {
    if (alpha >= q) {
        throw Error(ErrorCode::PreconditionViolated,
                    "alpha=" + std::to_string(alpha) + " outside [0, " + std::to_string(q - 1) + "]");
    }
    IntervalCensus c;
    c.q = static_cast<std::int64_t>(q);
    c.alpha = static_cast<std::int64_t>(alpha);
    c.lo = 2 * c.alpha + 2 - 3 * c.q;
    c.hi_stated = c.alpha - 1;
    c.hi_working = 2 * c.alpha - 1;
    c.multiples = multiples_in(c.lo, c.hi_working, c.q + 1);
    c.stated_multiples = multiples_in(c.lo, c.hi_stated, c.q + 1);
    return c;
}

FieldElem s_q(const FieldCtx& ctx, FieldElem a, std::uint64_t alpha) {
    require_nonzero(a);
    const auto q = static_cast<std::int64_t>(ctx.q());
    const auto al = static_cast<std::int64_t>(alpha);
    const auto census = interval_census(ctx.q(), alpha);
    const std::uint32_t p = ctx.p();

    FieldElem acc = ctx.zero();
    for (const std::int64_t l : census.multiples) {
        const std::int64_t num = al + 1 + l * (q + 1);
        if (num % 3 != 0) continue;
        const std::int64_t d = num / 3;  // i - j
        const std::int64_t i_lo = std::max<std::int64_t>(0, d);
        const std::int64_t i_hi = std::min<std::int64_t>(al, q - 1 - al + d);
        for (std::int64_t i = i_lo; i <= i_hi; ++i) {
            const std::int64_t j = i - d;
            const Residue c = modp::mul(lucas_binom(p, alpha, i),
                                        lucas_binom(p, static_cast<std::uint64_t>(q - 1 - al), j), p);
            if (c == 0) continue;
            acc = ctx.add(acc, ctx.mul(FieldElem{c}, ctx.pow(a, -(i + j * q))));
        }
    }
    return acc;
}

bool brute_pp_test(const FieldCtx& ctx, FieldElem a) {
    const BinomialMap f(ctx, a);
    std::vector<bool> seen(ctx.size(), false);
    for (std::uint64_t c = 0; c < ctx.size(); ++c) {
        const FieldElem v = f(FieldElem{static_cast<std::uint32_t>(c)});
        if (seen[v.code()]) return false;
        seen[v.code()] = true;
    }
    return true;
}

bool only_trivial_root(const FieldCtx& ctx, FieldElem a) {
    const BinomialMap f(ctx, a);
    for (std::uint64_t c = 1; c < ctx.size(); ++c) {
        if (f(FieldElem{static_cast<std::uint32_t>(c)}).is_zero()) return false;
    }
    return true;
}

bool hermite_pp_test(const FieldCtx& ctx, FieldElem a) {
    require_nonzero(a);
    const std::uint64_t q = ctx.q();
    bool root_ok = false;
    if ((q + 1) % 3 == 0) {
        root_ok = ctx.pow(a, static_cast<std::int64_t>((q + 1) / 3)) != ctx.one();
    } else {
        root_ok = only_trivial_root(ctx, a);
    }
    if (!root_ok) return false;
    for (std::uint64_t alpha = 0; alpha < q; ++alpha) {
        if (!s_q(ctx, a, alpha).is_zero()) return false;
    }
    return true;
}

bool hermite_pp_test_full(const FieldCtx& ctx, FieldElem a) {
    require_nonzero(a);
    if (ctx.q() > 8) {
        throw Error(ErrorCode::SizeExceeded, "full-range Hermite check is limited to q <= 8");
    }
    if (!only_trivial_root(ctx, a)) return false;
    for (std::uint64_t s = 1; s + 2 <= ctx.size(); ++s) {
        if (!power_sum(ctx, a, s).is_zero()) return false;
    }
    return true;
}

PowerSumProfile power_sum_profile(const FieldCtx& ctx, FieldElem a) {
    PowerSumProfile profile;
    for (std::uint64_t alpha = 0; alpha < ctx.q(); ++alpha) {
        const std::uint64_t s = reduced_index(ctx.q(), alpha);
        profile.entries.emplace_back(s, power_sum(ctx, a, s));
    }
    return profile;
}

ProfileVerdict cube_root_profile(const FieldCtx& ctx, FieldElem a) {
    require_nonzero(a);
    const std::uint64_t q = ctx.q();
    if ((q + 1) % 3 != 0) {
        throw Error(ErrorCode::PreconditionViolated, "q+1 is not divisible by 3 for q=" + std::to_string(q));
    }
    ProfileVerdict out;
    out.y = ctx.pow(a, static_cast<std::int64_t>((q + 1) / 3));
    if (!ctx.is_primitive_cube_root(out.y)) {
        throw Error(ErrorCode::PreconditionViolated, "a^((q+1)/3) is not a primitive cube root of unity");
    }
    out.profile = power_sum_profile(ctx, a);
    if (q % 2 == 1) {
        out.exceptional_index = (q * q - 1) / 2;
        const auto k = static_cast<std::int64_t>((q + 1) * (3 * q - 2) / 6);
        out.expected_exceptional = ctx.mul(ctx.pow(a, -k), ctx.add(ctx.one(), out.y));
    }
    out.holds = std::all_of(out.profile.entries.begin(), out.profile.entries.end(), [&](const auto& entry) {
        if (out.exceptional_index && entry.first == *out.exceptional_index) {
            return entry.second == out.expected_exceptional && !entry.second.is_zero();
        }
        return entry.second.is_zero();
    });
    return out;
}

}  // namespace ppbinom
