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

#include "ppbinom/symalg.hpp"

#include <string>

#include "ppbinom/errors.hpp"

namespace ppbinom {

namespace {

BigInt ipow(const BigInt& base, unsigned long k) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace

BigRat gen_binom(const BigRat& x, unsigned n) {
    BigRat acc = 1;
    for (unsigned k = 0; k < n; ++k) {
        acc *= (x - k);
        acc /= (k + 1);
    }
    return acc;
}

QPoly bracket_poly(unsigned alpha) {
    if (alpha < 2 || alpha % 3 != 2) {
        throw Error(ErrorCode::BadAlpha, "alpha must be >= 2 and = 2 mod 3, got " + std::to_string(alpha));
    }
    std::vector<BigRat> v(3 * alpha + 3, BigRat(0));
    for (unsigned i = 0; i <= alpha; ++i) {
        BigRat outer(binomial(alpha, i));
        if (i % 2 == 1) outer = -outer;
        for (unsigned l = 0; l < 3; ++l) {
            BigRat arg(static_cast<long>(2 * alpha - 1 + l), 3);
            arg.canonicalize();
            arg += i;
            v[3 * i + l] += outer * gen_binom(arg, alpha);
        }
    }
    return QPoly(std::move(v));
}

GPolyRecord g_poly(unsigned alpha) {
    GPolyRecord rec;
    rec.alpha = alpha;
    rec.bracket = bracket_poly(alpha);
    rec.q_bound = 2 * std::uint64_t{alpha} + 4;

    BigInt den_lcm = 1;
    for (const auto& c : rec.bracket.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    unsigned d = 0;
    BigInt rest = den_lcm;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), 3)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 3);
        ++d;
    }
    if (rest != 1) {
        throw Error(ErrorCode::FractionalResidue,
                    "bracket for alpha=" + std::to_string(alpha) + " has denominator " + den_lcm.get_str());
    }
    rec.d_alpha = d;

    const BigInt scale = ipow(BigInt(3), d);
    std::vector<BigInt> scaled;
    for (const auto& c : rec.bracket.coeffs()) {
        const BigRat s = c * scale;
        if (s.get_den() != 1) throw Error(ErrorCode::FractionalResidue, "3-power clearing failed");
        scaled.push_back(s.get_num());
    }
    const ZPoly cleared(std::move(scaled));
    const ZPoly divisor{BigInt(0), BigInt(1), BigInt(1), BigInt(1)};  // v^3+v^2+v
    const auto [quo, rem] = divmod_unit_lead(cleared, divisor);
    if (!rem.is_zero()) {
        throw Error(ErrorCode::NotDivisible,
                    "v(v^2+v+1) does not divide the bracket for alpha=" + std::to_string(alpha));
    }
    const unsigned g_degree = 3 * alpha - 1;
    if (quo.degree() > static_cast<int>(g_degree)) {
        throw Error(ErrorCode::NotDivisible, "quotient degree exceeds 3alpha-1");
    }
    rec.g = quo.reversed(g_degree);
    return rec;
}

FieldElem g_bridge(const FieldCtx& ctx, FieldElem a, const GPolyRecord& rec, BridgeForm form) {
    const std::uint64_t q = ctx.q();
    if ((q + 1) % 3 != 0) throw Error(ErrorCode::PreconditionViolated, "need 3 | q+1, q=" + std::to_string(q));
    if (a.is_zero()) throw Error(ErrorCode::PreconditionViolated, "a must be nonzero");
    const auto alpha = static_cast<std::int64_t>(rec.alpha);
    const auto qi = static_cast<std::int64_t>(q);

    FieldElem z = ctx.pow(a, (qi + 1) / 3);
    if (form == BridgeForm::Conjugate) z = ctx.pow(z, qi);
    const FieldElem cyclo = ctx.add(ctx.add(ctx.mul(z, z), z), ctx.one());
    const FieldElem three_d = ctx.pow(ctx.from_int(3), static_cast<std::int64_t>(rec.d_alpha));

    FieldElem out = ctx.pow(ctx.neg(a), (alpha + 1) * qi / 3);
    out = ctx.mul(out, ctx.pow(z, -(3 * alpha + 2)));
    out = ctx.mul(out, cyclo);
    out = ctx.mul(out, ctx.inv(three_d));
    return ctx.mul(out, eval_in_field(rec.g, ctx, z));
}

BigInt resultant_z(const ZPoly& f, const ZPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    ZPoly a = f, b = g;
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -1;
    }
    if (b.degree() == 0) return sign * ipow(b.lead(), static_cast<unsigned long>(a.degree()));

    const BigInt ca = content(a), cb = content(b);
    a = divide_exact(a, ca);
    b = divide_exact(b, cb);
    const BigInt t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));

    BigInt gg = 1, h = 1;
    for (;;) {
        const int delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
        const ZPoly r = pseudo_remainder(a, b);
        a = b;
        if (r.is_zero()) return 0;
        b = divide_exact(r, gg * ipow(h, static_cast<unsigned long>(delta)));
        gg = a.lead();
        // h <- g^delta / h^{delta-1}; unchanged when delta = 0
        if (delta > 0) {
            h = exact_div(ipow(gg, static_cast<unsigned long>(delta)), ipow(h, static_cast<unsigned long>(delta - 1)));
        }
        if (b.degree() == 0) {
            const auto da = static_cast<unsigned long>(a.degree());
            const BigInt last = exact_div(ipow(b.lead(), da), ipow(h, da - 1));
            return sign * t * last;
        }
    }
}

Factorization factor_trial(const BigInt& n, std::uint64_t bound) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor 0");
    Factorization out;
    out.sign = n < 0 ? -1 : 1;
    BigInt m = abs(n);
    auto strip = [&](unsigned long d) {
        unsigned mult = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            ++mult;
        }
        if (mult) out.factors.emplace_back(BigInt(d), mult);
    };
    if (bound >= 2) strip(2);
    for (std::uint64_t d = 3; d <= bound && BigInt(d) * d <= m; d += 2) strip(static_cast<unsigned long>(d));
    if (m != 1) {
        const BigInt b(static_cast<unsigned long>(bound));
        if (m <= b * b) {
            out.factors.emplace_back(m, 1);
        } else {
            out.cofactor = m;
            out.complete = false;
        }
    }
    return out;
}

FpPoly reduce_mod_p(const ZPoly& f, std::uint32_t p) {
    std::vector<Residue> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(static_cast<Residue>(mpz_fdiv_ui(c.get_mpz_t(), p)));
    return FpPoly(p, std::move(v));
}

FpPoly gcd_mod_p(std::span<const ZPoly> polys, std::uint32_t p) {
    FpPoly acc(p);
    for (const auto& f : polys) acc = gcd(acc, reduce_mod_p(f, p));
    if (acc.is_zero()) throw Error(ErrorCode::AllZero, "every polynomial vanishes mod " + std::to_string(p));
    return acc;
}

Residue eval_mod_p(const ZPoly& f, std::int64_t x, std::uint32_t p) {
    return reduce_mod_p(f, p).evaluate(modp::reduce(x, p));
}

FieldElem eval_in_field(const ZPoly& f, const FieldCtx& ctx, FieldElem x) {
    FieldElem acc = ctx.zero();
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        const auto c = static_cast<Residue>(mpz_fdiv_ui(it->get_mpz_t(), ctx.p()));
        acc = ctx.add(ctx.mul(acc, x), FieldElem{c});
    }
    return acc;
}

}  // namespace ppbinom
