#ifndef HENSEL_TESTUTIL_HPP
#define HENSEL_TESTUTIL_HPP

#include <random>
#include <vector>

#include "hensel/lifting.hpp"
#include "hensel/residue_poly.hpp"

// Deterministic random generators shared by the test suites.

namespace testutil {

using namespace hensel;

using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, long lo, long hi) {
    return Int(static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo);
}

inline Rat rand_rat(Rng& rng) {
    Int num = rand_int(rng, -20, 20);
    Int den = rand_int(rng, 1, 20);
    return Rat(num, den);
}

inline FieldElement rand_field_element(Rng& rng, const FieldCtxPtr& ctx) {
    switch (ctx->kind()) {
        case FieldKind::Rationals:
            return FieldElement::from_rational(ctx, rand_rat(rng));
        case FieldKind::PrimeField:
            return FieldElement::residue(ctx, Int(rng() % 1000));
        case FieldKind::GaussianRationals:
            return FieldElement::gaussian(ctx, rand_rat(rng), rand_rat(rng));
        case FieldKind::RationalFunctions: {
            std::vector<FieldElement> num, den;
            const int dn = static_cast<int>(rng() % 3);
            for (int k = 0; k <= dn; ++k)
                num.push_back(rand_field_element(rng, ctx->base()));
            const int dd = static_cast<int>(rng() % 2);
            for (int k = 0; k <= dd; ++k)
                den.push_back(rand_field_element(rng, ctx->base()));
            // keep the denominator nonzero
            den.push_back(FieldElement::one(ctx->base()));
            return FieldElement::rational_function(ctx, std::move(num), std::move(den));
        }
    }
    throw Error("unreachable");
}

inline FieldElement rand_nonzero_field_element(Rng& rng, const FieldCtxPtr& ctx) {
    for (;;) {
        FieldElement e = rand_field_element(rng, ctx);
        if (!e.is_zero()) return e;
    }
}

inline LocalElement rand_local_element(Rng& rng, const RingCtxPtr& ctx) {
    std::vector<FieldElement> coeffs;
    for (int j = 0; j < ctx->precision(); ++j)
        coeffs.push_back(rand_field_element(rng, ctx->field()));
    return LocalElement::from_coefficients(ctx, std::move(coeffs));
}

inline LocalElement rand_unit(Rng& rng, const RingCtxPtr& ctx) {
    std::vector<FieldElement> coeffs{rand_nonzero_field_element(rng, ctx->field())};
    for (int j = 1; j < ctx->precision(); ++j)
        coeffs.push_back(rand_field_element(rng, ctx->field()));
    return LocalElement::from_coefficients(ctx, std::move(coeffs));
}

inline ResiduePoly rand_residue_poly(Rng& rng, const FieldCtxPtr& ctx, int degree, bool monic) {
    std::vector<FieldElement> coeffs;
    for (int k = 0; k < degree; ++k)
        coeffs.push_back(rand_field_element(rng, ctx));
    coeffs.push_back(monic ? FieldElement::one(ctx) : rand_nonzero_field_element(rng, ctx));
    return ResiduePoly(ctx, std::move(coeffs));
}

inline LocalPoly rand_local_poly(Rng& rng, const RingCtxPtr& ctx, int degree, bool monic) {
    std::vector<LocalElement> coeffs;
    for (int k = 0; k < degree; ++k)
        coeffs.push_back(rand_local_element(rng, ctx));
    coeffs.push_back(monic ? LocalElement::one(ctx) : rand_unit(rng, ctx));
    return LocalPoly(ctx, std::move(coeffs));
}

/// Random coprime monic pair over a prime field, by rejection.
inline std::pair<ResiduePoly, ResiduePoly> rand_coprime_monic_pair(Rng& rng,
                                                                   const FieldCtxPtr& ctx,
                                                                   int d1, int d2) {
    for (;;) {
        ResiduePoly f1 = rand_residue_poly(rng, ctx, d1, true);
        ResiduePoly f2 = rand_residue_poly(rng, ctx, d2, true);
        if (extended_euclid(f1, f2).g.is_one())
            return {std::move(f1), std::move(f2)};
    }
}

/// Random monic f over the series ring whose reduction is exactly f1*f2:
/// the canonical lift of the product plus a lower-degree m[x] perturbation.
inline LocalPoly rand_lift_instance(Rng& rng, const RingCtxPtr& ctx, const ResiduePoly& product) {
    auto [f, one] = initial_lift(product, ResiduePoly::one(ctx->field()), ctx);
    (void)one;
    std::vector<LocalElement> noise;
    for (int k = 0; k < product.degree(); ++k) {
        std::vector<FieldElement> c{FieldElement::zero(ctx->field())};
        for (int j = 1; j < ctx->precision(); ++j)
            c.push_back(rand_field_element(rng, ctx->field()));
        noise.push_back(LocalElement::from_coefficients(ctx, std::move(c)));
    }
    return f + LocalPoly(ctx, std::move(noise));
}

} // namespace testutil

#endif
