#include <doctest.h>

#include "hensel/local_poly.hpp"
#include "hensel/textio.hpp"
#include "testutil.hpp"

using namespace hensel;

namespace {

RingCtxPtr series_q(int n) {
    return LocalRingContext::series(FieldContext::rationals(), "t", n);
}
RingCtxPtr series_gf5(int n) {
    return LocalRingContext::series(FieldContext::prime_field(5), "t", n);
}
RingCtxPtr volterra_qt(int n) {
    auto field = FieldContext::rational_functions(FieldContext::rationals(), "t")
                     ->with_derivation(DerivationKind::DDVar);
    return LocalRingContext::volterra(field, n);
}
RingCtxPtr twisted_qi(int n) {
    auto field = FieldContext::gaussian_rationals()->with_automorphism(AutomorphismKind::Conjugation);
    return LocalRingContext::twisted(field, n);
}

LocalPoly lp(const RingCtxPtr& ctx, const std::string& text) {
    return parse_local_poly(ctx, text);
}
LocalElement el(const RingCtxPtr& ctx, const std::string& text) {
    return parse_local_element(ctx, text);
}

} // namespace

TEST_CASE("polynomial multiplication examples") {
    auto s = series_q(4);
    CHECK(lp(s, "x-1") * lp(s, "x+1") == lp(s, "x^2-1"));

    auto tw = twisted_qi(4);
    // x is central, so (x+i)(x-i) collapses to x^2+1
    CHECK(lp(tw, "x+i") * lp(tw, "x-i") == lp(tw, "x^2+1"));
    // the coefficients still twist: tau*i = -i*tau
    CHECK(lp(tw, "x+g") * lp(tw, "x+i") == lp(tw, "x^2 + (i+g)*x - i*g"));
}

TEST_CASE("reduce_poly examples") {
    auto tw = twisted_qi(3);
    CHECK(reduce_poly(lp(tw, "x^2+1+g")) == parse_residue_poly(tw->field(), "x^2+1"));

    auto s = series_q(3);
    CHECK(reduce_poly(lp(s, "x^2 - (1+g)")) == parse_residue_poly(s->field(), "x^2-1"));
    CHECK(reduce_poly(lp(s, "g*x^3 + x")) == parse_residue_poly(s->field(), "x"));
}

TEST_CASE("right_evaluate examples") {
    auto tw = twisted_qi(3);
    // i^2 + 1 + tau = tau, so i is not a root of x^2+1+tau
    CHECK(right_evaluate(lp(tw, "x^2+1+g"), el(tw, "i")) == el(tw, "g"));

    auto s = series_q(3);
    CHECK(right_evaluate(lp(s, "x^2-1"), el(s, "1")).is_zero());

    auto v = volterra_qt(3);
    CHECK(right_evaluate(lp(v, "x - g"), LocalElement::generator(v)).is_zero());
}

TEST_CASE("right_divmod examples") {
    auto tw = twisted_qi(3);
    auto [g, rem] = right_divmod(lp(tw, "x^2+1+g"), el(tw, "i"));
    CHECK(g == lp(tw, "x+i"));
    CHECK(rem == el(tw, "g"));
    // multiply back: g*(x-a) + rem = f
    CHECK(g * LocalPoly::x_minus(el(tw, "i")) + LocalPoly::constant(rem) == lp(tw, "x^2+1+g"));

    auto s = series_q(3);
    auto [g2, rem2] = right_divmod(lp(s, "x^2-1"), el(s, "1"));
    CHECK(g2 == lp(s, "x+1"));
    CHECK(rem2.is_zero());

    auto [g3, rem3] = right_divmod(lp(s, "x"), LocalElement::zero(s));
    CHECK(g3 == LocalPoly::one(s));
    CHECK(rem3.is_zero());
}

TEST_CASE("coeff_valuation_floor examples") {
    auto s = series_q(5);
    CHECK(coeff_valuation_floor(lp(s, "g^2*x + g^3")) == 2);
    CHECK(coeff_valuation_floor(lp(s, "x+1")) == 0);
    CHECK(coeff_valuation_floor(LocalPoly::zero(s)) == 5);
}

TEST_CASE("leading_form examples") {
    auto s = series_q(5);
    CHECK(leading_form(lp(s, "3*g^2*x + 2*g^3"), 2) ==
          parse_residue_poly(s->field(), "3*x"));
    CHECK(leading_form(lp(s, "g^2*(x^2+x)"), 2) == parse_residue_poly(s->field(), "x^2+x"));

    // tau^2*i normalizes to sigma^2(i)*tau^2 = i*tau^2
    auto tw = twisted_qi(4);
    LocalPoly h = LocalPoly::constant(LocalElement::generator(tw).pow(2)) * lp(tw, "i*x");
    CHECK(leading_form(h, 2) == parse_residue_poly(tw->field(), "i*x"));

    CHECK_THROWS_AS(leading_form(lp(s, "x+1"), 2), NotInIdealPower);
}

TEST_CASE("shift_into_ideal examples") {
    auto s = series_q(5);
    ResiduePoly g = parse_residue_poly(s->field(), "3*x");
    CHECK(shift_into_ideal(g, 2, s) == lp(s, "3*g^2*x"));
    CHECK(shift_into_ideal(ResiduePoly::zero(s->field()), 3, s).is_zero());

    auto tw = twisted_qi(4);
    ResiduePoly h = parse_residue_poly(tw->field(), "x+1");
    CHECK(shift_into_ideal(h, 1, tw) == lp(tw, "g*x + g"));
    CHECK(leading_form(shift_into_ideal(h, 1, tw), 1) == h);
}

TEST_CASE("remainder theorem and multiply-back on random inputs") {
    for (const auto& ctx : {series_gf5(4), volterra_qt(3), twisted_qi(4)}) {
        testutil::Rng rng(1001);
        for (int k = 0; k < 200; ++k) {
            LocalPoly f = testutil::rand_local_poly(rng, ctx, 1 + static_cast<int>(rng() % 3),
                                                    false);
            LocalElement a = testutil::rand_local_element(rng, ctx);
            auto [g, rem] = right_divmod(f, a);
            CHECK(rem == right_evaluate(f, a));
            CHECK(g * LocalPoly::x_minus(a) + LocalPoly::constant(rem) == f);
        }
    }
}

TEST_CASE("leading_form is a section of shift_into_ideal") {
    for (const auto& ctx : {series_gf5(4), volterra_qt(3), twisted_qi(4)}) {
        testutil::Rng rng(1002);
        for (int k = 0; k < 100; ++k) {
            const int r = static_cast<int>(rng() % ctx->precision());
            ResiduePoly g = testutil::rand_residue_poly(rng, ctx->field(),
                                                        static_cast<int>(rng() % 3), false);
            CHECK(leading_form(shift_into_ideal(g, r, ctx), r) == g);
        }
    }
}

TEST_CASE("reduce_poly is multiplicative") {
    for (const auto& ctx : {series_gf5(4), volterra_qt(3), twisted_qi(4)}) {
        testutil::Rng rng(1003);
        for (int k = 0; k < 200; ++k) {
            LocalPoly a = testutil::rand_local_poly(rng, ctx, static_cast<int>(rng() % 3), false);
            LocalPoly b = testutil::rand_local_poly(rng, ctx, static_cast<int>(rng() % 3), false);
            CHECK(reduce_poly(a * b) == reduce_poly(a) * reduce_poly(b));
        }
    }
}

TEST_CASE("degree is additive for monic factors") {
    for (const auto& ctx : {series_gf5(4), volterra_qt(3), twisted_qi(4)}) {
        testutil::Rng rng(1004);
        for (int k = 0; k < 100; ++k) {
            LocalPoly a = testutil::rand_local_poly(rng, ctx, static_cast<int>(rng() % 3), true);
            LocalPoly b = testutil::rand_local_poly(rng, ctx, static_cast<int>(rng() % 3), false);
            CHECK((a * b).degree() == a.degree() + b.degree());
            CHECK((b * a).degree() == a.degree() + b.degree());
        }
    }
}
