#include <doctest.h>

#include "hensel/local_ring.hpp"
#include "hensel/oracle.hpp"
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

LocalElement el(const RingCtxPtr& ctx, const std::string& text) {
    return parse_local_element(ctx, text);
}

} // namespace

TEST_CASE("ring context invariants") {
    CHECK_THROWS_AS(LocalRingContext::series(FieldContext::rationals(), "t", 0), Error);
    CHECK_THROWS_AS(LocalRingContext::volterra(FieldContext::rationals(), 4), NoDerivation);
    CHECK_THROWS_AS(LocalRingContext::twisted(FieldContext::rationals(), 4), NoAutomorphism);
    CHECK_NOTHROW(volterra_qt(4));
    CHECK_NOTHROW(twisted_qi(4));
}

TEST_CASE("elem_mul examples") {
    // Volterra: the inverse operator times t
    auto v = volterra_qt(3);
    LocalElement prod = LocalElement::generator(v) * el(v, "t");
    CHECK(prod == el(v, "t*g - g^2"));

    // twisted: tau * i = -i * tau
    auto tw = twisted_qi(3);
    CHECK(LocalElement::generator(tw) * el(tw, "i") == el(tw, "-i*g"));

    // commutative series
    auto s = series_q(3);
    CHECK(el(s, "1+g") * el(s, "1-g") == el(s, "1 - g^2"));
}

TEST_CASE("elem add/sub/neg examples") {
    auto s = series_q(4);
    CHECK(el(s, "1+g") + el(s, "g") == el(s, "1+2*g"));
    LocalElement a = el(s, "2 + 3*g - g^2");
    CHECK((a + (-a)).is_zero());
    CHECK(a - a == LocalElement::zero(s));

    auto gf = series_gf5(2);
    CHECK((el(gf, "3+4*g") + el(gf, "2+g")).is_zero());

    CHECK_THROWS_AS(el(s, "1") + el(series_q(5), "1"), ContextMismatch);
}

TEST_CASE("elem_inv examples") {
    auto s = series_q(4);
    CHECK(el(s, "1+g").inverse() == el(s, "1 - g + g^2 - g^3"));

    auto gf = series_gf5(3);
    CHECK(el(gf, "2").inverse() == el(gf, "3"));

    auto tw = twisted_qi(3);
    LocalElement u = el(tw, "1 + i*g");
    LocalElement v = u.inverse();
    CHECK(v == el(tw, "1 - i*g + g^2"));
    CHECK(u * v == LocalElement::one(tw));
    CHECK(v * u == LocalElement::one(tw));

    CHECK_THROWS_AS(el(s, "g").inverse(), NotAUnit);
}

TEST_CASE("reduce_to_residue and canonical_lift") {
    auto s = series_q(3);
    CHECK(el(s, "1+g").residue() == FieldElement::one(s->field()));
    CHECK(el(s, "g^2").residue().is_zero());

    auto tw = twisted_qi(3);
    CHECK(el(tw, "3+2i + i*g").residue() == parse_field_literal(tw->field(), "3+2i"));

    // round trips over Q, GF(5), Q(i)
    for (const auto& ctx : {series_q(3), series_gf5(3), twisted_qi(3)}) {
        testutil::Rng rng(7);
        FieldElement a = testutil::rand_field_element(rng, ctx->field());
        CHECK(LocalElement::canonical_lift(ctx, a).residue() == a);
    }
}

TEST_CASE("valuation") {
    auto s = series_q(5);
    CHECK(el(s, "g^3").valuation() == 3);
    CHECK(LocalElement::zero(s).valuation() == 5);
    CHECK(el(s, "2").valuation() == 0);

    // the Volterra commutator of the generator and t has valuation 2
    auto v = volterra_qt(5);
    LocalElement pi = LocalElement::generator(v);
    LocalElement t = el(v, "t");
    LocalElement commutator = pi * t - t * pi;
    CHECK(commutator == el(v, "-g^2"));
    CHECK(commutator.valuation() == 2);
}

TEST_CASE("almost-commutativity probe") {
    auto s = series_q(4);
    auto any = std::vector<FieldElement>{FieldElement::from_integer(s->field(), 3)};
    CHECK(is_almost_commutative_probe(s, any).almost_commutative);

    auto tw = twisted_qi(4);
    auto res = is_almost_commutative_probe(
        tw, {FieldElement::gaussian(tw->field(), 0, 1)});
    CHECK_FALSE(res.almost_commutative);
    REQUIRE(res.witness_commutator.has_value());
    CHECK(*res.witness_commutator == el(tw, "-2i*g"));
    CHECK(res.witness_commutator->valuation() == 1);

    auto v = volterra_qt(4);
    auto resv = is_almost_commutative_probe(v, {FieldElement::variable(v->field())});
    CHECK(resv.almost_commutative);

    CHECK_THROWS_AS(is_almost_commutative_probe(s, {}), Error);
}

TEST_CASE("ring axioms on random triples") {
    for (const auto& ctx : {series_gf5(4), volterra_qt(3), twisted_qi(4)}) {
        testutil::Rng rng(55);
        for (int k = 0; k < 200; ++k) {
            LocalElement a = testutil::rand_local_element(rng, ctx);
            LocalElement b = testutil::rand_local_element(rng, ctx);
            LocalElement c = testutil::rand_local_element(rng, ctx);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
        }
    }
}

TEST_CASE("valuation is additive under multiplication") {
    for (const auto& ctx : {series_gf5(4), volterra_qt(3), twisted_qi(4)}) {
        testutil::Rng rng(66);
        const int n = ctx->precision();
        for (int k = 0; k < 200; ++k) {
            LocalElement a = testutil::rand_local_element(rng, ctx);
            LocalElement b = testutil::rand_local_element(rng, ctx);
            const int va = a.valuation(), vb = b.valuation();
            if (va < n && vb < n)
                CHECK((a * b).valuation() == std::min(va + vb, n));
        }
    }
}

TEST_CASE("reduction is a ring homomorphism") {
    for (const auto& ctx : {series_gf5(4), volterra_qt(3), twisted_qi(4)}) {
        testutil::Rng rng(77);
        for (int k = 0; k < 200; ++k) {
            LocalElement a = testutil::rand_local_element(rng, ctx);
            LocalElement b = testutil::rand_local_element(rng, ctx);
            CHECK((a * b).residue() == a.residue() * b.residue());
            CHECK((a + b).residue() == a.residue() + b.residue());
        }
    }
}

TEST_CASE("inverse is two-sided on random units") {
    for (const auto& ctx : {series_gf5(4), volterra_qt(3), twisted_qi(4)}) {
        testutil::Rng rng(88);
        for (int k = 0; k < 100; ++k) {
            LocalElement a = testutil::rand_unit(rng, ctx);
            LocalElement inv = a.inverse();
            CHECK(a * inv == LocalElement::one(ctx));
            CHECK(inv * a == LocalElement::one(ctx));
        }
    }
}

TEST_CASE("Volterra multiplication agrees with the recursive oracle") {
    auto ctx = volterra_qt(4);
    testutil::Rng rng(99);
    for (int k = 0; k < 50; ++k) {
        LocalElement a = testutil::rand_local_element(rng, ctx);
        LocalElement b = testutil::rand_local_element(rng, ctx);
        CHECK(a * b == volterra_mul_recursive_oracle(a, b));
    }
}
