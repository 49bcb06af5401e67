#include <doctest.h>

#include "hensel/residue_poly.hpp"
#include "hensel/textio.hpp"
#include "testutil.hpp"

using namespace hensel;

namespace {

FieldCtxPtr Q() { return FieldContext::rationals(); }
FieldCtxPtr GF5() { return FieldContext::prime_field(5); }
FieldCtxPtr Qi() { return FieldContext::gaussian_rationals(); }

ResiduePoly rp(const FieldCtxPtr& ctx, const std::string& text) {
    return parse_residue_poly(ctx, text);
}

// every monic divisor of positive degree smaller than deg(f), by enumeration
bool has_smaller_monic_divisor(const ResiduePoly& f) {
    const FieldCtxPtr& ctx = f.context();
    const long p = static_cast<long>(ctx->modulus());
    for (int d = 1; d < f.degree(); ++d) {
        long count = 1;
        for (int k = 0; k < d; ++k) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            std::vector<FieldElement> cs;
            long v = idx;
            for (int k = 0; k < d; ++k) {
                cs.push_back(FieldElement::residue(ctx, Int(v % p)));
                v /= p;
            }
            cs.push_back(FieldElement::one(ctx));
            if (divmod(f, ResiduePoly(ctx, std::move(cs))).second.is_zero())
                return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("polynomial arithmetic examples") {
    auto ctx = Q();
    CHECK(rp(ctx, "x-1") * rp(ctx, "x+1") == rp(ctx, "x^2-1"));

    auto gauss = Qi();
    auto [q1, r1] = divmod(rp(gauss, "x^2+1"), rp(gauss, "x-i"));
    CHECK(q1 == rp(gauss, "x+i"));
    CHECK(r1.is_zero());

    auto gf = GF5();
    auto [q2, r2] = divmod(rp(gf, "x^3+2*x+1"), rp(gf, "x^2+1"));
    CHECK(q2 == rp(gf, "x"));
    CHECK(r2 == rp(gf, "x+1"));
    // multiply back
    CHECK(q2 * rp(gf, "x^2+1") + r2 == rp(gf, "x^3+2*x+1"));

    CHECK_THROWS_AS(divmod(rp(ctx, "x"), ResiduePoly::zero(ctx)), DivisionByZero);
}

TEST_CASE("extended_euclid examples") {
    auto ctx = Q();
    auto ee = extended_euclid(rp(ctx, "x-1"), rp(ctx, "x+1"));
    CHECK(ee.g == ResiduePoly::one(ctx));
    CHECK(ee.u == rp(ctx, "-1/2"));
    CHECK(ee.v == rp(ctx, "1/2"));

    auto ee2 = extended_euclid(rp(ctx, "x^2"), rp(ctx, "x"));
    CHECK(ee2.g == rp(ctx, "x"));
    CHECK(ee2.u.is_zero());
    CHECK(ee2.v == ResiduePoly::one(ctx));

    auto gf = GF5();
    auto ee3 = extended_euclid(rp(gf, "x+4"), rp(gf, "x+1"));
    CHECK(ee3.g == ResiduePoly::one(gf));
    CHECK(ee3.u == rp(gf, "2"));
    CHECK(ee3.v == rp(gf, "3"));
    CHECK(ee3.u * rp(gf, "x+4") + ee3.v * rp(gf, "x+1") == ResiduePoly::one(gf));

    CHECK_THROWS_AS(extended_euclid(ResiduePoly::zero(ctx), ResiduePoly::zero(ctx)), Error);
}

TEST_CASE("extended_euclid on random pairs") {
    std::vector<FieldCtxPtr> fields{Q(), GF5(), Qi(),
                                    FieldContext::rational_functions(Q(), "t")};
    for (const auto& ctx : fields) {
        testutil::Rng rng(99);
        for (int k = 0; k < 200; ++k) {
            ResiduePoly a = testutil::rand_residue_poly(rng, ctx, static_cast<int>(rng() % 4), false);
            ResiduePoly b = testutil::rand_residue_poly(rng, ctx, static_cast<int>(rng() % 4), false);
            if (a.is_zero() && b.is_zero()) continue;
            auto ee = extended_euclid(a, b);
            CHECK(ee.u * a + ee.v * b == ee.g);
            CHECK(divmod(a, ee.g).second.is_zero());
            CHECK(divmod(b, ee.g).second.is_zero());
        }
    }
}

TEST_CASE("bezout_solve_constrained examples") {
    auto ctx = Q();
    ResiduePoly f1 = rp(ctx, "x-1"), f2 = rp(ctx, "x+1");

    auto g = bezout_solve_constrained(f1, f2, ResiduePoly::one(ctx));
    CHECK(g.g1 == rp(ctx, "1/2"));
    CHECK(g.g2 == rp(ctx, "-1/2"));

    auto z = bezout_solve_constrained(f1, f2, ResiduePoly::zero(ctx));
    CHECK(z.g1.is_zero());
    CHECK(z.g2.is_zero());

    auto gf = GF5();
    ResiduePoly h1 = rp(gf, "x+4"), h2 = rp(gf, "x+1"), c = rp(gf, "x");
    auto s = bezout_solve_constrained(h1, h2, c);
    CHECK(h2 * s.g1 + h1 * s.g2 == c);
    CHECK(s.g1.degree() < h1.degree());
    CHECK(s.g2.degree() < h2.degree());
    // exhaustive search over all constant pairs in GF(5)^2
    int matches = 0;
    for (long a = 0; a < 5; ++a)
        for (long b = 0; b < 5; ++b) {
            ResiduePoly ga = ResiduePoly::constant(FieldElement::residue(gf, a));
            ResiduePoly gb = ResiduePoly::constant(FieldElement::residue(gf, b));
            if (h2 * ga + h1 * gb == c) {
                ++matches;
                CHECK(s.g1 == ga);
                CHECK(s.g2 == gb);
            }
        }
    CHECK(matches == 1);
}

TEST_CASE("bezout_solve_constrained errors") {
    auto ctx = Q();
    CHECK_THROWS_AS(bezout_solve_constrained(rp(ctx, "x+1"), rp(ctx, "x+1"), rp(ctx, "1")),
                    NotCoprime);
    CHECK_THROWS_AS(bezout_solve_constrained(rp(ctx, "x-1"), rp(ctx, "x+1"), rp(ctx, "x^2")),
                    DegreeTooLarge);
}

TEST_CASE("bezout_solve_constrained matches exhaustive search over GF(5)") {
    auto gf = GF5();
    testutil::Rng rng(2024);
    for (int iter = 0; iter < 25; ++iter) {
        const int d1 = 1 + static_cast<int>(rng() % 3);
        const int d2 = 1 + static_cast<int>(rng() % 3);
        auto [f1, f2] = testutil::rand_coprime_monic_pair(rng, gf, d1, d2);
        ResiduePoly c = testutil::rand_residue_poly(rng, gf, static_cast<int>(rng() % (d1 + d2)), false);
        auto got = bezout_solve_constrained(f1, f2, c);
        CHECK(f2 * got.g1 + f1 * got.g2 == c);
        CHECK(got.g1.degree() < d1);
        CHECK(got.g2.degree() < d2);

        // enumerate all coefficient tuples (G1, G2) with the degree bounds
        long total = 1;
        for (int k = 0; k < d1 + d2; ++k) total *= 5;
        int matches = 0;
        for (long code = 0; code < total; ++code) {
            long v = code;
            std::vector<FieldElement> c1, c2;
            for (int k = 0; k < d1; ++k) { c1.push_back(FieldElement::residue(gf, Int(v % 5))); v /= 5; }
            for (int k = 0; k < d2; ++k) { c2.push_back(FieldElement::residue(gf, Int(v % 5))); v /= 5; }
            ResiduePoly G1(gf, std::move(c1)), G2(gf, std::move(c2));
            if (f2 * G1 + f1 * G2 == c) {
                ++matches;
                CHECK(G1 == got.g1);
                CHECK(G2 == got.g2);
            }
        }
        CHECK(matches == 1); // the degree-bounded solution is unique
    }
}

TEST_CASE("factor_primepowers examples") {
    auto gf = GF5();

    auto blocks = factor_primepowers(rp(gf, "x^2+4"));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].base == rp(gf, "x+1"));
    CHECK(blocks[0].multiplicity == 1);
    CHECK(blocks[1].base == rp(gf, "x+4"));
    CHECK(blocks[1].multiplicity == 1);

    auto square = factor_primepowers(rp(gf, "(x-1)^2"));
    REQUIRE(square.size() == 1);
    CHECK(square[0].base == rp(gf, "x-1"));
    CHECK(square[0].multiplicity == 2);
    CHECK(square[0].block() == rp(gf, "(x-1)^2"));

    auto sum = factor_primepowers(rp(gf, "x^2+1"));
    REQUIRE(sum.size() == 2);
    CHECK(sum[0].base == rp(gf, "x+2"));
    CHECK(sum[1].base == rp(gf, "x+3"));

    CHECK_THROWS_AS(factor_primepowers(rp(Q(), "x^2-1")), UnsupportedField);
}

TEST_CASE("factor_primepowers on random polynomials") {
    for (long p : {5L, 7L}) {
        auto gf = FieldContext::prime_field(p);
        testutil::Rng rng(31 + p);
        for (int iter = 0; iter < 20; ++iter) {
            const int deg = 2 + static_cast<int>(rng() % 5);
            ResiduePoly f = testutil::rand_residue_poly(rng, gf, deg, true);
            auto blocks = factor_primepowers(f);
            ResiduePoly product = ResiduePoly::one(gf);
            for (const auto& b : blocks)
                product = product * b.block();
            CHECK(product == f);
            for (size_t i = 0; i < blocks.size(); ++i) {
                CHECK(!has_smaller_monic_divisor(blocks[i].base)); // irreducible
                for (size_t j = i + 1; j < blocks.size(); ++j)
                    CHECK(extended_euclid(blocks[i].block(), blocks[j].block()).g.is_one());
            }
        }
    }
}

TEST_CASE("is_simple_root") {
    auto gauss = Qi();
    CHECK(is_simple_root(rp(gauss, "x^2+1"), parse_field_literal(gauss, "i")));

    auto ctx = Q();
    CHECK_FALSE(is_simple_root(rp(ctx, "(x-1)^2"), FieldElement::from_integer(ctx, 1)));
    CHECK_FALSE(is_simple_root(rp(ctx, "x^2-1"), FieldElement::from_integer(ctx, 2)));
}
