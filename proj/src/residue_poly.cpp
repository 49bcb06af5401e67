#include "hensel/residue_poly.hpp"

#include "hensel/detail/polyvec.hpp"

namespace hensel {

namespace {

void check_same_context(const ResiduePoly& a, const ResiduePoly& b) {
    if (!same_context(a.context(), b.context()))
        throw ContextMismatch();
}

} // namespace

ResiduePoly::ResiduePoly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!same_context(c.context(), ctx_))
            throw ContextMismatch("polynomial coefficient from a different field");
    detail::pv_normalize(coeffs_);
}

ResiduePoly ResiduePoly::zero(const FieldCtxPtr& ctx) { return ResiduePoly(ctx, {}); }

ResiduePoly ResiduePoly::one(const FieldCtxPtr& ctx) {
    return ResiduePoly(ctx, {FieldElement::one(ctx)});
}

ResiduePoly ResiduePoly::constant(const FieldElement& c) {
    return ResiduePoly(c.context(), {c});
}

ResiduePoly ResiduePoly::x(const FieldCtxPtr& ctx) {
    return ResiduePoly(ctx, {FieldElement::zero(ctx), FieldElement::one(ctx)});
}

ResiduePoly ResiduePoly::monomial(const FieldElement& c, int degree) {
    if (degree < 0)
        throw Error("monomial degree must be non-negative");
    std::vector<FieldElement> v(static_cast<size_t>(degree) + 1, FieldElement::zero(c.context()));
    v.back() = c;
    return ResiduePoly(c.context(), std::move(v));
}

bool ResiduePoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

bool ResiduePoly::is_monic() const { return detail::pv_is_monic(coeffs_); }

const FieldElement& ResiduePoly::leading() const {
    if (coeffs_.empty())
        throw Error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

FieldElement ResiduePoly::coefficient(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size())
        return FieldElement::zero(ctx_);
    return coeffs_[static_cast<size_t>(i)];
}

ResiduePoly ResiduePoly::derivative() const {
    return ResiduePoly(ctx_, detail::pv_derivative(ctx_, coeffs_));
}

FieldElement ResiduePoly::evaluate(const FieldElement& at) const {
    return detail::pv_eval(ctx_, coeffs_, at);
}

ResiduePoly ResiduePoly::make_monic() const {
    return ResiduePoly(ctx_, detail::pv_make_monic(coeffs_));
}

ResiduePoly ResiduePoly::pow(unsigned e) const {
    ResiduePoly r = one(ctx_);
    for (unsigned k = 0; k < e; ++k)
        r = r * *this;
    return r;
}

ResiduePoly ResiduePoly::operator-() const {
    return ResiduePoly(ctx_, detail::pv_neg(coeffs_));
}

ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b) {
    check_same_context(a, b);
    return ResiduePoly(a.ctx_, detail::pv_add(a.ctx_, a.coeffs_, b.coeffs_));
}

ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b) {
    check_same_context(a, b);
    return ResiduePoly(a.ctx_, detail::pv_sub(a.ctx_, a.coeffs_, b.coeffs_));
}

ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b) {
    check_same_context(a, b);
    return ResiduePoly(a.ctx_, detail::pv_mul(a.ctx_, a.coeffs_, b.coeffs_));
}

ResiduePoly ResiduePoly::operator*(const FieldElement& s) const {
    return ResiduePoly(ctx_, detail::pv_scale(coeffs_, s));
}

bool operator==(const ResiduePoly& a, const ResiduePoly& b) {
    return same_context(a.ctx_, b.ctx_) && a.coeffs_ == b.coeffs_;
}

std::pair<ResiduePoly, ResiduePoly> divmod(const ResiduePoly& a, const ResiduePoly& b) {
    if (!same_context(a.context(), b.context()))
        throw ContextMismatch();
    auto [q, r] = detail::pv_divmod(a.context(), a.coefficients(), b.coefficients());
    return {ResiduePoly(a.context(), std::move(q)), ResiduePoly(a.context(), std::move(r))};
}

ExtendedEuclidResult extended_euclid(const ResiduePoly& a, const ResiduePoly& b) {
    if (!same_context(a.context(), b.context()))
        throw ContextMismatch();
    if (a.is_zero() && b.is_zero())
        throw Error("extended_euclid requires at least one nonzero polynomial");
    const FieldCtxPtr& ctx = a.context();
    ResiduePoly r0 = a, r1 = b;
    ResiduePoly s0 = ResiduePoly::one(ctx), s1 = ResiduePoly::zero(ctx);
    ResiduePoly t0 = ResiduePoly::zero(ctx), t1 = ResiduePoly::one(ctx);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        ResiduePoly s2 = s0 - q * s1;
        ResiduePoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    // normalize the gcd to be monic
    FieldElement lc = r0.leading();
    if (!lc.is_one()) {
        FieldElement inv = lc.inverse();
        r0 = r0 * inv;
        s0 = s0 * inv;
        t0 = t0 * inv;
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

BezoutPair bezout_solve_constrained(const ResiduePoly& f1, const ResiduePoly& f2,
                                    const ResiduePoly& c) {
    if (!same_context(f1.context(), f2.context()) || !same_context(f1.context(), c.context()))
        throw ContextMismatch();
    if (!f1.is_monic() || !f2.is_monic())
        throw Error("bezout_solve_constrained requires monic f1, f2");
    if (c.degree() >= f1.degree() + f2.degree())
        throw DegreeTooLarge("deg c must be < deg f1 + deg f2");
    auto ee = extended_euclid(f1, f2);
    if (!ee.g.is_one())
        throw NotCoprime();
    if (c.is_zero())
        return {ResiduePoly::zero(c.context()), ResiduePoly::zero(c.context())};
    // v*f2 = 1 mod f1, so G1 = v*c mod f1 satisfies f2*G1 = c mod f1 and the
    // division below is exact.
    ResiduePoly g1 = f1.degree() == 0 ? ResiduePoly::zero(c.context())
                                      : divmod(ee.v * c, f1).second;
    auto [g2, rem] = divmod(c - f2 * g1, f1);
    if (!rem.is_zero())
        throw Error("internal: constrained Bezout division was not exact");
    return {std::move(g1), std::move(g2)};
}

std::vector<PrimePower> factor_primepowers(const ResiduePoly& f) {
    const FieldCtxPtr& ctx = f.context();
    if (ctx->kind() != FieldKind::PrimeField)
        throw UnsupportedField("factor_primepowers requires a prime field");
    if (ctx->modulus() > 101)
        throw UnsupportedField("factor_primepowers supports p <= 101");
    if (f.degree() > 12)
        throw UnsupportedField("factor_primepowers supports deg f <= 12");
    if (!f.is_monic())
        throw Error("factor_primepowers requires a monic polynomial");

    const long p = static_cast<long>(ctx->modulus());
    std::vector<PrimePower> out;
    ResiduePoly rem = f;
    for (int d = 1; 2 * d <= rem.degree(); ++d) {
        // all monic candidates of degree d, low coefficients as base-p digits
        long count = 1;
        for (int k = 0; k < d; ++k) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            std::vector<FieldElement> cs;
            cs.reserve(static_cast<size_t>(d) + 1);
            long v = idx;
            for (int k = 0; k < d; ++k) {
                cs.push_back(FieldElement::residue(ctx, Int(v % p)));
                v /= p;
            }
            cs.push_back(FieldElement::one(ctx));
            ResiduePoly g(ctx, std::move(cs));
            int mult = 0;
            while (true) {
                auto [q, r] = divmod(rem, g);
                if (!r.is_zero()) break;
                rem = std::move(q);
                ++mult;
            }
            if (mult > 0)
                out.push_back({std::move(g), mult});
            if (2 * d > rem.degree()) break;
        }
    }
    if (rem.degree() >= 1)
        out.push_back({rem, 1}); // irreducible leftover
    return out;
}

bool is_simple_root(const ResiduePoly& f, const FieldElement& r) {
    return f.evaluate(r).is_zero() && !f.derivative().evaluate(r).is_zero();
}

} // namespace hensel
