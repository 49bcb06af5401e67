#include "hensel/local_ring.hpp"

namespace hensel {

namespace {

void check_same_context(const LocalElement& a, const LocalElement& b) {
    if (!same_context(a.context(), b.context()))
        throw ContextMismatch();
}

// m-fold application of the field automorphism.
FieldElement automorphism_power(const FieldElement& a, int m) {
    FieldElement r = a;
    switch (a.context()->automorphism()) {
        case AutomorphismKind::None:
            throw NoAutomorphism();
        case AutomorphismKind::Identity:
            return r;
        case AutomorphismKind::Conjugation:
            return (m % 2 == 0) ? r : apply_automorphism(r);
    }
    throw Error("unreachable automorphism kind");
}

} // namespace

// ---------------------------------------------------------------------------
// LocalRingContext

RingCtxPtr LocalRingContext::series(FieldCtxPtr field, std::string generator_name, int precision) {
    if (precision < 1)
        throw Error("precision must be >= 1");
    if (generator_name.empty())
        throw Error("series ring requires a generator name");
    auto ctx = std::shared_ptr<LocalRingContext>(new LocalRingContext());
    ctx->kind_ = RingKind::CommutativeSeries;
    ctx->field_ = std::move(field);
    ctx->precision_ = precision;
    ctx->generator_name_ = std::move(generator_name);
    return ctx;
}

RingCtxPtr LocalRingContext::volterra(FieldCtxPtr field, int precision) {
    if (precision < 1)
        throw Error("precision must be >= 1");
    if (!field->has_derivation())
        throw NoDerivation("Volterra ring requires a coefficient field with a derivation");
    auto ctx = std::shared_ptr<LocalRingContext>(new LocalRingContext());
    ctx->kind_ = RingKind::Volterra;
    ctx->field_ = std::move(field);
    ctx->precision_ = precision;
    ctx->generator_name_ = "∂^-1";
    return ctx;
}

RingCtxPtr LocalRingContext::twisted(FieldCtxPtr field, int precision) {
    if (precision < 1)
        throw Error("precision must be >= 1");
    if (!field->has_automorphism())
        throw NoAutomorphism("twisted ring requires a coefficient field with an automorphism");
    auto ctx = std::shared_ptr<LocalRingContext>(new LocalRingContext());
    ctx->kind_ = RingKind::Twisted;
    ctx->field_ = std::move(field);
    ctx->precision_ = precision;
    ctx->generator_name_ = "τ";
    return ctx;
}

bool same_context(const LocalRingContext& a, const LocalRingContext& b) {
    return a.kind() == b.kind() && a.precision() == b.precision() &&
           a.generator_name() == b.generator_name() && same_context(a.field(), b.field());
}

bool same_context(const RingCtxPtr& a, const RingCtxPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return same_context(*a, *b);
}

// ---------------------------------------------------------------------------
// LocalElement

LocalElement LocalElement::zero(const RingCtxPtr& ctx) {
    return LocalElement(ctx, std::vector<FieldElement>(
        static_cast<size_t>(ctx->precision()), FieldElement::zero(ctx->field())));
}

LocalElement LocalElement::one(const RingCtxPtr& ctx) {
    return canonical_lift(ctx, FieldElement::one(ctx->field()));
}

LocalElement LocalElement::generator(const RingCtxPtr& ctx) {
    return monomial(ctx, FieldElement::one(ctx->field()), 1);
}

LocalElement LocalElement::canonical_lift(const RingCtxPtr& ctx, const FieldElement& a) {
    return monomial(ctx, a, 0);
}

LocalElement LocalElement::from_coefficients(const RingCtxPtr& ctx,
                                             std::vector<FieldElement> coeffs) {
    const size_t n = static_cast<size_t>(ctx->precision());
    if (coeffs.size() > n)
        throw Error("more coefficients than the ring precision");
    for (const auto& c : coeffs)
        if (!same_context(c.context(), ctx->field()))
            throw ContextMismatch("series coefficient from a different field");
    while (coeffs.size() < n)
        coeffs.push_back(FieldElement::zero(ctx->field()));
    return LocalElement(ctx, std::move(coeffs));
}

LocalElement LocalElement::monomial(const RingCtxPtr& ctx, const FieldElement& c, int j) {
    if (j < 0)
        throw Error("generator exponent must be non-negative");
    if (!same_context(c.context(), ctx->field()))
        throw ContextMismatch();
    LocalElement r = zero(ctx);
    if (j < ctx->precision())
        r.coeffs_[static_cast<size_t>(j)] = c;
    return r;
}

bool LocalElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool LocalElement::is_one() const {
    if (!coeffs_[0].is_one()) return false;
    for (size_t j = 1; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) return false;
    return true;
}

int LocalElement::valuation() const {
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) return static_cast<int>(j);
    return static_cast<int>(coeffs_.size());
}

LocalElement LocalElement::operator-() const {
    std::vector<FieldElement> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        r.push_back(-c);
    return LocalElement(ctx_, std::move(r));
}

LocalElement operator+(const LocalElement& a, const LocalElement& b) {
    check_same_context(a, b);
    std::vector<FieldElement> r;
    r.reserve(a.coeffs_.size());
    for (size_t j = 0; j < a.coeffs_.size(); ++j)
        r.push_back(a.coeffs_[j] + b.coeffs_[j]);
    return LocalElement(a.ctx_, std::move(r));
}

LocalElement operator-(const LocalElement& a, const LocalElement& b) {
    return a + (-b);
}

LocalElement operator*(const LocalElement& a, const LocalElement& b) {
    check_same_context(a, b);
    const RingCtxPtr& ctx = a.ctx_;
    const int n = ctx->precision();
    std::vector<FieldElement> r(static_cast<size_t>(n), FieldElement::zero(ctx->field()));

    switch (ctx->kind()) {
        case RingKind::CommutativeSeries: {
            for (int m = 0; m < n; ++m) {
                if (a.coeffs_[m].is_zero()) continue;
                for (int j = 0; j + m < n; ++j)
                    r[m + j] = r[m + j] + a.coeffs_[m] * b.coeffs_[j];
            }
            break;
        }
        case RingKind::Volterra: {
            // pi^m * c = sum_i binom(-m, i) c^(i) pi^(m+i)
            for (int m = 0; m < n; ++m) {
                if (a.coeffs_[m].is_zero()) continue;
                for (int j = 0; j + m < n; ++j) {
                    if (b.coeffs_[j].is_zero()) continue;
                    FieldElement deriv = b.coeffs_[j];
                    for (int i = 0; m + i + j < n; ++i) {
                        if (i > 0) {
                            if (m == 0) break; // binom(0, i) = 0 for i > 0
                            deriv = apply_derivation(deriv);
                        }
                        FieldElement binom = FieldElement::from_integer(
                            ctx->field(), generalized_binomial(Int(-m), static_cast<unsigned>(i)));
                        r[m + i + j] = r[m + i + j] + a.coeffs_[m] * binom * deriv;
                    }
                }
            }
            break;
        }
        case RingKind::Twisted: {
            // pi^m * c = sigma^m(c) pi^m
            for (int m = 0; m < n; ++m) {
                if (a.coeffs_[m].is_zero()) continue;
                for (int j = 0; j + m < n; ++j) {
                    if (b.coeffs_[j].is_zero()) continue;
                    r[m + j] = r[m + j] + a.coeffs_[m] * automorphism_power(b.coeffs_[j], m);
                }
            }
            break;
        }
    }
    return LocalElement(ctx, std::move(r));
}

LocalElement LocalElement::inverse() const {
    if (coeffs_[0].is_zero())
        throw NotAUnit("series with zero constant term has no inverse");
    const int n = ctx_->precision();
    FieldElement c0_inv = coeffs_[0].inverse();
    LocalElement v = zero(ctx_);
    for (int s = 0; s < n; ++s) {
        // the pi^s coefficient of a*v is (partial sum) + c_0 * v_s
        LocalElement partial = *this * v;
        FieldElement target = s == 0 ? FieldElement::one(ctx_->field())
                                     : FieldElement::zero(ctx_->field());
        v.coeffs_[static_cast<size_t>(s)] =
            c0_inv * (target - partial.coeffs_[static_cast<size_t>(s)]);
    }
    return v;
}

LocalElement LocalElement::pow(unsigned e) const {
    LocalElement r = one(ctx_);
    for (unsigned k = 0; k < e; ++k)
        r = r * *this;
    return r;
}

bool operator==(const LocalElement& a, const LocalElement& b) {
    return same_context(a.ctx_, b.ctx_) && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// almost-commutativity probe

ProbeResult is_almost_commutative_probe(const RingCtxPtr& ctx,
                                        const std::vector<FieldElement>& samples) {
    if (samples.empty())
        throw Error("probe requires a nonempty sample list");
    const int threshold = std::min(2, ctx->precision());
    LocalElement pi = LocalElement::generator(ctx);
    for (const auto& a : samples) {
        LocalElement lift = LocalElement::canonical_lift(ctx, a);
        LocalElement commutator = pi * lift - lift * pi;
        if (commutator.valuation() < threshold)
            return {false, a, commutator};
    }
    return {true, std::nullopt, std::nullopt};
}

} // namespace hensel
