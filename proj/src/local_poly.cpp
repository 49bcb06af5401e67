#include "hensel/local_poly.hpp"

namespace hensel {

namespace {

void check_same_context(const LocalPoly& a, const LocalPoly& b) {
    if (!same_context(a.context(), b.context()))
        throw ContextMismatch();
}

} // namespace

LocalPoly::LocalPoly(RingCtxPtr ctx, std::vector<LocalElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!same_context(c.context(), ctx_))
            throw ContextMismatch("polynomial coefficient from a different ring");
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

LocalPoly LocalPoly::zero(const RingCtxPtr& ctx) { return LocalPoly(ctx, {}); }

LocalPoly LocalPoly::one(const RingCtxPtr& ctx) {
    return LocalPoly(ctx, {LocalElement::one(ctx)});
}

LocalPoly LocalPoly::constant(const LocalElement& c) {
    return LocalPoly(c.context(), {c});
}

LocalPoly LocalPoly::x(const RingCtxPtr& ctx) {
    return LocalPoly(ctx, {LocalElement::zero(ctx), LocalElement::one(ctx)});
}

LocalPoly LocalPoly::x_minus(const LocalElement& a) {
    return LocalPoly(a.context(), {-a, LocalElement::one(a.context())});
}

bool LocalPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

LocalElement LocalPoly::coefficient(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size())
        return LocalElement::zero(ctx_);
    return coeffs_[static_cast<size_t>(i)];
}

LocalPoly LocalPoly::operator-() const {
    std::vector<LocalElement> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        r.push_back(-c);
    return LocalPoly(ctx_, std::move(r));
}

LocalPoly operator+(const LocalPoly& a, const LocalPoly& b) {
    check_same_context(a, b);
    std::vector<LocalElement> r;
    const size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < a.coeffs_.size() && i < b.coeffs_.size())
            r.push_back(a.coeffs_[i] + b.coeffs_[i]);
        else if (i < a.coeffs_.size())
            r.push_back(a.coeffs_[i]);
        else
            r.push_back(b.coeffs_[i]);
    }
    return LocalPoly(a.ctx_, std::move(r));
}

LocalPoly operator-(const LocalPoly& a, const LocalPoly& b) {
    return a + (-b);
}

LocalPoly operator*(const LocalPoly& a, const LocalPoly& b) {
    check_same_context(a, b);
    if (a.is_zero() || b.is_zero())
        return LocalPoly::zero(a.ctx_);
    std::vector<LocalElement> r(a.coeffs_.size() + b.coeffs_.size() - 1,
                                LocalElement::zero(a.ctx_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return LocalPoly(a.ctx_, std::move(r));
}

bool operator==(const LocalPoly& a, const LocalPoly& b) {
    return same_context(a.ctx_, b.ctx_) && a.coeffs_ == b.coeffs_;
}

ResiduePoly reduce_poly(const LocalPoly& f) {
    std::vector<FieldElement> r;
    r.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients())
        r.push_back(c.residue());
    return ResiduePoly(f.context()->field(), std::move(r));
}

LocalElement right_evaluate(const LocalPoly& f, const LocalElement& a) {
    if (!same_context(f.context(), a.context()))
        throw ContextMismatch();
    // left-coefficient Horner: ((c_n a + c_{n-1}) a + ...) a + c_0
    LocalElement r = LocalElement::zero(f.context());
    for (size_t k = f.coefficients().size(); k-- > 0;)
        r = r * a + f.coefficients()[k];
    return r;
}

std::pair<LocalPoly, LocalElement> right_divmod(const LocalPoly& f, const LocalElement& a) {
    if (!same_context(f.context(), a.context()))
        throw ContextMismatch();
    const int n = f.degree();
    if (n <= 0) {
        LocalElement rem = n < 0 ? LocalElement::zero(f.context()) : f.coefficients()[0];
        return {LocalPoly::zero(f.context()), std::move(rem)};
    }
    // synthetic division with the root multiplied on the right:
    // g_{i-1} = f_i + g_i * a, rem = f_0 + g_0 * a
    std::vector<LocalElement> g(static_cast<size_t>(n), LocalElement::zero(f.context()));
    LocalElement acc = f.coefficients()[static_cast<size_t>(n)];
    for (int i = n - 1; i >= 1; --i) {
        g[static_cast<size_t>(i)] = acc;
        acc = f.coefficients()[static_cast<size_t>(i)] + acc * a;
    }
    g[0] = acc;
    LocalElement rem = f.coefficients()[0] + acc * a;
    return {LocalPoly(f.context(), std::move(g)), std::move(rem)};
}

int coeff_valuation_floor(const LocalPoly& f) {
    int floor = f.context()->precision();
    for (const auto& c : f.coefficients())
        floor = std::min(floor, c.valuation());
    return floor;
}

ResiduePoly leading_form(const LocalPoly& f, int r) {
    if (r < 0 || r >= f.context()->precision())
        throw Error("leading_form stage out of range");
    if (coeff_valuation_floor(f) < r)
        throw NotInIdealPower();
    std::vector<FieldElement> out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients())
        out.push_back(c.coefficient(r));
    return ResiduePoly(f.context()->field(), std::move(out));
}

LocalPoly shift_into_ideal(const ResiduePoly& g, int r, const RingCtxPtr& ctx) {
    if (r < 0 || r >= ctx->precision())
        throw Error("shift_into_ideal stage out of range");
    if (!same_context(g.context(), ctx->field()))
        throw ContextMismatch();
    std::vector<LocalElement> out;
    out.reserve(g.coefficients().size());
    for (const auto& c : g.coefficients())
        out.push_back(LocalElement::monomial(ctx, c, r));
    return LocalPoly(ctx, std::move(out));
}

} // namespace hensel
