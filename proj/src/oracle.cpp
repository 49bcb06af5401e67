#include "hensel/oracle.hpp"

namespace hensel {

namespace {

// Flat mod-p polynomial-over-truncated-series arithmetic for the search.
// poly[i*n + s] is the t^s coefficient of the x^i coefficient.
struct FlatSearch {
    long p;
    int n;      // series precision
    int d1, d2; // factor degrees
    std::vector<long> f; // (d1+d2+1)*n

    bool product_equals_f(const std::vector<long>& a, const std::vector<long>& b) const {
        const int dfull = d1 + d2;
        std::vector<long> r(static_cast<size_t>((dfull + 1) * n), 0);
        for (int i = 0; i <= d1; ++i)
            for (int j = 0; j <= d2; ++j)
                for (int u = 0; u < n; ++u) {
                    const long au = a[static_cast<size_t>(i * n + u)];
                    if (au == 0) continue;
                    for (int v = 0; u + v < n; ++v) {
                        auto& slot = r[static_cast<size_t>((i + j) * n + u + v)];
                        slot = (slot + au * b[static_cast<size_t>(j * n + v)]) % p;
                    }
                }
        return r == f;
    }
};

} // namespace

std::vector<std::pair<LocalPoly, LocalPoly>> exhaustive_factor_search(const LocalPoly& f,
                                                                      int d1, int d2) {
    const RingCtxPtr& ctx = f.context();
    if (ctx->kind() != RingKind::CommutativeSeries ||
        ctx->field()->kind() != FieldKind::PrimeField)
        throw UnsupportedField("exhaustive_factor_search requires a prime-field series ring");
    if (!f.is_monic())
        throw Error("exhaustive_factor_search requires a monic polynomial");
    if (d1 < 0 || d2 < 0 || d1 + d2 != f.degree())
        throw Error("factor degrees must be non-negative and sum to deg f");

    const int n = ctx->precision();
    if (n > SearchSpace::max_precision || f.degree() > SearchSpace::max_degree)
        throw SearchSpaceTooLarge();
    const long p = static_cast<long>(ctx->field()->modulus());
    long size = 1;
    for (int k = 0; k < n * (d1 + d2); ++k) {
        size *= p;
        if (size > SearchSpace::max_enumeration)
            throw SearchSpaceTooLarge();
    }

    FlatSearch fs{p, n, d1, d2, {}};
    fs.f.assign(static_cast<size_t>((d1 + d2 + 1) * n), 0);
    for (int i = 0; i <= f.degree(); ++i)
        for (int s = 0; s < n; ++s)
            fs.f[static_cast<size_t>(i * n + s)] =
                static_cast<long>(f.coefficients()[static_cast<size_t>(i)]
                                      .coefficient(s).residue_value());

    // monic candidates: d*n free digits plus a fixed leading 1
    auto init_candidate = [&](int d) {
        std::vector<long> c(static_cast<size_t>((d + 1) * n), 0);
        c[static_cast<size_t>(d * n)] = 1;
        return c;
    };
    auto advance = [&](std::vector<long>& c, int d) {
        for (int k = 0; k < d * n; ++k) {
            if (++c[static_cast<size_t>(k)] < p) return true;
            c[static_cast<size_t>(k)] = 0;
        }
        return false;
    };
    auto to_poly = [&](const std::vector<long>& c, int d) {
        std::vector<LocalElement> coeffs;
        coeffs.reserve(static_cast<size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) {
            std::vector<FieldElement> series;
            series.reserve(static_cast<size_t>(n));
            for (int s = 0; s < n; ++s)
                series.push_back(FieldElement::residue(ctx->field(),
                                                       Int(c[static_cast<size_t>(i * n + s)])));
            coeffs.push_back(LocalElement::from_coefficients(ctx, std::move(series)));
        }
        return LocalPoly(ctx, std::move(coeffs));
    };

    std::vector<std::pair<LocalPoly, LocalPoly>> found;
    std::vector<long> c1 = init_candidate(d1);
    do {
        std::vector<long> c2 = init_candidate(d2);
        do {
            if (fs.product_equals_f(c1, c2))
                found.emplace_back(to_poly(c1, d1), to_poly(c2, d2));
        } while (advance(c2, d2));
    } while (advance(c1, d1));
    return found;
}

namespace {

// acc += sign * (pi * c) * pi^shift, using only the one-step rewriting
// pi*c = c*pi - (pi*c')*pi.
void add_pi_times_scalar(std::vector<FieldElement>& acc, const FieldElement& c,
                         int shift, int sign, int n) {
    if (shift + 1 >= n || c.is_zero())
        return;
    auto& slot = acc[static_cast<size_t>(shift + 1)];
    slot = sign > 0 ? slot + c : slot - c;
    add_pi_times_scalar(acc, apply_derivation(c), shift + 1, -sign, n);
}

LocalElement pi_times(const LocalElement& e) {
    const RingCtxPtr& ctx = e.context();
    const int n = ctx->precision();
    std::vector<FieldElement> acc(static_cast<size_t>(n), FieldElement::zero(ctx->field()));
    for (int j = 0; j < n; ++j)
        add_pi_times_scalar(acc, e.coefficient(j), j, 1, n);
    return LocalElement::from_coefficients(ctx, std::move(acc));
}

LocalElement scalar_left_mul(const FieldElement& c, const LocalElement& e) {
    std::vector<FieldElement> r;
    r.reserve(e.coefficients().size());
    for (const auto& x : e.coefficients())
        r.push_back(c * x);
    return LocalElement::from_coefficients(e.context(), std::move(r));
}

} // namespace

LocalElement volterra_mul_recursive_oracle(const LocalElement& a, const LocalElement& b) {
    const RingCtxPtr& ctx = a.context();
    if (ctx->kind() != RingKind::Volterra)
        throw Error("volterra_mul_recursive_oracle requires a Volterra ring");
    if (!same_context(ctx, b.context()))
        throw ContextMismatch();
    // a*b = sum_m a_m * (pi^m * b), with pi^m * b built by repeated one-step
    // rewriting
    LocalElement result = LocalElement::zero(ctx);
    LocalElement cur = b;
    for (int m = 0; m < ctx->precision(); ++m) {
        if (!a.coefficient(m).is_zero())
            result = result + scalar_left_mul(a.coefficient(m), cur);
        cur = pi_times(cur);
    }
    return result;
}

bool series_power_check(const LocalElement& a, const LocalElement& target, int exponent) {
    if (exponent < 1)
        throw Error("series_power_check requires exponent >= 1");
    return a.pow(static_cast<unsigned>(exponent)) == target;
}

} // namespace hensel
