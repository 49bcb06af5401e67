#include "hensel/lifting.hpp"

#include <functional>
#include <random>

namespace hensel {

namespace {

// Shared stage driver for hensel_lift and uniqueness_check. The hook, when
// set, may modify the factor pair after a stage completes (used to inject
// m^{r+1}[x] offsets); it must preserve the stage invariants.
using StageHook = std::function<void(int stage, LocalPoly& F1, LocalPoly& F2)>;

LiftOutcome run_lift(const LocalPoly& f, const ResiduePoly& f1, const ResiduePoly& f2,
                     const StageHook& hook) {
    const RingCtxPtr& ctx = f.context();
    if (!f.is_monic())
        throw Error("hensel_lift requires a monic polynomial");
    if (!f1.is_monic() || !f2.is_monic())
        throw Error("hensel_lift requires monic residue factors");
    if (reduce_poly(f) != f1 * f2)
        throw ResidueFactorizationMismatch();
    if (!extended_euclid(f1, f2).g.is_one())
        throw NotCoprime("residue factors must be coprime");

    auto [F1, F2] = initial_lift(f1, f2, ctx);
    int stages = 0;
    for (int r = 1; r < ctx->precision(); ++r) {
        StepResult step = lift_step(f, F1, F2, r);
        if (auto* obstruction = std::get_if<ObstructionReport>(&step))
            return {LiftStatus::Obstructed, std::nullopt, std::move(*obstruction), stages};
        std::tie(F1, F2) = std::get<std::pair<LocalPoly, LocalPoly>>(std::move(step));
        if (hook)
            hook(r, F1, F2);
        ++stages;
    }

    // soundness: the per-stage checks imply these, so a failure here is a bug
    if (coeff_valuation_floor(f - F1 * F2) < ctx->precision() ||
        reduce_poly(F1) != f1 || reduce_poly(F2) != f2 || !F1.is_monic() || !F2.is_monic())
        throw Error("internal: lifted factors failed the soundness check");
    return {LiftStatus::Lifted, std::make_pair(std::move(F1), std::move(F2)), std::nullopt, stages};
}

} // namespace

std::pair<LocalPoly, LocalPoly> initial_lift(const ResiduePoly& f1, const ResiduePoly& f2,
                                             const RingCtxPtr& ctx) {
    auto lift_one = [&](const ResiduePoly& g) {
        std::vector<LocalElement> coeffs;
        coeffs.reserve(g.coefficients().size());
        for (const auto& c : g.coefficients())
            coeffs.push_back(LocalElement::canonical_lift(ctx, c));
        return LocalPoly(ctx, std::move(coeffs));
    };
    return {lift_one(f1), lift_one(f2)};
}

StepResult lift_step(const LocalPoly& f, const LocalPoly& f1_r, const LocalPoly& f2_r, int r) {
    const RingCtxPtr& ctx = f.context();
    if (r < 1 || r >= ctx->precision())
        throw Error("lift stage out of range");
    if (!f.is_monic() || !f1_r.is_monic() || !f2_r.is_monic())
        throw Error("lift_step requires monic polynomials");

    LocalPoly residual = f - f1_r * f2_r;
    if (coeff_valuation_floor(residual) < r)
        throw NotInIdealPower("residual is not in m^r[x]");

    ResiduePoly c = leading_form(residual, r);
    ResiduePoly f1 = reduce_poly(f1_r);
    ResiduePoly f2 = reduce_poly(f2_r);

    std::optional<BezoutPair> g;
    try {
        g = bezout_solve_constrained(f1, f2, c);
    } catch (const NotCoprime&) {
        return ObstructionReport{r, std::move(c), ObstructionKind::ResidueNotCoprime,
                                 std::move(residual)};
    } catch (const DegreeTooLarge&) {
        return ObstructionReport{r, std::move(c), ObstructionKind::DegreeViolation,
                                 std::move(residual)};
    }

    LocalPoly f1_next = f1_r + shift_into_ideal(g->g1, r, ctx);
    LocalPoly f2_next = f2_r + shift_into_ideal(g->g2, r, ctx);

    // In an almost commutative ring the correction always clears stage r;
    // elsewhere it can fail, which is exactly the obstruction.
    LocalPoly next_residual = f - f1_next * f2_next;
    if (coeff_valuation_floor(next_residual) < r + 1) {
        ResiduePoly lf = leading_form(next_residual, r);
        return ObstructionReport{r, std::move(lf), ObstructionKind::StepVerificationFailed,
                                 std::move(next_residual)};
    }
    return std::make_pair(std::move(f1_next), std::move(f2_next));
}

LiftOutcome hensel_lift(const LocalPoly& f, const ResiduePoly& f1, const ResiduePoly& f2) {
    return run_lift(f, f1, f2, nullptr);
}

RootResult lift_root(const LocalPoly& f, const FieldElement& r0) {
    if (!f.is_monic())
        throw Error("lift_root requires a monic polynomial");
    ResiduePoly fbar = reduce_poly(f);
    if (!is_simple_root(fbar, r0))
        throw NotASimpleRoot();
    // x - r0 is the right factor, so the lifted root is a right root
    ResiduePoly f2 = ResiduePoly(fbar.context(), {-r0, FieldElement::one(fbar.context())});
    auto [f1, rem] = divmod(fbar, f2);
    if (!rem.is_zero())
        throw Error("internal: simple root did not divide the reduction");
    LiftOutcome outcome = hensel_lift(f, f1, f2);
    if (!outcome.lifted())
        return std::move(*outcome.obstruction);
    const LocalPoly& F2 = outcome.factors->second;
    LocalElement a = -F2.coefficient(0);
    if (!right_evaluate(f, a).is_zero())
        throw Error("internal: lifted root failed right evaluation");
    return a;
}

CommuteResult commute_factors(const LocalPoly& p, const LocalPoly& q) {
    if (!same_context(p.context(), q.context()))
        throw ContextMismatch();
    const RingCtxPtr& ctx = p.context();
    if (!p.is_monic() || !q.is_monic())
        throw Error("commute_factors requires monic polynomials");
    ResiduePoly pbar = reduce_poly(p);
    ResiduePoly qbar = reduce_poly(q);
    if (!extended_euclid(pbar, qbar).g.is_one())
        throw NotCoprime("reductions of p and q must be coprime");

    // start from the swapped canonical lifts; in a commutative ring these
    // already satisfy p1*p = q1*q up to m[x]
    auto [p1, q1] = initial_lift(qbar, pbar, ctx);
    for (int r = 1; r < ctx->precision(); ++r) {
        LocalPoly residual = p1 * p - q1 * q;
        if (coeff_valuation_floor(residual) < r)
            throw Error("internal: commute residual escaped m^r[x]");
        ResiduePoly target = -leading_form(residual, r);

        std::optional<BezoutPair> g;
        try {
            // pbar*G1 + qbar*G2 = target with deg G1 < deg q, deg G2 < deg p
            g = bezout_solve_constrained(qbar, pbar, target);
        } catch (const DegreeTooLarge&) {
            return ObstructionReport{r, -target, ObstructionKind::DegreeViolation,
                                     std::move(residual)};
        }
        // g1*pbar - g2*qbar = target
        p1 = p1 + shift_into_ideal(g->g1, r, ctx);
        q1 = q1 + shift_into_ideal(-g->g2, r, ctx);

        LocalPoly next_residual = p1 * p - q1 * q;
        if (coeff_valuation_floor(next_residual) < r + 1) {
            ResiduePoly lf = leading_form(next_residual, r);
            return ObstructionReport{r, std::move(lf), ObstructionKind::StepVerificationFailed,
                                     std::move(next_residual)};
        }
    }
    if (p1.degree() != q.degree() || q1.degree() != p.degree() || !p1.is_monic() || !q1.is_monic())
        throw Error("internal: commuted factors failed the degree check");
    return std::make_pair(std::move(p1), std::move(q1));
}

DecompositionResult primary_decomposition(const LocalPoly& f,
                                          const std::vector<ResiduePoly>& blocks) {
    if (!f.is_monic())
        throw Error("primary_decomposition requires a monic polynomial");
    if (blocks.empty())
        throw Error("primary_decomposition requires at least one block");
    ResiduePoly product = ResiduePoly::one(f.context()->field());
    for (const auto& b : blocks)
        product = product * b;
    if (product != reduce_poly(f))
        throw BlockProductMismatch();

    std::vector<LocalPoly> out;
    LocalPoly rest = f;
    for (size_t i = 0; i + 1 < blocks.size(); ++i) {
        ResiduePoly tail = ResiduePoly::one(f.context()->field());
        for (size_t j = i + 1; j < blocks.size(); ++j)
            tail = tail * blocks[j];
        LiftOutcome outcome = hensel_lift(rest, blocks[i], tail);
        if (!outcome.lifted())
            return std::move(*outcome.obstruction);
        out.push_back(std::move(outcome.factors->first));
        rest = std::move(outcome.factors->second);
    }
    out.push_back(std::move(rest));
    return out;
}

bool uniqueness_check(const LocalPoly& f, const ResiduePoly& f1, const ResiduePoly& f2,
                      std::uint64_t perturbation_seed) {
    LiftOutcome baseline = hensel_lift(f, f1, f2);
    if (!baseline.lifted())
        throw Error("uniqueness_check requires a successful lift");

    const RingCtxPtr& ctx = f.context();
    const int n = ctx->precision();
    std::mt19937_64 rng(perturbation_seed);
    const int stage = n >= 2 ? 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1)) : 1;

    auto random_offset = [&](int deg_bound, int r) {
        // a random element of m^{r+1}[x] with degree < deg_bound
        std::vector<LocalElement> coeffs;
        for (int d = 0; d < deg_bound; ++d) {
            std::vector<FieldElement> c;
            for (int j = 0; j < n; ++j) {
                if (j <= r) {
                    c.push_back(FieldElement::zero(ctx->field()));
                } else {
                    Int v = Int(rng() % 7) - 3;
                    c.push_back(FieldElement::from_integer(ctx->field(), v));
                }
            }
            coeffs.push_back(LocalElement::from_coefficients(ctx, std::move(c)));
        }
        return LocalPoly(ctx, std::move(coeffs));
    };

    StageHook hook = [&](int r, LocalPoly& F1, LocalPoly& F2) {
        if (r != stage) return;
        F1 = F1 + random_offset(f1.degree(), r);
        F2 = F2 + random_offset(f2.degree(), r);
    };
    LiftOutcome perturbed = run_lift(f, f1, f2, hook);
    if (!perturbed.lifted())
        return false;
    return perturbed.factors->first == baseline.factors->first &&
           perturbed.factors->second == baseline.factors->second;
}

} // namespace hensel
