#ifndef HENSEL_LIFTING_HPP
#define HENSEL_LIFTING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "hensel/local_poly.hpp"

namespace hensel {

enum class LiftStatus { Lifted, Obstructed };

enum class ObstructionKind {
    ResidueNotCoprime,
    StepVerificationFailed,
    DegreeViolation
};

/// Evidence that a lifting stage has no solution.
struct ObstructionReport {
    int stage;                        // the stage r at which lifting failed
    ResiduePoly residual_leading_form; // leading form of the witness at stage r
    ObstructionKind classification;
    LocalPoly witness;                // the residual f - F1*F2 at failure
};

struct LiftOutcome {
    LiftStatus status;
    std::optional<std::pair<LocalPoly, LocalPoly>> factors; // (F1, F2) when lifted
    std::optional<ObstructionReport> obstruction;
    int stages_completed;

    bool lifted() const { return status == LiftStatus::Lifted; }
};

/// Coefficientwise canonical lift of a residue factor pair; the stage-1
/// starting point of the induction.
std::pair<LocalPoly, LocalPoly> initial_lift(const ResiduePoly& f1, const ResiduePoly& f2,
                                             const RingCtxPtr& ctx);

using StepResult = std::variant<std::pair<LocalPoly, LocalPoly>, ObstructionReport>;

/// One stage of the inductive construction: improves F1, F2 so that the
/// residual f - F1*F2 drops from m^r[x] into m^{r+1}[x], verifying the drop.
StepResult lift_step(const LocalPoly& f, const LocalPoly& f1_r, const LocalPoly& f2_r, int r);

/// Full factorization lift: f monic over A with reduce_poly(f) = f1*f2 for
/// monic coprime residue factors. Returns the lifted pair with
/// f = F1*F2 exactly in A/m^N, or the first obstruction.
LiftOutcome hensel_lift(const LocalPoly& f, const ResiduePoly& f1, const ResiduePoly& f2);

using RootResult = std::variant<LocalElement, ObstructionReport>;

/// Lifts a simple residue root r0 of a monic f to a right root a of f
/// (f = F1*(x - a)); verifies right_evaluate(f, a) = 0.
RootResult lift_root(const LocalPoly& f, const FieldElement& r0);

using CommuteResult = std::variant<std::pair<LocalPoly, LocalPoly>, ObstructionReport>;

/// For monic p, q with coprime reductions, finds monic p1 (deg = deg q) and
/// q1 (deg = deg p) with p1*p = q1*q in A/m^N.
CommuteResult commute_factors(const LocalPoly& p, const LocalPoly& q);

using DecompositionResult = std::variant<std::vector<LocalPoly>, ObstructionReport>;

/// Factors a monic f along pairwise-coprime monic prime-power blocks of its
/// reduction: returns p_1, ..., p_s with p_1*...*p_s = f in A/m^N and
/// reduce_poly(p_i) = blocks[i].
DecompositionResult primary_decomposition(const LocalPoly& f,
                                          const std::vector<ResiduePoly>& blocks);

/// Re-runs a successful lift with one stage correction deliberately offset
/// by an element of m^{r+1}[x] and checks that the final factor pair is
/// unchanged — uniqueness of the lift at finite precision.
bool uniqueness_check(const LocalPoly& f, const ResiduePoly& f1, const ResiduePoly& f2,
                      std::uint64_t perturbation_seed);

} // namespace hensel

#endif
