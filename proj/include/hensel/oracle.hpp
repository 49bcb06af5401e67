#ifndef HENSEL_ORACLE_HPP
#define HENSEL_ORACLE_HPP

#include <utility>
#include <vector>

#include "hensel/local_poly.hpp"

// Independent brute-force verifiers. These deliberately avoid the engine's
// code paths so they can certify its outputs.

namespace hensel {

/// Bounds for the exhaustive factor search: prime-field series only, with
/// the total enumeration size p^(n*(d1+d2)) capped.
struct SearchSpace {
    static constexpr int max_precision = 3;
    static constexpr int max_degree = 3;
    static constexpr long max_enumeration = 10'000'000;
};

/// Enumerates every pair of monic polynomials (F1, F2) of degrees (d1, d2)
/// over GF(p)[[t]]/(t^n) and returns all pairs with F1*F2 = f, in a fixed
/// deterministic order. Throws SearchSpaceTooLarge beyond the SearchSpace
/// bounds.
std::vector<std::pair<LocalPoly, LocalPoly>> exhaustive_factor_search(const LocalPoly& f,
                                                                      int d1, int d2);

/// Volterra product computed only from the single-step rewriting
/// pi*c = c*pi - pi*c'*pi, expanded recursively to precision N. Never
/// invokes the closed-form binomial rule, so it cross-checks elem_mul.
LocalElement volterra_mul_recursive_oracle(const LocalElement& a, const LocalElement& b);

/// True iff a^exponent = target exactly in A/m^N (exponent >= 1).
bool series_power_check(const LocalElement& a, const LocalElement& target, int exponent);

} // namespace hensel

#endif
