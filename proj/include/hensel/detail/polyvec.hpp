#ifndef HENSEL_DETAIL_POLYVEC_HPP
#define HENSEL_DETAIL_POLYVEC_HPP

#include <utility>
#include <vector>

#include "hensel/field.hpp"

// Dense univariate polynomial helpers over FieldElement coefficient vectors,
// lowest degree first, no trailing zeros (zero polynomial = empty vector).
// Shared by the rational-function representation and the residue-polynomial
// toolkit.

namespace hensel::detail {

using PolyVec = std::vector<FieldElement>;

void pv_normalize(PolyVec& a);
int pv_degree(const PolyVec& a); // -1 for the zero polynomial
bool pv_is_monic(const PolyVec& a);

PolyVec pv_add(const FieldCtxPtr& ctx, const PolyVec& a, const PolyVec& b);
PolyVec pv_sub(const FieldCtxPtr& ctx, const PolyVec& a, const PolyVec& b);
PolyVec pv_neg(const PolyVec& a);
PolyVec pv_mul(const FieldCtxPtr& ctx, const PolyVec& a, const PolyVec& b);
PolyVec pv_scale(const PolyVec& a, const FieldElement& s);

/// (quotient, remainder) with a = q*b + r, deg r < deg b; requires b != 0.
std::pair<PolyVec, PolyVec> pv_divmod(const FieldCtxPtr& ctx, const PolyVec& a, const PolyVec& b);

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
PolyVec pv_gcd_monic(const FieldCtxPtr& ctx, PolyVec a, PolyVec b);

PolyVec pv_derivative(const FieldCtxPtr& ctx, const PolyVec& a);
PolyVec pv_make_monic(const PolyVec& a);
FieldElement pv_eval(const FieldCtxPtr& ctx, const PolyVec& a, const FieldElement& x);

} // namespace hensel::detail

#endif
