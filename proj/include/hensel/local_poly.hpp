#ifndef HENSEL_LOCAL_POLY_HPP
#define HENSEL_LOCAL_POLY_HPP

#include <utility>
#include <vector>

#include "hensel/local_ring.hpp"
#include "hensel/residue_poly.hpp"

namespace hensel {

/// Polynomial over a local ring A with central indeterminate x, dense
/// coefficients lowest degree first, no trailing zeros.
class LocalPoly {
public:
    LocalPoly(RingCtxPtr ctx, std::vector<LocalElement> coeffs);

    static LocalPoly zero(const RingCtxPtr& ctx);
    static LocalPoly one(const RingCtxPtr& ctx);
    static LocalPoly constant(const LocalElement& c);
    static LocalPoly x(const RingCtxPtr& ctx);
    /// x - a, the right-division divisor shape.
    static LocalPoly x_minus(const LocalElement& a);

    const RingCtxPtr& context() const { return ctx_; }
    const std::vector<LocalElement>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;
    LocalElement coefficient(int i) const; // zero beyond degree

    LocalPoly operator-() const;
    friend LocalPoly operator+(const LocalPoly& a, const LocalPoly& b);
    friend LocalPoly operator-(const LocalPoly& a, const LocalPoly& b);
    /// Convolution with the non-commutative coefficient product a_i * b_j;
    /// x is central, so powers of x are never twisted.
    friend LocalPoly operator*(const LocalPoly& a, const LocalPoly& b);
    friend bool operator==(const LocalPoly& a, const LocalPoly& b);
    friend bool operator!=(const LocalPoly& a, const LocalPoly& b) { return !(a == b); }

private:
    RingCtxPtr ctx_;
    std::vector<LocalElement> coeffs_;
};

/// Coefficientwise reduction to the residue field.
ResiduePoly reduce_poly(const LocalPoly& f);

/// f(a) = sum_i c_i * a^i with coefficients multiplied on the left of the
/// powers; a is a right root of f when this vanishes.
LocalElement right_evaluate(const LocalPoly& f, const LocalElement& a);

/// f = g*(x - a) + rem with constant rem; rem equals right_evaluate(f, a).
std::pair<LocalPoly, LocalElement> right_divmod(const LocalPoly& f, const LocalElement& a);

/// min over coefficients of valuation; f lies in m^r[x] iff the result >= r.
/// Returns N for the zero polynomial.
int coeff_valuation_floor(const LocalPoly& f);

/// The residue polynomial whose x^j coefficient is the pi^r coefficient of
/// f's x^j coefficient — the image of f in (m^r/m^{r+1})[x] under pi^r -> 1.
/// Requires coeff_valuation_floor(f) >= r.
ResiduePoly leading_form(const LocalPoly& f, int r);

/// Inverse section of leading_form: each coefficient c of g becomes
/// c * pi^r in left-coefficient form.
LocalPoly shift_into_ideal(const ResiduePoly& g, int r, const RingCtxPtr& ctx);

} // namespace hensel

#endif
