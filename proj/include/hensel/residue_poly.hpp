#ifndef HENSEL_RESIDUE_POLY_HPP
#define HENSEL_RESIDUE_POLY_HPP

#include <utility>
#include <vector>

#include "hensel/field.hpp"

namespace hensel {

/// Univariate polynomial over a commutative residue field k, dense
/// coefficients lowest degree first, no trailing zeros.
class ResiduePoly {
public:
    ResiduePoly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);

    static ResiduePoly zero(const FieldCtxPtr& ctx);
    static ResiduePoly one(const FieldCtxPtr& ctx);
    static ResiduePoly constant(const FieldElement& c);
    static ResiduePoly x(const FieldCtxPtr& ctx);
    static ResiduePoly monomial(const FieldElement& c, int degree);

    const FieldCtxPtr& context() const { return ctx_; }
    const std::vector<FieldElement>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    const FieldElement& leading() const; // requires a nonzero polynomial
    FieldElement coefficient(int i) const;

    ResiduePoly derivative() const;
    FieldElement evaluate(const FieldElement& at) const;
    ResiduePoly make_monic() const;
    ResiduePoly pow(unsigned e) const;

    ResiduePoly operator-() const;
    friend ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b);
    friend ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b);
    friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b);
    ResiduePoly operator*(const FieldElement& s) const;
    friend bool operator==(const ResiduePoly& a, const ResiduePoly& b);
    friend bool operator!=(const ResiduePoly& a, const ResiduePoly& b) { return !(a == b); }

private:
    FieldCtxPtr ctx_;
    std::vector<FieldElement> coeffs_;
};

/// (quotient, remainder) with a = q*b + r and deg r < deg b.
std::pair<ResiduePoly, ResiduePoly> divmod(const ResiduePoly& a, const ResiduePoly& b);

struct ExtendedEuclidResult {
    ResiduePoly g; // monic gcd
    ResiduePoly u;
    ResiduePoly v; // u*a + v*b = g
};

ExtendedEuclidResult extended_euclid(const ResiduePoly& a, const ResiduePoly& b);

struct BezoutPair {
    ResiduePoly g1;
    ResiduePoly g2;
};

/// The unique (G1, G2) with f2*G1 + f1*G2 = c, deg G1 < deg f1 and
/// deg G2 < deg f2, for monic coprime f1, f2 and deg c < deg f1 + deg f2.
BezoutPair bezout_solve_constrained(const ResiduePoly& f1, const ResiduePoly& f2,
                                    const ResiduePoly& c);

struct PrimePower {
    ResiduePoly base; // monic irreducible
    int multiplicity;
    ResiduePoly block() const { return base.pow(static_cast<unsigned>(multiplicity)); }
};

/// Factors a monic polynomial over a small prime field into prime-power
/// blocks by exhaustive trial division. Requires GF(p) with p <= 101 and
/// deg f <= 12.
std::vector<PrimePower> factor_primepowers(const ResiduePoly& f);

/// True iff f(r) = 0 and f'(r) != 0.
bool is_simple_root(const ResiduePoly& f, const FieldElement& r);

} // namespace hensel

#endif
