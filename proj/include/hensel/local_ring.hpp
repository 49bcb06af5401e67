#ifndef HENSEL_LOCAL_RING_HPP
#define HENSEL_LOCAL_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hensel/field.hpp"

namespace hensel {

enum class RingKind {
    CommutativeSeries, // k[[t]]
    Volterra,          // series in the inverse of a derivation operator
    Twisted            // series twisted by a field automorphism
};

class LocalRingContext;
using RingCtxPtr = std::shared_ptr<const LocalRingContext>;

/// Truncated local ring A/m^N with principal maximal ideal m = (pi).
/// Elements are series sum c_j pi^j with coefficients written on the left of
/// the generator powers.
class LocalRingContext {
public:
    static RingCtxPtr series(FieldCtxPtr field, std::string generator_name, int precision);
    /// Requires the coefficient field to carry a derivation.
    static RingCtxPtr volterra(FieldCtxPtr field, int precision);
    /// Requires the coefficient field to carry an automorphism.
    static RingCtxPtr twisted(FieldCtxPtr field, int precision);

    RingKind kind() const { return kind_; }
    const FieldCtxPtr& field() const { return field_; }
    int precision() const { return precision_; }
    /// Display name of the generator (t / the inverse-operator symbol / tau).
    const std::string& generator_name() const { return generator_name_; }

private:
    LocalRingContext() = default;

    RingKind kind_ = RingKind::CommutativeSeries;
    FieldCtxPtr field_;
    int precision_ = 1;
    std::string generator_name_;
};

bool same_context(const LocalRingContext& a, const LocalRingContext& b);
bool same_context(const RingCtxPtr& a, const RingCtxPtr& b);

/// A truncated series sum_{j<N} c_j pi^j. Exactly N coefficients are stored;
/// all arithmetic is exact in A/m^N.
class LocalElement {
public:
    static LocalElement zero(const RingCtxPtr& ctx);
    static LocalElement one(const RingCtxPtr& ctx);
    static LocalElement generator(const RingCtxPtr& ctx); // pi
    /// Constant series with c_0 = a (a fixed section of the reduction map).
    static LocalElement canonical_lift(const RingCtxPtr& ctx, const FieldElement& a);
    /// Pads with zeros up to N; rejects more than N coefficients.
    static LocalElement from_coefficients(const RingCtxPtr& ctx, std::vector<FieldElement> coeffs);
    /// c * pi^j, truncated to zero when j >= N.
    static LocalElement monomial(const RingCtxPtr& ctx, const FieldElement& c, int j);

    const RingCtxPtr& context() const { return ctx_; }
    const std::vector<FieldElement>& coefficients() const { return coeffs_; }
    const FieldElement& coefficient(int j) const { return coeffs_.at(static_cast<size_t>(j)); }
    int precision() const { return static_cast<int>(coeffs_.size()); }

    bool is_zero() const;
    bool is_one() const;
    /// min{j : c_j != 0}, or N for the zero element.
    int valuation() const;
    /// c_0, the image in the residue field.
    FieldElement residue() const { return coeffs_[0]; }

    LocalElement operator-() const;
    friend LocalElement operator+(const LocalElement& a, const LocalElement& b);
    friend LocalElement operator-(const LocalElement& a, const LocalElement& b);
    friend LocalElement operator*(const LocalElement& a, const LocalElement& b);
    /// Two-sided inverse of a unit (c_0 != 0), solved coefficient by
    /// coefficient. Throws NotAUnit otherwise.
    LocalElement inverse() const;
    LocalElement pow(unsigned e) const;

    friend bool operator==(const LocalElement& a, const LocalElement& b);
    friend bool operator!=(const LocalElement& a, const LocalElement& b) { return !(a == b); }

private:
    LocalElement(RingCtxPtr ctx, std::vector<FieldElement> coeffs)
        : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

    RingCtxPtr ctx_;
    std::vector<FieldElement> coeffs_; // exactly N entries
};

/// Result of the almost-commutativity probe.
struct ProbeResult {
    bool almost_commutative;
    /// On failure: the sample whose commutator with pi has valuation < 2,
    /// and the commutator itself.
    std::optional<FieldElement> witness_sample;
    std::optional<LocalElement> witness_commutator;
};

/// Checks valuation(pi*a - a*pi) >= 2 for the canonical lift of each sample.
/// For the supported ring kinds this is decisive on generators: the
/// associated graded ring is commutative iff the probe passes.
ProbeResult is_almost_commutative_probe(const RingCtxPtr& ctx,
                                        const std::vector<FieldElement>& samples);

} // namespace hensel

#endif
