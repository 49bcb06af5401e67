#ifndef HENSEL_FIELD_HPP
#define HENSEL_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hensel/errors.hpp"

namespace hensel {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind {
    Rationals,         // Q
    PrimeField,        // GF(p)
    GaussianRationals, // Q(i)
    RationalFunctions  // base(variable)
};

enum class AutomorphismKind { None, Identity, Conjugation };
enum class DerivationKind { None, Zero, DDVar };

class FieldContext;
using FieldCtxPtr = std::shared_ptr<const FieldContext>;

/// Immutable description of a coefficient/residue field, optionally carrying
/// the automorphism and derivation that the twisted and Volterra
/// multiplication laws require.
class FieldContext {
public:
    static FieldCtxPtr rationals();
    static FieldCtxPtr prime_field(const Int& p); // p must be prime
    static FieldCtxPtr gaussian_rationals();
    static FieldCtxPtr rational_functions(FieldCtxPtr base, std::string variable);

    /// Returns a copy of this context with the given automorphism attached.
    /// Conjugation is only available on Q(i); the map is validated as a field
    /// homomorphism on sampled pairs.
    FieldCtxPtr with_automorphism(AutomorphismKind a) const;

    /// Returns a copy with the given derivation attached. d/d<var> is only
    /// available on rational-function fields; the Leibniz rule is validated
    /// on sampled pairs.
    FieldCtxPtr with_derivation(DerivationKind d) const;

    FieldKind kind() const { return kind_; }
    const Int& modulus() const { return modulus_; }
    const FieldCtxPtr& base() const { return base_; }
    const std::string& variable() const { return variable_; }
    AutomorphismKind automorphism() const { return automorphism_; }
    DerivationKind derivation() const { return derivation_; }
    bool has_automorphism() const { return automorphism_ != AutomorphismKind::None; }
    bool has_derivation() const { return derivation_ != DerivationKind::None; }

    /// Characteristic of the field: p for GF(p), 0 otherwise.
    Int characteristic() const;

private:
    FieldContext() = default;

    FieldKind kind_ = FieldKind::Rationals;
    Int modulus_;
    FieldCtxPtr base_;
    std::string variable_;
    AutomorphismKind automorphism_ = AutomorphismKind::None;
    DerivationKind derivation_ = DerivationKind::None;
};

/// Structural equality (kind, modulus, base recursion, variable,
/// automorphism and derivation choice).
bool same_context(const FieldContext& a, const FieldContext& b);
bool same_context(const FieldCtxPtr& a, const FieldCtxPtr& b);

class FieldElement;

struct GaussianValue {
    Rat re;
    Rat im;
    friend bool operator==(const GaussianValue&, const GaussianValue&) = default;
};

/// Reduced fraction of dense polynomials over the base field, coefficients
/// lowest degree first. Denominator monic, numerator and denominator coprime,
/// the zero element is num = {} over den = {1}.
struct RationalFunctionValue {
    std::vector<FieldElement> num;
    std::vector<FieldElement> den;
    friend bool operator==(const RationalFunctionValue&, const RationalFunctionValue&);
};

/// An exact scalar in one of the supported fields. The representation is
/// canonical, so equality is representation equality.
class FieldElement {
public:
    static FieldElement zero(const FieldCtxPtr& ctx);
    static FieldElement one(const FieldCtxPtr& ctx);
    static FieldElement from_integer(const FieldCtxPtr& ctx, const Int& n);
    static FieldElement from_rational(const FieldCtxPtr& ctx, const Rat& q);
    static FieldElement residue(const FieldCtxPtr& ctx, const Int& value);
    static FieldElement gaussian(const FieldCtxPtr& ctx, Rat re, Rat im);
    static FieldElement rational_function(const FieldCtxPtr& ctx,
                                          std::vector<FieldElement> num,
                                          std::vector<FieldElement> den);
    /// The generator t of a rational-function field.
    static FieldElement variable(const FieldCtxPtr& ctx);

    const FieldCtxPtr& context() const { return ctx_; }
    FieldKind kind() const { return ctx_->kind(); }
    bool is_zero() const;
    bool is_one() const;

    const Rat& rational_value() const;
    const Int& residue_value() const;
    const GaussianValue& gaussian_value() const;
    const RationalFunctionValue& rational_function_value() const;

    FieldElement operator-() const;
    FieldElement inverse() const; // throws DivisionByZero on zero

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    using Value = std::variant<Rat, Int, GaussianValue, RationalFunctionValue>;

    FieldElement(FieldCtxPtr ctx, Value v) : ctx_(std::move(ctx)), value_(std::move(v)) {}

    FieldCtxPtr ctx_;
    Value value_;

    friend FieldElement renormalized(const FieldElement& a);
};

enum class FieldOp { Add, Sub, Mul, Div, Neg, Inv };

/// Enum-dispatched arithmetic. Binary ops require b; Neg/Inv ignore it.
FieldElement field_arith(FieldOp op, const FieldElement& a,
                         const std::optional<FieldElement>& b = std::nullopt);

/// sigma(a) for the automorphism attached to a's context.
FieldElement apply_automorphism(const FieldElement& a);

/// order-fold application of the context's derivation; order 0 returns a.
FieldElement apply_derivation(const FieldElement& a, unsigned order = 1);

/// n(n-1)...(n-i+1)/i!, always an integer, for any integer n (negative
/// included) and i >= 0.
Int generalized_binomial(const Int& n, unsigned i);

/// Rebuilds the element from its raw parts through the canonicalization
/// path. Canonical-form idempotence means this is the identity.
FieldElement renormalized(const FieldElement& a);

} // namespace hensel

#endif
