#include "hensel/field.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include "hensel/detail/polyvec.hpp"

namespace hensel {

namespace {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    if (p == 2 || p == 3) return true;
    if (p % 2 == 0) return false;
    return boost::multiprecision::miller_rabin_test(p, 32);
}

Int mod_reduce(Int v, const Int& p) {
    v %= p;
    if (v < 0) v += p;
    return v;
}

void check_same_context(const FieldElement& a, const FieldElement& b) {
    if (!same_context(a.context(), b.context()))
        throw ContextMismatch();
}

} // namespace

// ---------------------------------------------------------------------------
// FieldContext

FieldCtxPtr FieldContext::rationals() {
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->kind_ = FieldKind::Rationals;
    return ctx;
}

FieldCtxPtr FieldContext::prime_field(const Int& p) {
    if (!is_prime(p))
        throw Error("prime field modulus must be prime, got " + p.str());
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->kind_ = FieldKind::PrimeField;
    ctx->modulus_ = p;
    return ctx;
}

FieldCtxPtr FieldContext::gaussian_rationals() {
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->kind_ = FieldKind::GaussianRationals;
    return ctx;
}

FieldCtxPtr FieldContext::rational_functions(FieldCtxPtr base, std::string variable) {
    if (!base)
        throw Error("rational-function field requires a base field");
    if (variable.empty())
        throw Error("rational-function field requires a variable name");
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->kind_ = FieldKind::RationalFunctions;
    ctx->base_ = std::move(base);
    ctx->variable_ = std::move(variable);
    return ctx;
}

Int FieldContext::characteristic() const {
    switch (kind_) {
        case FieldKind::PrimeField: return modulus_;
        case FieldKind::RationalFunctions: return base_->characteristic();
        default: return 0;
    }
}

namespace {

// Small fixed sample sets used to validate attached maps at construction.
std::vector<FieldElement> map_check_samples(const FieldCtxPtr& ctx) {
    std::vector<FieldElement> s;
    switch (ctx->kind()) {
        case FieldKind::GaussianRationals:
            s.push_back(FieldElement::gaussian(ctx, Rat(1), Rat(2)));
            s.push_back(FieldElement::gaussian(ctx, Rat(-3), Rat(Int(1), Int(2))));
            s.push_back(FieldElement::gaussian(ctx, Rat(0), Rat(1)));
            break;
        case FieldKind::RationalFunctions: {
            FieldElement t = FieldElement::variable(ctx);
            FieldElement one = FieldElement::one(ctx);
            s.push_back(t);
            s.push_back(t * t + one);
            s.push_back(one / (t + one));
            break;
        }
        default:
            s.push_back(FieldElement::from_integer(ctx, 2));
            s.push_back(FieldElement::from_integer(ctx, -7));
            s.push_back(FieldElement::one(ctx));
            break;
    }
    return s;
}

} // namespace

FieldCtxPtr FieldContext::with_automorphism(AutomorphismKind a) const {
    if (a == AutomorphismKind::Conjugation && kind_ != FieldKind::GaussianRationals)
        throw Error("conjugation is only available on the Gaussian rationals");
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext(*this));
    ctx->automorphism_ = a;
    FieldCtxPtr out = ctx;
    if (a != AutomorphismKind::None) {
        // field-homomorphism check on sampled pairs
        auto samples = map_check_samples(out);
        for (const auto& x : samples)
            for (const auto& y : samples) {
                if (apply_automorphism(x * y) != apply_automorphism(x) * apply_automorphism(y) ||
                    apply_automorphism(x + y) != apply_automorphism(x) + apply_automorphism(y))
                    throw Error("automorphism failed the sampled homomorphism check");
            }
    }
    return out;
}

FieldCtxPtr FieldContext::with_derivation(DerivationKind d) const {
    if (d == DerivationKind::DDVar && kind_ != FieldKind::RationalFunctions)
        throw Error("d/d<var> is only available on rational-function fields");
    auto ctx = std::shared_ptr<FieldContext>(new FieldContext(*this));
    ctx->derivation_ = d;
    FieldCtxPtr out = ctx;
    if (d != DerivationKind::None) {
        // Leibniz-rule check on sampled pairs
        auto samples = map_check_samples(out);
        for (const auto& x : samples)
            for (const auto& y : samples) {
                if (apply_derivation(x * y) != apply_derivation(x) * y + x * apply_derivation(y))
                    throw Error("derivation failed the sampled Leibniz check");
            }
    }
    return out;
}

bool same_context(const FieldContext& a, const FieldContext& b) {
    if (a.kind() != b.kind()) return false;
    if (a.automorphism() != b.automorphism() || a.derivation() != b.derivation()) return false;
    switch (a.kind()) {
        case FieldKind::PrimeField:
            return a.modulus() == b.modulus();
        case FieldKind::RationalFunctions:
            return a.variable() == b.variable() && same_context(a.base(), b.base());
        default:
            return true;
    }
}

bool same_context(const FieldCtxPtr& a, const FieldCtxPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return same_context(*a, *b);
}

// ---------------------------------------------------------------------------
// FieldElement construction

bool operator==(const RationalFunctionValue& a, const RationalFunctionValue& b) {
    return a.num == b.num && a.den == b.den;
}

FieldElement FieldElement::zero(const FieldCtxPtr& ctx) {
    return from_integer(ctx, 0);
}

FieldElement FieldElement::one(const FieldCtxPtr& ctx) {
    return from_integer(ctx, 1);
}

FieldElement FieldElement::from_integer(const FieldCtxPtr& ctx, const Int& n) {
    switch (ctx->kind()) {
        case FieldKind::Rationals:
            return FieldElement(ctx, Value(Rat(n)));
        case FieldKind::PrimeField:
            return FieldElement(ctx, Value(mod_reduce(n, ctx->modulus())));
        case FieldKind::GaussianRationals:
            return FieldElement(ctx, Value(GaussianValue{Rat(n), Rat(0)}));
        case FieldKind::RationalFunctions: {
            FieldElement c = from_integer(ctx->base(), n);
            std::vector<FieldElement> num;
            if (!c.is_zero()) num.push_back(c);
            std::vector<FieldElement> den{one(ctx->base())};
            return FieldElement(ctx, Value(RationalFunctionValue{std::move(num), std::move(den)}));
        }
    }
    throw Error("unreachable field kind");
}

FieldElement FieldElement::from_rational(const FieldCtxPtr& ctx, const Rat& q) {
    switch (ctx->kind()) {
        case FieldKind::Rationals:
            return FieldElement(ctx, Value(q));
        case FieldKind::GaussianRationals:
            return FieldElement(ctx, Value(GaussianValue{q, Rat(0)}));
        default:
            return from_integer(ctx, numerator(q)) / from_integer(ctx, denominator(q));
    }
}

FieldElement FieldElement::residue(const FieldCtxPtr& ctx, const Int& value) {
    if (ctx->kind() != FieldKind::PrimeField)
        throw Error("residue() requires a prime field context");
    return FieldElement(ctx, Value(mod_reduce(value, ctx->modulus())));
}

FieldElement FieldElement::gaussian(const FieldCtxPtr& ctx, Rat re, Rat im) {
    if (ctx->kind() != FieldKind::GaussianRationals)
        throw Error("gaussian() requires the Gaussian rationals");
    return FieldElement(ctx, Value(GaussianValue{std::move(re), std::move(im)}));
}

FieldElement FieldElement::rational_function(const FieldCtxPtr& ctx,
                                             std::vector<FieldElement> num,
                                             std::vector<FieldElement> den) {
    if (ctx->kind() != FieldKind::RationalFunctions)
        throw Error("rational_function() requires a rational-function context");
    const FieldCtxPtr& base = ctx->base();
    for (const auto& c : num)
        if (!same_context(c.context(), base)) throw ContextMismatch();
    for (const auto& c : den)
        if (!same_context(c.context(), base)) throw ContextMismatch();
    detail::pv_normalize(num);
    detail::pv_normalize(den);
    if (den.empty())
        throw DivisionByZero("rational function with zero denominator");
    if (num.empty())
        return FieldElement(ctx, Value(RationalFunctionValue{{}, {one(base)}}));
    detail::PolyVec g = detail::pv_gcd_monic(base, num, den);
    if (detail::pv_degree(g) > 0) {
        num = detail::pv_divmod(base, num, g).first;
        den = detail::pv_divmod(base, den, g).first;
    }
    // normalize the denominator to be monic
    FieldElement lc = den.back();
    if (!lc.is_one()) {
        FieldElement inv = lc.inverse();
        num = detail::pv_scale(num, inv);
        den = detail::pv_scale(den, inv);
    }
    return FieldElement(ctx, Value(RationalFunctionValue{std::move(num), std::move(den)}));
}

FieldElement FieldElement::variable(const FieldCtxPtr& ctx) {
    if (ctx->kind() != FieldKind::RationalFunctions)
        throw Error("variable() requires a rational-function context");
    std::vector<FieldElement> num{zero(ctx->base()), one(ctx->base())};
    std::vector<FieldElement> den{one(ctx->base())};
    return FieldElement(ctx, Value(RationalFunctionValue{std::move(num), std::move(den)}));
}

// ---------------------------------------------------------------------------
// predicates and accessors

bool FieldElement::is_zero() const {
    switch (ctx_->kind()) {
        case FieldKind::Rationals: return std::get<Rat>(value_).is_zero();
        case FieldKind::PrimeField: return std::get<Int>(value_).is_zero();
        case FieldKind::GaussianRationals: {
            const auto& g = std::get<GaussianValue>(value_);
            return g.re.is_zero() && g.im.is_zero();
        }
        case FieldKind::RationalFunctions:
            return std::get<RationalFunctionValue>(value_).num.empty();
    }
    return false;
}

bool FieldElement::is_one() const {
    switch (ctx_->kind()) {
        case FieldKind::Rationals: return std::get<Rat>(value_) == 1;
        case FieldKind::PrimeField: return std::get<Int>(value_) == 1;
        case FieldKind::GaussianRationals: {
            const auto& g = std::get<GaussianValue>(value_);
            return g.re == 1 && g.im.is_zero();
        }
        case FieldKind::RationalFunctions: {
            const auto& f = std::get<RationalFunctionValue>(value_);
            return f.num.size() == 1 && f.num[0].is_one() && f.den.size() == 1;
        }
    }
    return false;
}

const Rat& FieldElement::rational_value() const { return std::get<Rat>(value_); }
const Int& FieldElement::residue_value() const { return std::get<Int>(value_); }
const GaussianValue& FieldElement::gaussian_value() const { return std::get<GaussianValue>(value_); }
const RationalFunctionValue& FieldElement::rational_function_value() const {
    return std::get<RationalFunctionValue>(value_);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!same_context(a.ctx_, b.ctx_)) return false;
    return a.value_ == b.value_;
}

// ---------------------------------------------------------------------------
// arithmetic

FieldElement FieldElement::operator-() const {
    switch (ctx_->kind()) {
        case FieldKind::Rationals:
            return FieldElement(ctx_, Value(Rat(-std::get<Rat>(value_))));
        case FieldKind::PrimeField:
            return FieldElement(ctx_, Value(mod_reduce(-std::get<Int>(value_), ctx_->modulus())));
        case FieldKind::GaussianRationals: {
            const auto& g = std::get<GaussianValue>(value_);
            return FieldElement(ctx_, Value(GaussianValue{-g.re, -g.im}));
        }
        case FieldKind::RationalFunctions: {
            const auto& f = std::get<RationalFunctionValue>(value_);
            return FieldElement(ctx_, Value(RationalFunctionValue{detail::pv_neg(f.num), f.den}));
        }
    }
    throw Error("unreachable field kind");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_context(a, b);
    switch (a.kind()) {
        case FieldKind::Rationals:
            return FieldElement(a.ctx_, FieldElement::Value(Rat(a.rational_value() + b.rational_value())));
        case FieldKind::PrimeField:
            return FieldElement(a.ctx_, FieldElement::Value(
                mod_reduce(a.residue_value() + b.residue_value(), a.ctx_->modulus())));
        case FieldKind::GaussianRationals: {
            const auto& x = a.gaussian_value();
            const auto& y = b.gaussian_value();
            return FieldElement(a.ctx_, FieldElement::Value(GaussianValue{x.re + y.re, x.im + y.im}));
        }
        case FieldKind::RationalFunctions: {
            const auto& x = a.rational_function_value();
            const auto& y = b.rational_function_value();
            const FieldCtxPtr& base = a.ctx_->base();
            auto num = detail::pv_add(base, detail::pv_mul(base, x.num, y.den),
                                      detail::pv_mul(base, y.num, x.den));
            auto den = detail::pv_mul(base, x.den, y.den);
            return FieldElement::rational_function(a.ctx_, std::move(num), std::move(den));
        }
    }
    throw Error("unreachable field kind");
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return a + (-b);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same_context(a, b);
    switch (a.kind()) {
        case FieldKind::Rationals:
            return FieldElement(a.ctx_, FieldElement::Value(Rat(a.rational_value() * b.rational_value())));
        case FieldKind::PrimeField:
            return FieldElement(a.ctx_, FieldElement::Value(
                mod_reduce(a.residue_value() * b.residue_value(), a.ctx_->modulus())));
        case FieldKind::GaussianRationals: {
            const auto& x = a.gaussian_value();
            const auto& y = b.gaussian_value();
            return FieldElement(a.ctx_, FieldElement::Value(GaussianValue{
                Rat(x.re * y.re - x.im * y.im), Rat(x.re * y.im + x.im * y.re)}));
        }
        case FieldKind::RationalFunctions: {
            const auto& x = a.rational_function_value();
            const auto& y = b.rational_function_value();
            const FieldCtxPtr& base = a.ctx_->base();
            return FieldElement::rational_function(a.ctx_, detail::pv_mul(base, x.num, y.num),
                                                   detail::pv_mul(base, x.den, y.den));
        }
    }
    throw Error("unreachable field kind");
}

FieldElement FieldElement::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    switch (ctx_->kind()) {
        case FieldKind::Rationals: {
            const Rat& q = std::get<Rat>(value_);
            Int num = denominator(q);
            Int den = numerator(q);
            if (den < 0) {
                num = -num;
                den = -den;
            }
            return FieldElement(ctx_, Value(Rat(num, den)));
        }
        case FieldKind::PrimeField: {
            const Int& p = ctx_->modulus();
            Int inv = boost::multiprecision::powm(std::get<Int>(value_), p - 2, p);
            return FieldElement(ctx_, Value(inv));
        }
        case FieldKind::GaussianRationals: {
            const auto& g = std::get<GaussianValue>(value_);
            Rat n = g.re * g.re + g.im * g.im;
            return FieldElement(ctx_, Value(GaussianValue{Rat(g.re / n), Rat(-g.im / n)}));
        }
        case FieldKind::RationalFunctions: {
            const auto& f = std::get<RationalFunctionValue>(value_);
            return rational_function(ctx_, f.den, f.num);
        }
    }
    throw Error("unreachable field kind");
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
}

FieldElement field_arith(FieldOp op, const FieldElement& a, const std::optional<FieldElement>& b) {
    switch (op) {
        case FieldOp::Neg: return -a;
        case FieldOp::Inv: return a.inverse();
        default: break;
    }
    if (!b)
        throw Error("binary field operation requires a second operand");
    switch (op) {
        case FieldOp::Add: return a + *b;
        case FieldOp::Sub: return a - *b;
        case FieldOp::Mul: return a * *b;
        case FieldOp::Div: return a / *b;
        default: break;
    }
    throw Error("unreachable field op");
}

// ---------------------------------------------------------------------------
// automorphism / derivation

FieldElement apply_automorphism(const FieldElement& a) {
    const FieldCtxPtr& ctx = a.context();
    switch (ctx->automorphism()) {
        case AutomorphismKind::None:
            throw NoAutomorphism();
        case AutomorphismKind::Identity:
            return a;
        case AutomorphismKind::Conjugation: {
            const auto& g = a.gaussian_value();
            return FieldElement::gaussian(ctx, g.re, -g.im);
        }
    }
    throw Error("unreachable automorphism kind");
}

namespace {

FieldElement derive_once(const FieldElement& a) {
    const FieldCtxPtr& ctx = a.context();
    switch (ctx->derivation()) {
        case DerivationKind::None:
            throw NoDerivation();
        case DerivationKind::Zero:
            return FieldElement::zero(ctx);
        case DerivationKind::DDVar: {
            const auto& f = a.rational_function_value();
            const FieldCtxPtr& base = ctx->base();
            // (n/d)' = (n'd - nd') / d^2
            auto nd = detail::pv_mul(base, detail::pv_derivative(base, f.num), f.den);
            auto dn = detail::pv_mul(base, f.num, detail::pv_derivative(base, f.den));
            return FieldElement::rational_function(ctx, detail::pv_sub(base, nd, dn),
                                                   detail::pv_mul(base, f.den, f.den));
        }
    }
    throw Error("unreachable derivation kind");
}

} // namespace

FieldElement apply_derivation(const FieldElement& a, unsigned order) {
    if (!a.context()->has_derivation())
        throw NoDerivation();
    FieldElement r = a;
    for (unsigned k = 0; k < order; ++k)
        r = derive_once(r);
    return r;
}

Int generalized_binomial(const Int& n, unsigned i) {
    Int r = 1;
    for (unsigned j = 1; j <= i; ++j) {
        r *= n - Int(j) + 1;
        r /= Int(j); // exact: j consecutive integers are divisible by j!
    }
    return r;
}

FieldElement renormalized(const FieldElement& a) {
    switch (a.kind()) {
        case FieldKind::Rationals:
            return FieldElement::from_rational(a.context(), a.rational_value());
        case FieldKind::PrimeField:
            return FieldElement::residue(a.context(), a.residue_value());
        case FieldKind::GaussianRationals: {
            const auto& g = a.gaussian_value();
            return FieldElement::gaussian(a.context(), g.re, g.im);
        }
        case FieldKind::RationalFunctions: {
            const auto& f = a.rational_function_value();
            return FieldElement::rational_function(a.context(), f.num, f.den);
        }
    }
    throw Error("unreachable field kind");
}

// ---------------------------------------------------------------------------
// detail::polyvec

namespace detail {

void pv_normalize(PolyVec& a) {
    while (!a.empty() && a.back().is_zero())
        a.pop_back();
}

int pv_degree(const PolyVec& a) {
    return static_cast<int>(a.size()) - 1;
}

bool pv_is_monic(const PolyVec& a) {
    return !a.empty() && a.back().is_one();
}

PolyVec pv_add(const FieldCtxPtr& ctx, const PolyVec& a, const PolyVec& b) {
    PolyVec r;
    size_t n = std::max(a.size(), b.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (i < a.size() && i < b.size())
            r.push_back(a[i] + b[i]);
        else if (i < a.size())
            r.push_back(a[i]);
        else
            r.push_back(b[i]);
    }
    (void)ctx;
    pv_normalize(r);
    return r;
}

PolyVec pv_neg(const PolyVec& a) {
    PolyVec r;
    r.reserve(a.size());
    for (const auto& c : a)
        r.push_back(-c);
    return r;
}

PolyVec pv_sub(const FieldCtxPtr& ctx, const PolyVec& a, const PolyVec& b) {
    return pv_add(ctx, a, pv_neg(b));
}

PolyVec pv_mul(const FieldCtxPtr& ctx, const PolyVec& a, const PolyVec& b) {
    if (a.empty() || b.empty()) return {};
    PolyVec r(a.size() + b.size() - 1, FieldElement::zero(ctx));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    }
    pv_normalize(r);
    return r;
}

PolyVec pv_scale(const PolyVec& a, const FieldElement& s) {
    PolyVec r;
    r.reserve(a.size());
    for (const auto& c : a)
        r.push_back(c * s);
    pv_normalize(r);
    return r;
}

std::pair<PolyVec, PolyVec> pv_divmod(const FieldCtxPtr& ctx, const PolyVec& a, const PolyVec& b) {
    if (b.empty())
        throw DivisionByZero("polynomial division by zero");
    if (a.size() < b.size())
        return {{}, a};
    PolyVec rem = a;
    const int db = pv_degree(b);
    const int dq = pv_degree(a) - db;
    PolyVec quot(dq + 1, FieldElement::zero(ctx));
    FieldElement lc_inv = b.back().inverse();
    for (int k = dq; k >= 0; --k) {
        if (rem[k + db].is_zero()) continue;
        FieldElement q = rem[k + db] * lc_inv;
        quot[k] = q;
        for (int j = 0; j <= db; ++j)
            rem[k + j] = rem[k + j] - q * b[j];
    }
    pv_normalize(quot);
    pv_normalize(rem);
    return {std::move(quot), std::move(rem)};
}

PolyVec pv_gcd_monic(const FieldCtxPtr& ctx, PolyVec a, PolyVec b) {
    pv_normalize(a);
    pv_normalize(b);
    while (!b.empty()) {
        PolyVec r = pv_divmod(ctx, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return pv_make_monic(a);
}

PolyVec pv_derivative(const FieldCtxPtr& ctx, const PolyVec& a) {
    PolyVec r;
    if (a.size() <= 1) return r;
    r.reserve(a.size() - 1);
    for (size_t j = 1; j < a.size(); ++j)
        r.push_back(FieldElement::from_integer(ctx, Int(j)) * a[j]);
    pv_normalize(r);
    return r;
}

PolyVec pv_make_monic(const PolyVec& a) {
    if (a.empty() || a.back().is_one())
        return a;
    return pv_scale(a, a.back().inverse());
}

FieldElement pv_eval(const FieldCtxPtr& ctx, const PolyVec& a, const FieldElement& x) {
    FieldElement r = FieldElement::zero(ctx);
    for (size_t k = a.size(); k-- > 0;)
        r = r * x + a[k];
    return r;
}

} // namespace detail

} // namespace hensel
