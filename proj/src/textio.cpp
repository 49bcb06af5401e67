#include "hensel/textio.hpp"

#include <cctype>
#include <functional>
#include <memory>
#include <sstream>
#include <vector>

namespace hensel {

namespace {

// ---------------------------------------------------------------------------
// lexer

struct Token {
    enum class Kind { Number, Ident, Symbol, End };
    Kind kind;
    Int number;
    std::string text;
    size_t pos; // 1-based column
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            out.push_back({Token::Kind::Number, Int(s.substr(start, i - start)), "", start + 1});
            // 2i, 3t: adjacency multiplies
            if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                out.push_back({Token::Kind::Symbol, Int(0), "*", i + 1});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Token::Kind::Ident, Int(0), s.substr(start, i - start), start + 1});
            continue;
        }
        if (std::string("+-*/^(),=").find(c) != std::string::npos) {
            out.push_back({Token::Kind::Symbol, Int(0), std::string(1, c), i + 1});
            ++i;
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                         std::to_string(i + 1));
    }
    out.push_back({Token::Kind::End, Int(0), "", s.size() + 1});
    return out;
}

struct TokenStream {
    std::vector<Token> tokens;
    size_t idx = 0;

    const Token& peek() const { return tokens[idx]; }
    const Token& next() { return tokens[idx++]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    bool accept_symbol(const std::string& s) {
        if (peek().kind == Token::Kind::Symbol && peek().text == s) {
            ++idx;
            return true;
        }
        return false;
    }
    void expect_symbol(const std::string& s) {
        if (!accept_symbol(s))
            throw ParseError("expected '" + s + "' at position " + std::to_string(peek().pos) +
                             describe_here());
    }
    std::string expect_ident() {
        if (peek().kind != Token::Kind::Ident)
            throw ParseError("expected a name at position " + std::to_string(peek().pos) +
                             describe_here());
        return next().text;
    }
    Int expect_number() {
        if (peek().kind != Token::Kind::Number)
            throw ParseError("expected a number at position " + std::to_string(peek().pos) +
                             describe_here());
        return next().number;
    }
    void expect_end() {
        if (!at_end())
            throw ParseError("unexpected trailing input at position " +
                             std::to_string(peek().pos) + describe_here());
    }
    std::string describe_here() const {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: return " (found number " + t.number.str() + ")";
            case Token::Kind::Ident: return " (found '" + t.text + "')";
            case Token::Kind::Symbol: return " (found '" + t.text + "')";
            case Token::Kind::End: return " (found end of input)";
        }
        return "";
    }
};

// ---------------------------------------------------------------------------
// expression AST

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { Number, Symbol, Unary, Binary, Power };
    Kind kind;
    Int number;
    std::string symbol;
    char op = 0;
    ExprPtr lhs;
    ExprPtr rhs;
    unsigned exponent = 0;
    size_t pos = 0;
};

ExprPtr parse_expr(TokenStream& ts);

ExprPtr parse_primary(TokenStream& ts) {
    const Token& t = ts.peek();
    if (t.kind == Token::Kind::Number) {
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Number;
        e->number = t.number;
        e->pos = t.pos;
        ts.next();
        return e;
    }
    if (t.kind == Token::Kind::Ident) {
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Symbol;
        e->symbol = t.text;
        e->pos = t.pos;
        ts.next();
        return e;
    }
    if (t.kind == Token::Kind::Symbol && t.text == "(") {
        ts.next();
        ExprPtr inner = parse_expr(ts);
        ts.expect_symbol(")");
        return inner;
    }
    throw ParseError("expected a value at position " + std::to_string(t.pos) +
                     ts.describe_here());
}

ExprPtr parse_power(TokenStream& ts) {
    ExprPtr base = parse_primary(ts);
    if (ts.peek().kind == Token::Kind::Symbol && ts.peek().text == "^") {
        size_t pos = ts.peek().pos;
        ts.next();
        Int e = ts.expect_number();
        if (e < 0 || e > 100000)
            throw ParseError("exponent out of range at position " + std::to_string(pos));
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Power;
        node->lhs = std::move(base);
        node->exponent = static_cast<unsigned>(e);
        node->pos = pos;
        return node;
    }
    return base;
}

ExprPtr parse_unary(TokenStream& ts) {
    if (ts.peek().kind == Token::Kind::Symbol &&
        (ts.peek().text == "-" || ts.peek().text == "+")) {
        const Token t = ts.next();
        ExprPtr child = parse_unary(ts);
        if (t.text == "+")
            return child;
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Unary;
        node->op = '-';
        node->lhs = std::move(child);
        node->pos = t.pos;
        return node;
    }
    return parse_power(ts);
}

ExprPtr parse_term(TokenStream& ts) {
    ExprPtr e = parse_unary(ts);
    while (ts.peek().kind == Token::Kind::Symbol &&
           (ts.peek().text == "*" || ts.peek().text == "/")) {
        const Token t = ts.next();
        ExprPtr rhs = parse_unary(ts);
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Binary;
        node->op = t.text[0];
        node->lhs = std::move(e);
        node->rhs = std::move(rhs);
        node->pos = t.pos;
        e = std::move(node);
    }
    return e;
}

ExprPtr parse_expr(TokenStream& ts) {
    ExprPtr e = parse_term(ts);
    while (ts.peek().kind == Token::Kind::Symbol &&
           (ts.peek().text == "+" || ts.peek().text == "-")) {
        const Token t = ts.next();
        ExprPtr rhs = parse_term(ts);
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::Binary;
        node->op = t.text[0];
        node->lhs = std::move(e);
        node->rhs = std::move(rhs);
        node->pos = t.pos;
        e = std::move(node);
    }
    return e;
}

ExprPtr parse_full_expr(const std::string& text) {
    TokenStream ts{lex(text)};
    ExprPtr e = parse_expr(ts);
    ts.expect_end();
    return e;
}

// ---------------------------------------------------------------------------
// symbol resolution

// Field symbols: i on Q(i), the variable of a rational-function field, and
// symbols of the base field embedded as constants.
std::optional<FieldElement> field_symbol(const FieldCtxPtr& ctx, const std::string& name) {
    switch (ctx->kind()) {
        case FieldKind::GaussianRationals:
            if (name == "i")
                return FieldElement::gaussian(ctx, Rat(0), Rat(1));
            return std::nullopt;
        case FieldKind::RationalFunctions: {
            if (name == ctx->variable())
                return FieldElement::variable(ctx);
            if (auto inner = field_symbol(ctx->base(), name)) {
                return FieldElement::rational_function(ctx, {*inner},
                                                       {FieldElement::one(ctx->base())});
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// evaluators

ResiduePoly eval_residue(const Expr& e, const FieldCtxPtr& ctx) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return ResiduePoly::constant(FieldElement::from_integer(ctx, e.number));
        case Expr::Kind::Symbol: {
            if (e.symbol == "x")
                return ResiduePoly::x(ctx);
            if (auto v = field_symbol(ctx, e.symbol))
                return ResiduePoly::constant(*v);
            throw ParseError("unknown symbol '" + e.symbol + "' at position " +
                             std::to_string(e.pos));
        }
        case Expr::Kind::Unary:
            return -eval_residue(*e.lhs, ctx);
        case Expr::Kind::Power: {
            ResiduePoly base = eval_residue(*e.lhs, ctx);
            return base.pow(e.exponent);
        }
        case Expr::Kind::Binary: {
            ResiduePoly a = eval_residue(*e.lhs, ctx);
            ResiduePoly b = eval_residue(*e.rhs, ctx);
            switch (e.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': {
                    if (b.is_zero())
                        throw DivisionByZero();
                    if (b.degree() != 0)
                        throw ParseError("division by a non-constant at position " +
                                         std::to_string(e.pos));
                    return a * b.coefficient(0).inverse();
                }
            }
            break;
        }
    }
    throw ParseError("malformed expression");
}

LocalPoly eval_local(const Expr& e, const RingCtxPtr& ctx) {
    const FieldCtxPtr& field = ctx->field();
    switch (e.kind) {
        case Expr::Kind::Number:
            return LocalPoly::constant(
                LocalElement::canonical_lift(ctx, FieldElement::from_integer(field, e.number)));
        case Expr::Kind::Symbol: {
            if (e.symbol == "x")
                return LocalPoly::x(ctx);
            if (e.symbol == "g" ||
                (ctx->kind() == RingKind::CommutativeSeries && e.symbol == ctx->generator_name()))
                return LocalPoly::constant(LocalElement::generator(ctx));
            if (auto v = field_symbol(field, e.symbol))
                return LocalPoly::constant(LocalElement::canonical_lift(ctx, *v));
            throw ParseError("unknown symbol '" + e.symbol + "' at position " +
                             std::to_string(e.pos));
        }
        case Expr::Kind::Unary:
            return -eval_local(*e.lhs, ctx);
        case Expr::Kind::Power: {
            LocalPoly base = eval_local(*e.lhs, ctx);
            LocalPoly r = LocalPoly::one(ctx);
            for (unsigned k = 0; k < e.exponent; ++k)
                r = r * base;
            return r;
        }
        case Expr::Kind::Binary: {
            LocalPoly a = eval_local(*e.lhs, ctx);
            LocalPoly b = eval_local(*e.rhs, ctx);
            switch (e.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': {
                    if (b.is_zero())
                        throw DivisionByZero();
                    if (b.degree() != 0)
                        throw ParseError("division by a non-constant at position " +
                                         std::to_string(e.pos));
                    // right multiplication by the inverse unit
                    return a * LocalPoly::constant(b.coefficient(0).inverse());
                }
            }
            break;
        }
    }
    throw ParseError("malformed expression");
}

// ---------------------------------------------------------------------------
// spec parsing

FieldCtxPtr parse_field_spec_tokens(TokenStream& ts) {
    const size_t pos = ts.peek().pos;
    std::string name = ts.expect_ident();
    if (name == "Q")
        return FieldContext::rationals();
    if (name == "Qi")
        return FieldContext::gaussian_rationals();
    if (name == "GF") {
        ts.expect_symbol("(");
        Int p = ts.expect_number();
        ts.expect_symbol(")");
        return FieldContext::prime_field(p);
    }
    if (name == "RatFunc") {
        ts.expect_symbol("(");
        FieldCtxPtr base = parse_field_spec_tokens(ts);
        ts.expect_symbol(",");
        std::string var = ts.expect_ident();
        ts.expect_symbol(")");
        return FieldContext::rational_functions(std::move(base), std::move(var));
    }
    throw ParseError("unknown field '" + name + "' at position " + std::to_string(pos));
}

// optional ", N=<int>" tail of a ring spec
std::optional<int> parse_precision_tail(TokenStream& ts) {
    if (!ts.accept_symbol(","))
        return std::nullopt;
    const size_t pos = ts.peek().pos;
    std::string n = ts.expect_ident();
    if (n != "N")
        throw ParseError("expected N=<precision> at position " + std::to_string(pos));
    ts.expect_symbol("=");
    Int v = ts.expect_number();
    if (v < 1 || v > 4096)
        throw ParseError("precision out of range at position " + std::to_string(pos));
    return static_cast<int>(v);
}

} // namespace

FieldCtxPtr parse_field_spec(const std::string& spec) {
    TokenStream ts{lex(spec)};
    FieldCtxPtr ctx = parse_field_spec_tokens(ts);
    ts.expect_end();
    return ctx;
}

RingCtxPtr parse_ring_spec(const std::string& spec, std::optional<int> precision_override) {
    TokenStream ts{lex(spec)};
    const size_t pos = ts.peek().pos;
    std::string kind = ts.expect_ident();
    RingCtxPtr ring;
    if (kind == "series") {
        ts.expect_symbol("(");
        FieldCtxPtr field = parse_field_spec_tokens(ts);
        ts.expect_symbol(",");
        const size_t name_pos = ts.peek().pos;
        std::string name = ts.expect_ident();
        std::optional<int> n = parse_precision_tail(ts);
        ts.expect_symbol(")");
        ts.expect_end();
        if (name == "x" || name == "i" || field_symbol(field, name))
            throw ParseError("generator name '" + name + "' collides with a field symbol at position " +
                             std::to_string(name_pos));
        ring = LocalRingContext::series(field, name, precision_override.value_or(n.value_or(8)));
    } else if (kind == "volterra") {
        ts.expect_symbol("(");
        FieldCtxPtr field = parse_field_spec_tokens(ts);
        std::optional<int> n = parse_precision_tail(ts);
        ts.expect_symbol(")");
        ts.expect_end();
        field = field->with_derivation(field->kind() == FieldKind::RationalFunctions
                                           ? DerivationKind::DDVar
                                           : DerivationKind::Zero);
        ring = LocalRingContext::volterra(field, precision_override.value_or(n.value_or(8)));
    } else if (kind == "twisted") {
        ts.expect_symbol("(");
        FieldCtxPtr field = parse_field_spec_tokens(ts);
        ts.expect_symbol(",");
        const size_t sigma_pos = ts.peek().pos;
        std::string sigma = ts.expect_ident();
        std::optional<int> n = parse_precision_tail(ts);
        ts.expect_symbol(")");
        ts.expect_end();
        if (sigma == "conj")
            field = field->with_automorphism(AutomorphismKind::Conjugation);
        else if (sigma == "id")
            field = field->with_automorphism(AutomorphismKind::Identity);
        else
            throw ParseError("unknown automorphism '" + sigma + "' at position " +
                             std::to_string(sigma_pos) + " (expected conj or id)");
        ring = LocalRingContext::twisted(field, precision_override.value_or(n.value_or(8)));
    } else {
        throw ParseError("unknown ring kind '" + kind + "' at position " + std::to_string(pos));
    }
    return ring;
}

FieldElement parse_field_literal(const FieldCtxPtr& ctx, const std::string& text) {
    ExprPtr e = parse_full_expr(text);
    ResiduePoly p = eval_residue(*e, ctx);
    if (p.degree() > 0)
        throw ParseError("expected a field constant, got a polynomial in x: " + text);
    return p.coefficient(0);
}

ResiduePoly parse_residue_poly(const FieldCtxPtr& ctx, const std::string& text) {
    ExprPtr e = parse_full_expr(text);
    return eval_residue(*e, ctx);
}

LocalPoly parse_local_poly(const RingCtxPtr& ctx, const std::string& text) {
    ExprPtr e = parse_full_expr(text);
    return eval_local(*e, ctx);
}

LocalElement parse_local_element(const RingCtxPtr& ctx, const std::string& text) {
    LocalPoly p = parse_local_poly(ctx, text);
    if (p.degree() > 0)
        throw ParseError("expected a series, got a polynomial in x: " + text);
    return p.degree() < 0 ? LocalElement::zero(ctx) : p.coefficient(0);
}

// ---------------------------------------------------------------------------
// printing

namespace {

bool has_toplevel_plusminus(const std::string& s) {
    int depth = 0;
    for (size_t k = 0; k < s.size(); ++k) {
        const char c = s[k];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && k > 0 && (c == '+' || c == '-')) return true;
    }
    return false;
}

struct TermPiece {
    std::string lit; // coefficient literal, nonzero
    int exp;
};

// Assembles "c3*x^3 + x - 1/2" style strings from coefficient literals.
std::string join_terms(const std::vector<TermPiece>& pieces,
                       const std::function<std::string(int)>& pow_str) {
    if (pieces.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& piece : pieces) {
        bool negative = false;
        std::string body = piece.lit;
        if (!body.empty() && body[0] == '-' && !has_toplevel_plusminus(body.substr(1))) {
            negative = true;
            body = body.substr(1);
        }
        const bool wrap = has_toplevel_plusminus(body) || (!body.empty() && body[0] == '-');
        std::string text;
        if (piece.exp == 0) {
            // inside a sum only a leading minus needs shielding
            text = (!body.empty() && body[0] == '-') ? "(" + body + ")" : body;
        } else if (body == "1" && !wrap) {
            text = pow_str(piece.exp);
        } else {
            text = (wrap ? "(" + body + ")" : body) + "*" + pow_str(piece.exp);
        }
        if (first) {
            out = negative ? "-" + text : text;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += text;
        }
    }
    return out;
}

std::string rat_string(const Rat& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// the imaginary part rendered as i, 2i, 2/3i
std::string imaginary_string(const Rat& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return rat_string(im) + "i";
}

std::string field_poly_string(const std::vector<FieldElement>& coeffs, const std::string& var);

std::string field_literal(const FieldElement& a) {
    switch (a.kind()) {
        case FieldKind::Rationals:
            return rat_string(a.rational_value());
        case FieldKind::PrimeField:
            return a.residue_value().str();
        case FieldKind::GaussianRationals: {
            const auto& g = a.gaussian_value();
            if (g.im.is_zero())
                return rat_string(g.re);
            if (g.re.is_zero())
                return imaginary_string(g.im);
            std::string im = imaginary_string(abs(g.im));
            return rat_string(g.re) + (g.im > 0 ? "+" : "-") + im;
        }
        case FieldKind::RationalFunctions: {
            const auto& f = a.rational_function_value();
            const std::string& var = a.context()->variable();
            std::string num = field_poly_string(f.num, var);
            if (f.den.size() == 1 && f.den[0].is_one())
                return num;
            std::string den = field_poly_string(f.den, var);
            auto atom = [](const std::string& s) {
                for (char c : s)
                    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '^')
                        return false;
                return true;
            };
            std::string lhs = atom(num) ? num : "(" + num + ")";
            std::string rhs = atom(den) ? den : "(" + den + ")";
            return lhs + "/" + rhs;
        }
    }
    throw Error("unreachable field kind");
}

std::string field_poly_string(const std::vector<FieldElement>& coeffs, const std::string& var) {
    std::vector<TermPiece> pieces;
    for (size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k].is_zero()) continue;
        pieces.push_back({field_literal(coeffs[k]), static_cast<int>(k)});
    }
    return join_terms(pieces, [&](int e) {
        return e == 1 ? var : var + "^" + std::to_string(e);
    });
}

std::string series_string(const LocalElement& a, const std::function<std::string(int)>& pow_str) {
    std::vector<TermPiece> pieces;
    for (size_t j = 0; j < a.coefficients().size(); ++j) {
        if (a.coefficients()[j].is_zero()) continue;
        pieces.push_back({field_literal(a.coefficients()[j]), static_cast<int>(j)});
    }
    return join_terms(pieces, pow_str);
}

std::string canonical_pow(int e) {
    return e == 1 ? std::string("g") : "g^" + std::to_string(e);
}

std::function<std::string(int)> display_pow(const RingCtxPtr& ctx) {
    switch (ctx->kind()) {
        case RingKind::Volterra:
            return [](int e) { return "∂^-" + std::to_string(e); };
        case RingKind::Twisted:
            return [](int e) { return e == 1 ? std::string("τ") : "τ^" + std::to_string(e); };
        case RingKind::CommutativeSeries: {
            std::string name = ctx->generator_name();
            return [name](int e) { return e == 1 ? name : name + "^" + std::to_string(e); };
        }
    }
    throw Error("unreachable ring kind");
}

std::string local_poly_string(const LocalPoly& f, const std::function<std::string(int)>& pow_str) {
    std::vector<TermPiece> pieces;
    for (size_t k = f.coefficients().size(); k-- > 0;) {
        const LocalElement& c = f.coefficients()[k];
        if (c.is_zero()) continue;
        pieces.push_back({series_string(c, pow_str), static_cast<int>(k)});
    }
    return join_terms(pieces, [](int e) {
        return e == 1 ? std::string("x") : "x^" + std::to_string(e);
    });
}

} // namespace

std::string to_string(const FieldElement& a) { return field_literal(a); }

std::string to_string(const ResiduePoly& f) {
    std::vector<TermPiece> pieces;
    for (size_t k = f.coefficients().size(); k-- > 0;) {
        if (f.coefficients()[k].is_zero()) continue;
        pieces.push_back({field_literal(f.coefficients()[k]), static_cast<int>(k)});
    }
    return join_terms(pieces, [](int e) {
        return e == 1 ? std::string("x") : "x^" + std::to_string(e);
    });
}

std::string to_string(const LocalElement& a) { return series_string(a, canonical_pow); }

std::string to_string(const LocalPoly& f) { return local_poly_string(f, canonical_pow); }

std::string pretty_string(const LocalElement& a) {
    return series_string(a, display_pow(a.context()));
}

std::string pretty_string(const LocalPoly& f) {
    return local_poly_string(f, display_pow(f.context()));
}

std::string field_spec_string(const FieldCtxPtr& ctx) {
    switch (ctx->kind()) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::PrimeField: return "GF(" + ctx->modulus().str() + ")";
        case FieldKind::GaussianRationals: return "Qi";
        case FieldKind::RationalFunctions:
            return "RatFunc(" + field_spec_string(ctx->base()) + "," + ctx->variable() + ")";
    }
    throw Error("unreachable field kind");
}

std::string ring_spec_string(const RingCtxPtr& ctx) {
    const std::string n = ",N=" + std::to_string(ctx->precision()) + ")";
    switch (ctx->kind()) {
        case RingKind::CommutativeSeries:
            return "series(" + field_spec_string(ctx->field()) + "," + ctx->generator_name() + n;
        case RingKind::Volterra:
            return "volterra(" + field_spec_string(ctx->field()) + n;
        case RingKind::Twisted: {
            const char* sigma =
                ctx->field()->automorphism() == AutomorphismKind::Conjugation ? "conj" : "id";
            return "twisted(" + field_spec_string(ctx->field()) + "," + sigma + n;
        }
    }
    throw Error("unreachable ring kind");
}

} // namespace hensel
