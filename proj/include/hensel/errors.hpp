#ifndef HENSEL_ERRORS_HPP
#define HENSEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hensel {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct ContextMismatch : Error {
    explicit ContextMismatch(const std::string& msg = "operands belong to different contexts") : Error(msg) {}
};

struct NoAutomorphism : Error {
    explicit NoAutomorphism(const std::string& msg = "field context carries no automorphism") : Error(msg) {}
};

struct NoDerivation : Error {
    explicit NoDerivation(const std::string& msg = "field context carries no derivation") : Error(msg) {}
};

struct NotCoprime : Error {
    explicit NotCoprime(const std::string& msg = "polynomials are not coprime") : Error(msg) {}
};

struct DegreeTooLarge : Error {
    explicit DegreeTooLarge(const std::string& msg = "target degree exceeds the solvable range") : Error(msg) {}
};

struct UnsupportedField : Error {
    explicit UnsupportedField(const std::string& msg = "operation not supported over this field") : Error(msg) {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& msg = "element is not a unit") : Error(msg) {}
};

struct NotInIdealPower : Error {
    explicit NotInIdealPower(const std::string& msg = "element does not lie in the requested ideal power") : Error(msg) {}
};

struct ResidueFactorizationMismatch : Error {
    explicit ResidueFactorizationMismatch(const std::string& msg = "residue factorization does not match the polynomial") : Error(msg) {}
};

struct NotASimpleRoot : Error {
    explicit NotASimpleRoot(const std::string& msg = "value is not a simple root of the residue polynomial") : Error(msg) {}
};

struct BlockProductMismatch : Error {
    explicit BlockProductMismatch(const std::string& msg = "product of blocks does not match the residue polynomial") : Error(msg) {}
};

struct SearchSpaceTooLarge : Error {
    explicit SearchSpaceTooLarge(const std::string& msg = "exhaustive search space exceeds the configured bound") : Error(msg) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace hensel

#endif
