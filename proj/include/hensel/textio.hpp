#ifndef HENSEL_TEXTIO_HPP
#define HENSEL_TEXTIO_HPP

#include <optional>
#include <string>

#include "hensel/local_poly.hpp"

// Text grammar shared by the CLI and the structured documents.
//
//   field specs:  Q | GF(p) | Qi | RatFunc(<field>, <var>)
//   ring specs:   series(<field>, <name>, N=8) | volterra(<field>, N=6)
//                 | twisted(<field>, conj|id, N=6)
//   expressions:  integers, field symbols (i, the rational-function
//                 variable), the ring generator g, the indeterminate x,
//                 + - * / ^ and parentheses; an integer immediately
//                 followed by a symbol multiplies it (2i, 3t).
//
// Canonical printing always writes the generator as g, so every printed
// value re-parses to an equal one. Pretty printing substitutes the ring's
// display symbol.

namespace hensel {

FieldCtxPtr parse_field_spec(const std::string& spec);

/// Parses a ring spec; a missing N defaults to 8, and precision_override
/// replaces whatever the spec says.
RingCtxPtr parse_ring_spec(const std::string& spec,
                           std::optional<int> precision_override = std::nullopt);

/// A constant expression over the field (2/3, 1+2i, (t^2+1)/(t+3)).
FieldElement parse_field_literal(const FieldCtxPtr& ctx, const std::string& text);

ResiduePoly parse_residue_poly(const FieldCtxPtr& ctx, const std::string& text);

LocalPoly parse_local_poly(const RingCtxPtr& ctx, const std::string& text);

/// A series literal (1 + 2*g + 3*g^2): a degree-zero polynomial expression.
LocalElement parse_local_element(const RingCtxPtr& ctx, const std::string& text);

std::string to_string(const FieldElement& a);
std::string to_string(const ResiduePoly& f);
std::string to_string(const LocalElement& a); // canonical, generator g
std::string to_string(const LocalPoly& f);    // canonical, generator g

/// Human-facing form using the ring's display symbol (t, the inverse
/// operator, tau).
std::string pretty_string(const LocalElement& a);
std::string pretty_string(const LocalPoly& f);

std::string field_spec_string(const FieldCtxPtr& ctx);
std::string ring_spec_string(const RingCtxPtr& ctx);

} // namespace hensel

#endif
