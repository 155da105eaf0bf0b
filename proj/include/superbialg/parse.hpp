#pragma once

#include <string>
#include <variant>

#include "superbialg/element.hpp"

namespace superbialg {

/// Canonical text forms.
///
/// Scalars print as `a` or `a/b` (b > 1), half-integer indices as `n` or
/// `n/2` (n odd).  A term is `<rational> <KIND>[<index>]` with tensor
/// factors joined by ` (x) `; terms are joined by ` + ` / ` - ` with the
/// magnitude of the coefficient, and a leading `-` (no space) marks a
/// negative first term.  The zero combination prints as `0`.
std::string to_text(const Rational& q);
std::string to_text(const HalfInt& h);
std::string to_text(const Generator& g);
std::string to_text(const Element& e);
std::string to_text(const Tensor2& t);
std::string to_text(const Tensor3& t);

using Expression = std::variant<Element, Tensor2, Tensor3>;

/// Parse the canonical grammar.  All terms of one expression must have the
/// same tensor rank.  The literal `0` parses as the zero Element (which
/// coerces to any rank).  Throws ParseError with a 1-based position, or
/// IndexDomainError naming the offending token.
Expression parse_expression(const std::string& text);

/// Rank-coercing conveniences; `0` becomes the zero value of the requested
/// rank, any other mismatch is a ParseError.
Element parse_element(const std::string& text);
Tensor2 parse_tensor2(const std::string& text);
Tensor3 parse_tensor3(const std::string& text);

/// Parse `n`, `-n`, `n/2` as an exact half-integer (CLI argument format).
HalfInt parse_halfint(const std::string& text);

std::string to_text(const Expression& e);

}  // namespace superbialg
