#pragma once

#include <string_view>
#include <vector>

#include "reeskit/poly.hpp"

namespace reeskit {

/// Parses the ASCII grammar
///
///   poly  := term (('+'|'-') term)*        (a leading '-' is allowed)
///   term  := coeff? ('*'? var ('^' uint)?)*
///   coeff := int | int '/' uint
///
/// Whitespace is insignificant. Throws ParseError (with byte position) on
/// syntax errors, unknown variables and negative or non-integer exponents.
Poly parse_poly(std::string_view text, const RingPtr& ring);

/// Splits on `sep` (outside nothing fancy: the grammar has no separators of
/// its own) and parses each piece. Empty pieces are rejected.
std::vector<Poly> parse_poly_list(std::string_view text, const RingPtr& ring, char sep = ',');

/// Splits "x,y,z" into identifiers, validating each.
std::vector<std::string> parse_var_list(std::string_view text);

}  // namespace reeskit
