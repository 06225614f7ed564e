#ifndef POLYGRAPH_PARSE_HPP
#define POLYGRAPH_PARSE_HPP

#include <string_view>

#include "polygraph/bipoly.hpp"

namespace polygraph {

/// Parses a polynomial in x and y.
///
/// Grammar: integers, decimal literals (1.5, 2e-3), the imaginary unit `i`,
/// the variables `x` and `y`, `+ - * / ^` and parentheses. Juxtaposition
/// multiplies (`2x`, `(y-x)(y+x)`). `/` only divides by a nonzero constant,
/// so `3/2` is a rational literal. Exponents are non-negative integer
/// literals. The result is exact unless a decimal literal appears.
///
/// Throws ParseError (with the byte offset) on malformed input or on any
/// variable other than x and y.
Polynomial parse_polynomial(std::string_view text);

/// Parses a constant expression such as "1/2-3i" or "0.25+1e-3i".
Scalar parse_scalar(std::string_view text);

} // namespace polygraph

#endif
