#pragma once

#include <string_view>

#include "holopois/multivec.hpp"
#include "holopois/poly.hpp"

namespace holopois {

// Polynomial grammar:
//   expr     := term (('+' | '-') term)*
//   term     := ['-' | '+'] factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | ident | '(' expr ')'
//   rational := uint ('/' uint)?
// Whitespace is insignificant. Identifiers must be chart variables.
//
// Polyvector grammar extends a term with an optional trailing frame:
//   pvterm := ['-' | '+'] (factor ('*' factor)* [frame] | frame)
//   frame  := dvar ('^' dvar)*
// where dvar is "d" immediately followed by a chart variable name (and is not
// itself a chart variable). "x dy^dz" denotes x d_y ^ d_z. All terms must
// have the same degree.
//
// Errors: ParseError with 1-based column; UnknownIdentifier naming the token.

Poly parse_poly(std::string_view text, const ChartPtr& chart);
Polyvector parse_polyvector(std::string_view text, const ChartPtr& chart);

}  // namespace holopois
