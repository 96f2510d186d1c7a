#pragma once

#include <string>
#include <string_view>

#include "resloc/poly.hpp"

namespace resloc {

/// Parse the polynomial text grammar:
///
///   poly   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := var ('^' nat)? | coeff
///   coeff  := rational 'i'? | '(' rational ')' 'i'? | 'i'
///   rational := int ('/' nat)?
///   var    := 'z' nat          (1-indexed)
///
/// Whitespace insensitive; multiplication is always explicit.
MultiPoly parse_poly(std::string_view text, std::size_t nvars);

/// Canonical text form: terms in descending graded-reverse-lex order, a
/// monomial with complex coefficient printed as a real-part term followed by
/// an imaginary-part term.  parse_poly(print_poly(p)) == p.
std::string print_poly(const MultiPoly& p);

}  // namespace resloc
