#pragma once

#include <string_view>

#include "fano/chow.hpp"

namespace fano {

/// Parse a ring expression into a reduced ChowClass.
///
/// Grammar:
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := int | 'xi' | 'f' | 'h' | 'E' | '(' expr ')'
///
/// 'E' is the exceptional-divisor class and is rejected on the product
/// model. Syntax errors throw ParseError with position and expectation.
ChowClass parse_expr(std::string_view text, Model m);

}  // namespace fano
