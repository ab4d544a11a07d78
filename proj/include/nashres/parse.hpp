#pragma once

#include <string>
#include <string_view>

#include "nashres/poly.hpp"

namespace nashres {

/// Parses the polynomial grammar
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := base ('^' uint)?
///   base   := rational | ident | '(' expr ')'
///
/// where rational is `p` or `p/q`, ident is one of x, x1..x9, z, z1..z9, t,
/// and the Unicode minus sign is accepted for '-'. Errors are ParseError with
/// 1-based line and column.
MultiPoly parse_poly(std::string_view text);

}  // namespace nashres
