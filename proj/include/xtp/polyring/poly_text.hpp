#pragma once

#include <cstddef>
#include <string_view>

#include "xtp/polyring/poly.hpp"

namespace xtp {

// Parses the canonical grammar: sums and differences of products of
// rational literals, identifiers from the context, parentheses and
// nonnegative integer powers. Division is accepted only by a nonzero
// constant. Errors throw ParseError; `line` and `column` locate the first
// character of `text` inside an enclosing document.
Poly parse_poly(const ContextPtr& ctx, std::string_view text, std::size_t line = 1, std::size_t column = 1);

}  // namespace xtp
