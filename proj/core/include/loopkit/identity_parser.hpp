#pragma once

#include <string_view>

#include "loopkit/term.hpp"

namespace loopkit {

// Grammar
//   identity := expr '=' expr
//   expr     := postfix (('*' | '\' | '/') postfix)*     left-associative
//   postfix  := primary ('^rho' | '^lambda')*
//   primary  := letter | '1' | '(' expr ')'
// Variables are single ASCII letters. Whitespace is ignored.

/// Throws ParseError (SyntaxError, UnbalancedParentheses, UnknownToken).
Identity parse_identity(std::string_view text);

Term parse_term(std::string_view text);

}  // namespace loopkit
