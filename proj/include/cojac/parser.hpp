#ifndef COJAC_PARSER_HPP
#define COJAC_PARSER_HPP

#include <string>

#include "cojac/chart.hpp"
#include "cojac/expr.hpp"

namespace cojac {

/// Parses the expression DSL:
///   expr     := term (('+' | '-') term)*
///   term     := factor (('*' | '/') factor)*
///   factor   := atom ['^' integer] | '-' factor
///   atom     := rational | ident | ident '(' expr ')' | '(' expr ')'
///   rational := integer ['/' positive-integer]
/// Whitespace is insignificant; implicit multiplication is not allowed.
/// Identifiers must be chart coordinates or one of sin, cos, exp.
/// Errors carry the byte offset of the offending token.
Expr parse_expr(const std::string& text, const Chart& chart);

}  // namespace cojac

#endif
