#pragma once

#include "sdyn/scalar_expr.hpp"

#include <string>
#include <vector>

namespace sdyn {

/// Minimal s-expression tree: a node is either an atom (bare token or
/// double-quoted string) or a parenthesized list.
struct SExpr {
  bool is_list = false;
  bool quoted = false;
  std::string atom;
  std::vector<SExpr> items;

  static SExpr parse(const std::string& text);
};

/// Coefficient grammar:
///   expr := RATIONAL | "RATIONAL"
///         | (+ expr...) | (* expr...) | (- expr) | (- expr expr...)
///         | (ratfun "num") | (ratfun "num" "den")
///         | (coth a0 a1 ... c)
/// where num/den are polynomial strings in x0, x1, ... and the coth list
/// gives the linear coefficients followed by the constant term.
ScalarExpr scalar_from_sexpr(const SExpr& node);

Rational parse_rational(const std::string& text);

}  // namespace sdyn
