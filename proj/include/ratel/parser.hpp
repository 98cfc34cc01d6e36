#ifndef RATEL_PARSER_HPP
#define RATEL_PARSER_HPP

#include <memory>
#include <string>
#include <string_view>

#include "ratel/diffop.hpp"

namespace ratel {
namespace parser {

// Expression grammar for rational functions in x and y:
//
//   expr     := term (('+' | '-') term)*          left associative
//   term     := factor (('*' | '/') factor)*      left associative
//   factor   := '-' factor | power
//   power    := atom ('^' INT)*                   right associative
//   atom     := INT | 'x' | 'y' | '(' expr ')'
//   INT      := [0-9]+                            unbounded
//
// Whitespace is insignificant.  There is no implicit multiplication
// ("x*y", never "xy") and exponents must be nonnegative integer literals.

struct Expr {
  enum class Kind { Int, Var, Add, Sub, Neg, Mul, Div, Pow };
  Kind kind;
  Int value;    // Kind::Int
  char var = 0; // Kind::Var: 'x' or 'y'
  int exp = 0;  // Kind::Pow
  std::unique_ptr<Expr> a, b;  // operands (b empty for Neg and Pow)
};
using ExprPtr = std::unique_ptr<Expr>;

// Throws ParseError (with byte offset) on anything outside the grammar.
ExprPtr parse(std::string_view text);

// Evaluate in Q(x,y) with exact arithmetic; the result is canonical.
// Throws InputError on division by the zero rational function and on
// intermediate degrees large enough to be hostile input.
RFunc to_rfunc(const Expr& ast);
RFunc parse_rfunc(std::string_view text);  // to_rfunc(parse(text))

bool expr_equal(const Expr& a, const Expr& b);

// Fully parenthesized rendering; parse(to_text(e)) reproduces e node for node.
std::string to_text(const Expr& e);

// Expanded polynomial, terms ordered by (y-degree, x-degree) descending,
// e.g. "-x*y + 1".  Rational coefficients print as "3/2*x".
std::string print_poly(const BPoly& p);

// "num/(den)" with the numerator parenthesized when it has several terms
// and the whole denominator dropped when it is 1.  For display only, the
// fraction is rescaled so the numerator's leading coefficient is positive.
// parse_rfunc(print_canonical(f)) == f.
std::string print_canonical(const RFunc& f);

// "(poly)*Dx^i + ... + (poly)", highest order first.
std::string print_canonical(const DiffOp& L);

}  // namespace parser
}  // namespace ratel

#endif
