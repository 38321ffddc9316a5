#ifndef RUEPPEL_EXPR_HPP
#define RUEPPEL_EXPR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "rueppel/integer.hpp"
#include "rueppel/poly2.hpp"
#include "rueppel/series.hpp"

namespace rueppel {

/// A generating-function expression in the small CLI grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := postfix ('^' INTEGER)?
///   postfix := primary ('(' expr ')')*        substitution h(f), f(0) = 0
///   primary := INTEGER | atom | 'invert' '(' expr ',' expr ')' | '(' expr ')'
///   atom    := 'x' | 'c' | 'r' | 'rbc' | 'motzkin'
///
/// `c` is the Catalan g.f., `r` the Rueppel g.f., `rbc` the two-parameter
/// Rueppel g.f. (poly-bc ring only) and `motzkin` the Motzkin g.f.
/// `invert(A, t)` is A/(1 - t x A). Division by a series of valuation v
/// cancels x^v first, so "(c - 1)/x" is valid.
/// Parse errors are Error(ParseError) with the 1-based column in `where()`.
class GfExpr {
 public:
  struct Node;

  static GfExpr parse(std::string_view text);

  const std::string& text() const noexcept { return text_; }

  /// Coefficients 0..n-1. Working precision is raised as needed, starting at
  /// max(n, min_order).
  template <typename R>
  Series<R> expand(std::size_t n, std::size_t min_order = 0) const;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

extern template Series<Integer> GfExpr::expand<Integer>(std::size_t, std::size_t) const;
extern template Series<Rational> GfExpr::expand<Rational>(std::size_t, std::size_t) const;
extern template Series<Poly2> GfExpr::expand<Poly2>(std::size_t, std::size_t) const;

}  // namespace rueppel

#endif  // RUEPPEL_EXPR_HPP
