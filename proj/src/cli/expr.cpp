#include "rueppel/expr.hpp"

#include <algorithm>
#include <cctype>
#include <type_traits>
#include <vector>

#include "rueppel/error.hpp"

namespace rueppel {

struct GfExpr::Node {
  enum class Kind { number, atom, neg, add, sub, mul, div, pow, subst, invert };
  Kind kind;
  std::string text;  // number literal or atom name
  unsigned exponent = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = GfExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind k, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at column " + std::to_string(pos_ + 1), long(pos_ + 1));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void require(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  NodePtr expr() {
    NodePtr e = term();
    for (;;) {
      if (accept('+')) {
        e = make(Node::Kind::add, e, term());
      } else if (accept('-')) {
        e = make(Node::Kind::sub, e, term());
      } else {
        return e;
      }
    }
  }

  NodePtr term() {
    NodePtr e = unary();
    for (;;) {
      if (accept('*')) {
        e = make(Node::Kind::mul, e, unary());
      } else if (accept('/')) {
        e = make(Node::Kind::div, e, unary());
      } else {
        return e;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Kind::neg, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = postfix();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::pow;
    n->exponent = unsigned(std::stoul(std::string(s_.substr(start, pos_ - start))));
    n->lhs = std::move(base);
    return n;
  }

  NodePtr postfix() {
    NodePtr e = primary();
    while (accept('(')) {
      NodePtr arg = expr();
      require(')');
      e = make(Node::Kind::subst, e, arg);
    }
    return e;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      NodePtr e = expr();
      require(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::number;
      n->text = std::string(s_.substr(start, pos_ - start));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (name == "invert") {
        require('(');
        NodePtr a = expr();
        require(',');
        NodePtr t = expr();
        require(')');
        return make(Node::Kind::invert, a, t);
      }
      if (name != "x" && name != "c" && name != "r" && name != "rbc" && name != "motzkin") {
        pos_ = start;
        fail("unknown name '" + name + "'");
      }
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::atom;
      n->text = name;
      return n;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

/// k when the node is x or x^k, else 0.
unsigned monomial_power(const Node& n) {
  if (n.kind == Node::Kind::atom && n.text == "x") return 1;
  if (n.kind == Node::Kind::pow && n.exponent > 0 && n.lhs->kind == Node::Kind::atom && n.lhs->text == "x") {
    return n.exponent;
  }
  return 0;
}

template <typename R>
Series<R> atom(const std::string& name, std::size_t order) {
  if (name == "x") return Series<R>::x(order);
  if (name == "c") return catalan_series<R>(order);
  if (name == "r") return rueppel_series<R>(order);
  if (name == "motzkin") return motzkin_series<R>(order);
  if constexpr (std::is_same_v<R, Poly2>) {
    return rueppel_bc_series(order);
  } else {
    throw Error(Errc::RingMismatch, "rbc needs the poly-bc ring");
  }
}

template <typename R>
Series<R> quotient(const Series<R>& a, const Series<R>& b) {
  std::size_t v = 0;
  while (v < b.order() && is_zero(b[v])) ++v;
  if (v == b.order()) throw Error(Errc::DivisionByZero, "divisor vanishes to truncation order");
  if (v == 0) return divide(a, b);
  if (a.order() < v) throw Error(Errc::InsufficientTruncation, "dividend too short", long(a.order()));
  for (std::size_t i = 0; i < v; ++i) {
    if (!is_zero(a[i])) throw Error(Errc::BadOrder, "quotient has a pole at x = 0");
  }
  return divide(shift_left(a, v), shift_left(b, v));
}

template <typename R>
Series<R> eval(const Node& n, std::size_t order) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::number: return Series<R>::constant(R(Integer(n.text)), order);
    case K::atom: return atom<R>(n.text, order);
    case K::neg: return -eval<R>(*n.lhs, order);
    case K::add: return eval<R>(*n.lhs, order) + eval<R>(*n.rhs, order);
    case K::sub: return eval<R>(*n.lhs, order) - eval<R>(*n.rhs, order);
    case K::mul: return eval<R>(*n.lhs, order) * eval<R>(*n.rhs, order);
    case K::div: return quotient(eval<R>(*n.lhs, order), eval<R>(*n.rhs, order));
    case K::pow: return power(eval<R>(*n.lhs, order), n.exponent);
    case K::subst: {
      if (const unsigned k = monomial_power(*n.rhs); k > 0) {
        const Series<R> h = eval<R>(*n.lhs, (order + k - 1) / k);
        return compose_xk(h, k).truncated(order);
      }
      return compose(eval<R>(*n.lhs, order), eval<R>(*n.rhs, order));
    }
    case K::invert: {
      const Series<R> a = eval<R>(*n.lhs, order);
      const Series<R> t = eval<R>(*n.rhs, order);
      const std::size_t o = std::min(a.order(), t.order());
      return a * recip(Series<R>::one(o) - t * (Series<R>::x(o) * a));
    }
  }
  throw Error(Errc::ParseError, "corrupt expression tree");
}

}  // namespace

GfExpr GfExpr::parse(std::string_view text) {
  GfExpr e;
  e.text_ = std::string(text);
  e.root_ = Parser(text).parse();
  return e;
}

template <typename R>
Series<R> GfExpr::expand(std::size_t n, std::size_t min_order) const {
  std::size_t order = std::max(n, min_order);
  const std::size_t cap = 4 * order + 256;
  for (;;) {
    const Series<R> s = eval<R>(*root_, order);
    if (s.order() >= n) return s.truncated(n);
    if (order >= cap) break;
    order = std::min(cap, order + (n - s.order()) + 8);
  }
  throw Error(Errc::InsufficientTruncation, "could not reach " + std::to_string(n) + " trusted coefficients",
              long(order));
}

template Series<Integer> GfExpr::expand<Integer>(std::size_t, std::size_t) const;
template Series<Rational> GfExpr::expand<Rational>(std::size_t, std::size_t) const;
template Series<Poly2> GfExpr::expand<Poly2>(std::size_t, std::size_t) const;

}  // namespace rueppel
