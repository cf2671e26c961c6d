#include "hermring/expr.hpp"

#include <cctype>

#include "hermring/errors.hpp"

namespace hermring::expr {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (eat('+')) {
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Add;
        n->lhs = lhs;
        n->rhs = parse_term();
        lhs = n;
      } else if (eat('-')) {
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Sub;
        n->lhs = lhs;
        n->rhs = parse_term();
        lhs = n;
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (eat('*')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Mul;
      n->lhs = lhs;
      n->rhs = parse_factor();
      lhs = n;
    }
    return lhs;
  }

  NodePtr parse_factor() {
    if (eat('-')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Neg;
      n->lhs = parse_factor();
      return n;
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (eat('^')) {
      skip_ws();
      bool neg = eat('-');
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == start) throw ParseError("expected integer exponent", pos);
      long e = std::stol(text.substr(start, pos - start));
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Pow;
      n->lhs = base;
      n->exponent = neg ? -e : e;
      return n;
    }
    return base;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      NodePtr inner = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", pos);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
        if (pos == dstart) throw ParseError("expected denominator digits", pos);
      }
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Literal;
      n->literal = parse_rational(text.substr(start, pos - start));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      if (name == "restrict") {
        if (!eat('(')) throw ParseError("expected '(' after restrict", pos);
        NodePtr inner = parse_expr();
        if (!eat(')')) throw ParseError("expected ')'", pos);
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Restrict;
        n->lhs = inner;
        return n;
      }
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Name;
      n->name = std::move(name);
      return n;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

}  // namespace

NodePtr parse(const std::string& text) {
  Parser p{text};
  NodePtr root = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing input", p.pos);
  return root;
}

std::string to_string(const Node& node) {
  switch (node.kind) {
    case Node::Kind::Literal: return hermring::to_string(node.literal);
    case Node::Kind::Name: return node.name;
    case Node::Kind::Add:
      return "(" + to_string(*node.lhs) + " + " + to_string(*node.rhs) + ")";
    case Node::Kind::Sub:
      return "(" + to_string(*node.lhs) + " - " + to_string(*node.rhs) + ")";
    case Node::Kind::Mul:
      return "(" + to_string(*node.lhs) + " * " + to_string(*node.rhs) + ")";
    case Node::Kind::Pow:
      return to_string(*node.lhs) + "^" + std::to_string(node.exponent);
    case Node::Kind::Neg: return "-" + to_string(*node.lhs);
    case Node::Kind::Restrict: return "restrict(" + to_string(*node.lhs) + ")";
  }
  return "?";
}

namespace {

template <typename Series>
void require_same_weight(const Series& a, const Series& b, const char* op) {
  if (a.weight() && b.weight() && *a.weight() != *b.weight())
    throw WeightMismatch(std::string("cannot ") + op + " weight " +
                         std::to_string(*a.weight()) + " and weight " +
                         std::to_string(*b.weight()) + " forms");
}

Value add_or_sub(Value a, Value b, bool subtract, long scalar_trunc);

// lift a scalar next to a series of the given kind
template <typename Series>
Series constant_series(const Rational& c, long trunc) {
  if constexpr (std::is_same_v<Series, EllipticSeries>) {
    typename Series::Coeffs m;
    if (c != 0) m[0] = c;
    return Series(trunc, std::move(m));
  } else if constexpr (std::is_same_v<Series, SiegelSeries>) {
    typename Series::Coeffs m;
    if (c != 0) m[{0, 0, 0}] = c;
    return Series(static_cast<int>(trunc), std::move(m));
  } else {
    typename Series::Coeffs m;
    if (c != 0) m[{0, 0, 0, 0}] = c;
    return Series(static_cast<int>(trunc), std::move(m));
  }
}

Value add_or_sub(Value a, Value b, bool subtract, long) {
  // scalar op scalar
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
    return subtract ? std::get<Rational>(a) - std::get<Rational>(b)
                    : std::get<Rational>(a) + std::get<Rational>(b);
  // lift scalars to the series side's kind and truncation
  auto lift = [&](const Value& scalar, const Value& series) -> Value {
    const Rational& c = std::get<Rational>(scalar);
    if (std::holds_alternative<HermitianSeries>(series))
      return constant_series<HermitianSeries>(
          c, std::get<HermitianSeries>(series).trunc());
    if (std::holds_alternative<SiegelSeries>(series))
      return constant_series<SiegelSeries>(c, std::get<SiegelSeries>(series).trunc());
    return constant_series<EllipticSeries>(c, std::get<EllipticSeries>(series).trunc());
  };
  if (std::holds_alternative<Rational>(a)) a = lift(a, b);
  if (std::holds_alternative<Rational>(b)) b = lift(b, a);

  if (a.index() != b.index())
    throw std::invalid_argument("cannot combine series of different kinds");
  if (std::holds_alternative<HermitianSeries>(a)) {
    auto &x = std::get<HermitianSeries>(a), &y = std::get<HermitianSeries>(b);
    require_same_weight(x, y, subtract ? "subtract" : "add");
    return subtract ? her_sub(x, y) : her_add(x, y);
  }
  if (std::holds_alternative<SiegelSeries>(a)) {
    auto &x = std::get<SiegelSeries>(a), &y = std::get<SiegelSeries>(b);
    require_same_weight(x, y, subtract ? "subtract" : "add");
    return subtract ? sie_sub(x, y) : sie_add(x, y);
  }
  auto &x = std::get<EllipticSeries>(a), &y = std::get<EllipticSeries>(b);
  require_same_weight(x, y, subtract ? "subtract" : "add");
  return subtract ? ell_sub(x, y) : ell_add(x, y);
}

Value multiply(const Value& a, const Value& b) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
    return std::get<Rational>(a) * std::get<Rational>(b);
  if (std::holds_alternative<Rational>(a)) return multiply(b, a);
  if (std::holds_alternative<Rational>(b)) {
    const Rational& c = std::get<Rational>(b);
    if (std::holds_alternative<HermitianSeries>(a))
      return her_scale(std::get<HermitianSeries>(a), c);
    if (std::holds_alternative<SiegelSeries>(a))
      return sie_scale(std::get<SiegelSeries>(a), c);
    return ell_scale(std::get<EllipticSeries>(a), c);
  }
  if (a.index() != b.index())
    throw std::invalid_argument("cannot multiply series of different kinds");
  if (std::holds_alternative<HermitianSeries>(a))
    return her_mul(std::get<HermitianSeries>(a), std::get<HermitianSeries>(b));
  if (std::holds_alternative<SiegelSeries>(a))
    return sie_mul(std::get<SiegelSeries>(a), std::get<SiegelSeries>(b));
  return ell_mul(std::get<EllipticSeries>(a), std::get<EllipticSeries>(b));
}

}  // namespace

Value evaluate(const Node& node, const EvalContext& ctx) {
  switch (node.kind) {
    case Node::Kind::Literal:
      return node.literal;
    case Node::Kind::Name:
      return ctx.resolve(node.name);
    case Node::Kind::Add:
      return add_or_sub(evaluate(*node.lhs, ctx), evaluate(*node.rhs, ctx),
                        false, ctx.scalar_trunc);
    case Node::Kind::Sub:
      return add_or_sub(evaluate(*node.lhs, ctx), evaluate(*node.rhs, ctx),
                        true, ctx.scalar_trunc);
    case Node::Kind::Mul:
      return multiply(evaluate(*node.lhs, ctx), evaluate(*node.rhs, ctx));
    case Node::Kind::Neg:
      return multiply(evaluate(*node.lhs, ctx), Value(Rational(-1)));
    case Node::Kind::Pow: {
      if (node.exponent < 0)
        throw std::invalid_argument("negative exponents are not defined here");
      Value base = evaluate(*node.lhs, ctx);
      unsigned e = static_cast<unsigned>(node.exponent);
      if (std::holds_alternative<Rational>(base)) {
        Rational out(1), b = std::get<Rational>(base);
        for (unsigned i = 0; i < e; ++i) out *= b;
        return out;
      }
      if (std::holds_alternative<HermitianSeries>(base))
        return her_pow(std::get<HermitianSeries>(base), e);
      if (std::holds_alternative<SiegelSeries>(base))
        return sie_pow(std::get<SiegelSeries>(base), e);
      return ell_pow(std::get<EllipticSeries>(base), e);
    }
    case Node::Kind::Restrict: {
      Value inner = evaluate(*node.lhs, ctx);
      if (!std::holds_alternative<HermitianSeries>(inner))
        throw std::invalid_argument("restrict() applies to Hermitian series only");
      return restrict_to_siegel(std::get<HermitianSeries>(inner));
    }
  }
  throw std::logic_error("evaluate: unreachable");
}

}  // namespace hermring::expr
