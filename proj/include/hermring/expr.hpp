#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hermring/rational.hpp"
#include "hermring/series.hpp"

namespace hermring::expr {

// Grammar over ledger names, rational literals, + - * ^ and restrict(...).
// Precedence ^ > * > binary +/-; identifiers resolve at evaluation time.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ('-')* power
//   power  := atom ('^' integer)?
//   atom   := rational | name | '(' expr ')' | 'restrict' '(' expr ')'

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Literal, Name, Add, Sub, Mul, Pow, Neg, Restrict };
  Kind kind;
  Rational literal;      // Literal
  std::string name;      // Name
  NodePtr lhs, rhs;      // binary; lhs only for Neg/Restrict
  long exponent = 0;     // Pow
};

NodePtr parse(const std::string& text);  // throws ParseError with position
std::string to_string(const Node& node);

// Evaluation value: scalar until combined with a series.
using Value = std::variant<Rational, HermitianSeries, SiegelSeries, EllipticSeries>;

struct EvalContext {
  // resolves a ledger identifier; throws std::invalid_argument when unknown
  std::function<Value(const std::string&)> resolve;
  // truncation for lifting bare scalars to constant series when required
  long scalar_trunc = 0;
};

// Throws WeightMismatch when +/- operands carry unequal weight metadata,
// std::invalid_argument for type mismatches (e.g. hermitian * siegel,
// restrict of a non-hermitian value, negative exponents).
Value evaluate(const Node& node, const EvalContext& ctx);

}  // namespace hermring::expr
