#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hermring {

// All coefficient arithmetic is exact. mpq_class keeps values canonical
// (lowest terms, positive denominator) under +, -, *; only direct num/den
// construction needs an explicit canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// p-adic valuation of a nonzero rational.
long ord_p(const Rational& q, unsigned long p);

// Residue in [0, p) of a p-integral rational (den coprime to p).
// Throws std::domain_error otherwise.
unsigned long residue_mod(const Rational& q, unsigned long p);

// Decimal "num/den" or "num" form, exact.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace hermring
