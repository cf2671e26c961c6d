#include "hermring/rational.hpp"

#include <stdexcept>

namespace hermring {

long ord_p(const Rational& q, unsigned long p) {
  if (q == 0) throw std::domain_error("ord_p: zero has infinite valuation");
  mpz_class tmp;
  mpz_class pz(static_cast<unsigned long>(p));
  long v_num = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), q.get_num().get_mpz_t(), pz.get_mpz_t()));
  long v_den = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), q.get_den().get_mpz_t(), pz.get_mpz_t()));
  return v_num - v_den;
}

unsigned long residue_mod(const Rational& q, unsigned long p) {
  mpz_class pz(p);
  if (mpz_divisible_p(q.get_den().get_mpz_t(), pz.get_mpz_t()))
    throw std::domain_error("residue_mod: denominator not coprime to p");
  mpz_class den_inv;
  if (!mpz_invert(den_inv.get_mpz_t(), q.get_den().get_mpz_t(), pz.get_mpz_t()))
    throw std::domain_error("residue_mod: denominator not invertible mod p");
  mpz_class r = q.get_num() * den_inv;
  mpz_class out;
  mpz_mod(out.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
  return out.get_ui();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  Rational q;
  if (slash == std::string::npos) {
    if (mpz_set_str(q.get_num().get_mpz_t(), text.c_str(), 10) != 0)
      throw std::invalid_argument("parse_rational: bad integer '" + text + "'");
    q.get_den() = 1;
  } else {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (mpz_set_str(q.get_num().get_mpz_t(), num.c_str(), 10) != 0 ||
        mpz_set_str(q.get_den().get_mpz_t(), den.c_str(), 10) != 0 ||
        q.get_den() == 0)
      throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace hermring
