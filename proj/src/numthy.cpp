#include "hermring/numthy.hpp"

#include <mutex>

#include "hermring/errors.hpp"

namespace hermring {

int chi_m4(long n) {
  if (n <= 0 || n % 2 == 0) return 0;
  return n % 4 == 1 ? 1 : -1;
}

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

const Rational& bernoulli(unsigned m) {
  static std::mutex mu;
  static std::vector<Rational> table;
  std::scoped_lock lock(mu);
  while (table.size() <= m) {
    unsigned k = static_cast<unsigned>(table.size());
    if (k == 0) {
      table.emplace_back(1);
      continue;
    }
    // sum_{j=0}^{k} C(k+1, j) B_j = 0
    Rational acc(0);
    for (unsigned j = 0; j < k; ++j)
      acc += Rational(binomial(k + 1, j)) * table[j];
    table.push_back(-acc / Rational(k + 1));
  }
  return table[m];
}

Rational bernoulli_poly(unsigned m, const Rational& x) {
  Rational acc(0);
  Rational xpow(1);
  // B_m(x) = sum_j C(m, j) B_{m-j} x^j
  for (unsigned j = 0; j <= m; ++j) {
    acc += Rational(binomial(m, j)) * bernoulli(m - j) * xpow;
    xpow *= x;
  }
  return acc;
}

Rational bernoulli_chi(unsigned m) {
  if (m == 0) throw std::invalid_argument("bernoulli_chi: m >= 1 required");
  Rational acc(0);
  for (unsigned a = 1; a <= 4; ++a) {
    int chi = chi_m4(static_cast<long>(a));
    if (chi == 0) continue;
    acc += Rational(chi) * bernoulli_poly(m, make_rational(a, 4));
  }
  Rational f_pow(1);
  for (unsigned i = 1; i < m; ++i) f_pow *= 4;
  return f_pow * acc;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Integer sigma(unsigned k, unsigned long n) {
  if (n == 0) throw std::invalid_argument("sigma: n >= 1 required");
  Integer acc(0), dk;
  for (unsigned long d : divisors(n)) {
    mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
    acc += dk;
  }
  return acc;
}

Integer g_k(unsigned m, unsigned long N) {
  if (N == 0) throw std::invalid_argument("g_k: N >= 1 required");
  Integer sig(0), sig_star(0), dm;
  for (unsigned long d : divisors(N)) {
    mpz_ui_pow_ui(dm.get_mpz_t(), d, m);
    sig += chi_m4(static_cast<long>(d)) * dm;
    sig_star += chi_m4(static_cast<long>(N / d)) * dm;
  }
  Integer diff = sig - sig_star;
  int denom = 1 + (chi_m4(static_cast<long>(N)) != 0 ? 1 : 0);
  if (denom == 2) {
    if (mpz_odd_p(diff.get_mpz_t()))
      throw InternalError("g_k: inexact halving at N=" + std::to_string(N));
    diff /= 2;
  }
  return diff;
}

}  // namespace hermring
