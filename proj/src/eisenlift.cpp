#include "hermring/eisenlift.hpp"

#include <cmath>

#include "hermring/errors.hpp"
#include "hermring/numthy.hpp"

namespace hermring {

HermitianSeries hermitian_eisenstein(int k, int M) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("hermitian_eisenstein: weight must be even and >= 4, got " +
                                std::to_string(k));
  const unsigned uk = static_cast<unsigned>(k);
  const Rational rank1_factor =
      Rational(-2 * k) / bernoulli(uk);
  const Rational rank2_factor =
      Rational(4 * k * (k - 1)) / (bernoulli(uk) * bernoulli_chi(uk - 1));

  HermitianSeries::Coeffs coeffs;
  Integer dpow;
  for (const HermitianIndex& h : enumerate_indices(M)) {
    switch (h.rank()) {
      case 0:
        coeffs[h] = 1;
        break;
      case 1:
        coeffs[h] = rank1_factor * Rational(sigma(uk - 1, content(h)));
        break;
      case 2: {
        const long det4 = h.four_det();
        Integer acc(0);
        for (unsigned long d : divisors(static_cast<unsigned long>(content(h)))) {
          long arg = det4 / static_cast<long>(d * d);
          if (static_cast<long>(d * d) * arg != det4) continue;  // d^2 | 4det required
          mpz_ui_pow_ui(dpow.get_mpz_t(), d, uk - 1);
          acc += dpow * g_k(uk - 2, static_cast<unsigned long>(arg));
        }
        coeffs[h] = rank2_factor * Rational(acc);
        break;
      }
    }
  }
  return HermitianSeries(M, std::move(coeffs), k);
}

EllipticSeries theta_sq(long N) {
  EllipticSeries::Coeffs out;
  long amax = static_cast<long>(std::sqrt(static_cast<double>(N))) + 1;
  for (long a = -amax; a <= amax; ++a)
    for (long b = -amax; b <= amax; ++b)
      if (a * a + b * b <= N) out[a * a + b * b] += 1;
  return EllipticSeries(N, std::move(out), 1);
}

EllipticSeries f2(long N) {
  EllipticSeries::Coeffs out;
  for (long n = 1; n <= N; n += 2)
    out[n] = Rational(sigma(1, static_cast<unsigned long>(n)));
  return EllipticSeries(N, std::move(out), 2);
}

PlusFormRecipe recipe_from_fixture(const fixtures::PlusFormFixture& fx) {
  PlusFormRecipe r;
  r.name = fx.name;
  r.weight = fx.weight;
  r.terms.assign(fx.recipe, fx.recipe + fx.recipe_count);
  return r;
}

EllipticSeries recipe_expand(const PlusFormRecipe& recipe, long N) {
  EllipticSeries acc(N, recipe.weight);
  const EllipticSeries th = theta_sq(N);
  const EllipticSeries ff = f2(N);
  for (const auto& term : recipe.terms) {
    if (term.theta_exp % 2 != 0 ||
        term.theta_exp / 2 + 2 * term.f2_exp != recipe.weight)
      throw WeightMismatch("recipe_expand: term theta^" +
                           std::to_string(term.theta_exp) + " f2^" +
                           std::to_string(term.f2_exp) +
                           " is not homogeneous of weight " +
                           std::to_string(recipe.weight));
    EllipticSeries t = ell_mul(ell_pow(th, static_cast<unsigned>(term.theta_exp / 2)),
                               ell_pow(ff, static_cast<unsigned>(term.f2_exp)));
    acc = ell_add(acc, ell_scale(t, Rational(term.coeff)));
  }
  return acc.with_weight(recipe.weight);
}

EllipticSeries op_U(const EllipticSeries& f, long l) {
  if (l < 1) throw std::invalid_argument("op_U: l >= 1 required");
  EllipticSeries::Coeffs out;
  long N = f.trunc() / l;
  for (const auto& [n, c] : f.coeffs())
    if (n % l == 0 && n / l <= N) out[n / l] = c;
  return EllipticSeries(N, std::move(out), f.weight());
}

EllipticSeries op_V(const EllipticSeries& f, long l) {
  if (l < 1) throw std::invalid_argument("op_V: l >= 1 required");
  EllipticSeries::Coeffs out;
  for (const auto& [n, c] : f.coeffs()) out[n * l] = c;
  return EllipticSeries(f.trunc() * l, std::move(out), f.weight());
}

EllipticSeries op_Tchi(const EllipticSeries& f) {
  EllipticSeries::Coeffs out;
  for (const auto& [n, c] : f.coeffs()) {
    int chi = chi_m4(n);
    if (chi != 0) out[n] = Rational(chi) * c;
  }
  return EllipticSeries(f.trunc(), std::move(out), f.weight());
}

long sturm_bound_elliptic(int k, long level) {
  // index [Gamma_1 : Gamma_0(N)] = N * prod_{p | N} (1 + 1/p)
  Rational index(level);
  long rest = level;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      index *= make_rational(p + 1, p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) index *= make_rational(rest + 1, rest);
  Rational bound = Rational(k) * index / 12;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), bound.get_num().get_mpz_t(),
             bound.get_den().get_mpz_t());
  return fl.get_si();
}

PlusSpaceVerdict plus_space_check(const EllipticSeries& f, int k, long level) {
  long bound = sturm_bound_elliptic(k, level);
  if (f.trunc() < bound)
    throw NeedsMoreTerms("plus_space_check: need trunc >= " +
                         std::to_string(bound) + ", have " +
                         std::to_string(f.trunc()));
  EllipticSeries g =
      ell_sub(ell_add(f, op_Tchi(f)), op_V(op_U(f, 2), 2));
  PlusSpaceVerdict verdict;
  verdict.bound = bound;
  verdict.pass = true;
  for (const auto& [n, c] : g.coeffs()) {
    if (n > bound) break;
    if (c != 0) {
      verdict.pass = false;
      verdict.witness = n;
      break;
    }
  }
  return verdict;
}

HermitianSeries maass_lift(const EllipticSeries& h, int k, int M) {
  if (h.at(0) != 0)
    throw std::invalid_argument("maass_lift: nonzero constant term is unsupported");
  long need = 4L * M * M;
  if (h.trunc() < need)
    throw NeedsMoreTerms("maass_lift: need elliptic trunc >= " +
                         std::to_string(need) + ", have " +
                         std::to_string(h.trunc()));
  HermitianSeries::Coeffs out;
  Integer dpow;
  for (const HermitianIndex& idx : enumerate_indices(M)) {
    if (idx.is_zero()) continue;
    const long det4 = idx.four_det();
    Rational acc(0);
    for (unsigned long d : divisors(static_cast<unsigned long>(content(idx)))) {
      long arg = det4 / static_cast<long>(d * d);
      if (static_cast<long>(d * d) * arg != det4) continue;
      Rational ah = h.at(arg);
      if (ah == 0) continue;
      mpz_ui_pow_ui(dpow.get_mpz_t(), d, static_cast<unsigned>(k - 1));
      int halve = chi_m4(arg) != 0 ? 2 : 1;
      acc += Rational(dpow) * ah / halve;
    }
    if (acc != 0) out[idx] = acc;
  }
  return HermitianSeries(M, std::move(out), k);
}

long default_elliptic_trunc(int weight, int M) {
  return std::max(4L * M * M, sturm_bound_elliptic(weight, 32));
}

}  // namespace hermring
