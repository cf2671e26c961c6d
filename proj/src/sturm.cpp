#include "hermring/sturm.hpp"

#include <random>
#include <sstream>

#include "hermring/errors.hpp"
#include "hermring/genring.hpp"

namespace hermring {

long hermitian_sturm_bound(int k) {
  if (k < 0) throw std::invalid_argument("hermitian_sturm_bound: k >= 0");
  return k / 8;
}

long siegel_sturm_bound(int k) {
  if (k < 0) throw std::invalid_argument("siegel_sturm_bound: k >= 0");
  return k / 10;
}

const char* to_string(SturmTheorem t) {
  switch (t) {
    case SturmTheorem::HermitianAnyPrime: return "hermitian-4|k-any-p";
    case SturmTheorem::HermitianLargePrime: return "hermitian-even-k-p>=5";
    case SturmTheorem::Siegel: return "siegel-any-p";
    case SturmTheorem::AdvisoryOnly: return "advisory-only";
  }
  return "?";
}

namespace {

SturmTheorem hermitian_regime(int k, unsigned long p) {
  if (k % 4 == 0) return SturmTheorem::HermitianAnyPrime;
  if (k % 2 == 0 && p >= 5) return SturmTheorem::HermitianLargePrime;
  return SturmTheorem::AdvisoryOnly;
}

template <typename Verdict>
std::string certificate_text(const Verdict& v) {
  std::ostringstream os;
  os << "theorem: " << to_string(v.theorem) << "\n";
  os << "weight: " << v.weight << "\n";
  os << "prime: " << v.prime << "\n";
  os << "bound: " << v.bound << "\n";
  os << "verdict: " << (v.pass ? "PASS" : "FAIL") << "\n";
  if (v.witness)
    os << "witness: " << v.witness->str() << "\n";
  os << "extension: " << (v.empirical_pass ? "PASS" : "FAIL") << "\n";
  if (v.empirical_witness)
    os << "extension_witness: " << v.empirical_witness->str() << "\n";
  return os.str();
}

}  // namespace

std::string HermitianCongruenceVerdict::certificate() const {
  return certificate_text(*this);
}
std::string SiegelCongruenceVerdict::certificate() const {
  return certificate_text(*this);
}

namespace {

template <typename Index>
unsigned long residue_or_throw(const Rational& c, unsigned long p,
                               const Index& where) {
  if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p))
    throw NotPIntegral("coefficient at " + where.str() + " is not " +
                       std::to_string(p) + "-integral");
  return residue_mod(c, p);
}

}  // namespace

HermitianCongruenceVerdict check_congruence_hermitian(const HermitianSeries& f,
                                                      int k, unsigned long p) {
  HermitianCongruenceVerdict v;
  v.theorem = hermitian_regime(k, p);
  v.weight = k;
  v.prime = p;
  v.bound = hermitian_sturm_bound(k);
  if (f.trunc() < v.bound)
    throw NeedsMoreTerms("check_congruence_hermitian: need trunc >= " +
                         std::to_string(v.bound));
  v.pass = true;
  v.empirical_pass = true;
  // one ordered pass records both first offenders
  for (const auto& [h, c] : f.coeffs()) {
    if (residue_or_throw(c, p, h) == 0) continue;
    if (v.empirical_pass) {
      v.empirical_pass = false;
      v.empirical_witness = h;
    }
    if (h.m <= v.bound && h.n <= v.bound && v.pass) {
      v.pass = false;
      v.witness = h;
    }
  }
  return v;
}

VanishingVerdict check_vanishing_hermitian(const HermitianSeries& f, int k) {
  VanishingVerdict v;
  v.bound = hermitian_sturm_bound(k);
  if (f.trunc() < v.bound)
    throw NeedsMoreTerms("check_vanishing_hermitian: need trunc >= " +
                         std::to_string(v.bound));
  v.pass = true;
  for (const auto& [h, c] : f.coeffs()) {
    if (h.m <= v.bound && h.n <= v.bound) {
      v.pass = false;
      v.witness = h;
      break;
    }
  }
  return v;
}

SiegelCongruenceVerdict check_congruence_siegel(const SiegelSeries& f, int k,
                                                unsigned long p) {
  SiegelCongruenceVerdict v;
  v.theorem = SturmTheorem::Siegel;
  v.weight = k;
  v.prime = p;
  v.bound = siegel_sturm_bound(k);
  if (f.trunc() < v.bound)
    throw NeedsMoreTerms("check_congruence_siegel: need trunc >= " +
                         std::to_string(v.bound));
  v.pass = true;
  v.empirical_pass = true;
  for (const auto& [t, c] : f.coeffs()) {
    if (residue_or_throw(c, p, t) == 0) continue;
    if (v.empirical_pass) {
      v.empirical_pass = false;
      v.empirical_witness = t;
    }
    if (t.m <= v.bound && t.n <= v.bound && v.pass) {
      v.pass = false;
      v.witness = t;
    }
  }
  return v;
}

namespace {

// weight-k monomials in ledger generators, as lists of (name, exponent)
std::vector<std::vector<std::pair<std::string, int>>> monomial_catalog(int k) {
  switch (k) {
    case 12:
      return {{{"H4", 3}}, {{"H4", 1}, {"H8", 1}}, {{"H12", 1}},
              {{"I12", 1}}, {{"J12", 1}}};
    case 16:
      return {{{"H4", 4}},
              {{"H4", 2}, {"H8", 1}},
              {{"H8", 2}},
              {{"H4", 1}, {"H12", 1}},
              {{"H4", 1}, {"I12", 1}},
              {{"H4", 1}, {"J12", 1}},
              {{"H16", 1}},
              {{"I16", 1}}};
    case 20:
      return {{{"H4", 5}},
              {{"H4", 3}, {"H8", 1}},
              {{"H4", 1}, {"H8", 2}},
              {{"H4", 2}, {"H12", 1}},
              {{"H4", 2}, {"I12", 1}},
              {{"H4", 2}, {"J12", 1}},
              {{"H4", 1}, {"H16", 1}},
              {{"H4", 1}, {"I16", 1}},
              {{"H8", 1}, {"H12", 1}},
              {{"H8", 1}, {"I12", 1}},
              {{"H8", 1}, {"J12", 1}},
              {{"H20", 1}}};
    default:
      throw std::invalid_argument("monomial_catalog: no catalog for weight " +
                                  std::to_string(k));
  }
}

// kernel basis of A x = 0 over F_p (column echelon via row reduction)
std::vector<std::vector<unsigned long>> kernel_mod_p(
    std::vector<std::vector<unsigned long>> a, std::size_t cols,
    unsigned long p) {
  auto inv = [&](unsigned long x) {
    // p prime, x != 0
    unsigned long r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t sel = rank;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[rank], a[sel]);
    unsigned long s = inv(a[rank][col]);
    for (std::size_t j = 0; j < cols; ++j) a[rank][j] = a[rank][j] * s % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      unsigned long f = a[i][col];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
    }
    pivot_of_col[col] = static_cast<long>(rank);
    ++rank;
  }
  std::vector<std::vector<unsigned long>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_of_col[free_col] != -1) continue;
    std::vector<unsigned long> vec(cols, 0);
    vec[free_col] = 1;
    for (std::size_t col = 0; col < cols; ++col) {
      if (pivot_of_col[col] == -1) continue;
      vec[col] = (p - a[static_cast<std::size_t>(pivot_of_col[col])][free_col] % p) % p;
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace

Report sturm_falsifier(const GeneratorLedger& ledger, int k, unsigned long p,
                       int count, std::uint64_t seed) {
  Report report;
  const long bound = hermitian_sturm_bound(k);
  if (ledger.trunc() < bound)
    throw NeedsMoreTerms("sturm_falsifier: ledger truncation below bound");

  auto catalog = monomial_catalog(k);
  std::vector<HermitianSeries> monomials;
  for (const auto& mono : catalog) {
    HermitianSeries s = HermitianSeries::unit(ledger.trunc());
    for (const auto& [name, e] : mono)
      s = her_mul(s, her_pow(ledger.series(name), static_cast<unsigned>(e)));
    monomials.push_back(std::move(s));
  }

  // low-index coefficient matrix mod p
  std::vector<HermitianIndex> box;
  for (const HermitianIndex& h : enumerate_indices(ledger.trunc()))
    if (h.m <= bound && h.n <= bound) box.push_back(h);
  std::vector<std::vector<unsigned long>> matrix;
  for (const HermitianIndex& h : box) {
    std::vector<unsigned long> row(monomials.size());
    for (std::size_t j = 0; j < monomials.size(); ++j)
      row[j] = residue_mod(monomials[j].at(h), p);
    matrix.push_back(std::move(row));
  }
  auto basis = kernel_mod_p(matrix, monomials.size(), p);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned long> coeff_dist(0, p - 1);
  std::uniform_int_distribution<long> lift_dist(-20, 20);

  int violations = 0;
  std::string first_violation;
  for (int trial = 0; trial < count; ++trial) {
    // random kernel element, lifted by p * random combination so the
    // result is a nonzero integral form even when the kernel is trivial
    std::vector<Rational> coeffs(monomials.size(), Rational(0));
    for (const auto& vec : basis) {
      unsigned long c = coeff_dist(rng);
      if (c == 0) continue;
      for (std::size_t j = 0; j < monomials.size(); ++j)
        coeffs[j] += Rational(static_cast<long>(c * vec[j] % p));
    }
    bool nonzero = false;
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      long lift = lift_dist(rng);
      coeffs[j] += Rational(static_cast<long>(p)) * lift;
      if (coeffs[j] != 0) nonzero = true;
    }
    if (!nonzero) coeffs[0] = Rational(static_cast<long>(p));

    HermitianSeries f(ledger.trunc());
    for (std::size_t j = 0; j < monomials.size(); ++j)
      if (coeffs[j] != 0) f = her_add(f, her_scale(monomials[j], coeffs[j]));

    HermitianCongruenceVerdict v = check_congruence_hermitian(f, k, p);
    if (!v.pass)
      throw InternalError("sturm_falsifier: combination fails its own "
                          "construction at " + v.witness->str());
    if (!v.empirical_pass) {
      ++violations;
      if (first_violation.empty())
        first_violation = "trial " + std::to_string(trial) + " at " +
                          v.empirical_witness->str();
    }
  }
  std::string label = "falsifier:k=" + std::to_string(k) +
                      ":p=" + std::to_string(p);
  if (violations == 0)
    report.pass(label, false,
                std::to_string(count) + " combinations, kernel dim " +
                    std::to_string(basis.size()));
  else
    report.fail(label, std::to_string(violations) +
                           " theorem-contradicting combinations (BUG): " +
                           first_violation);
  return report;
}

}  // namespace hermring
