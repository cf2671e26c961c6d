#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "hermring/lattice.hpp"
#include "hermring/rational.hpp"

namespace hermring {

// Truncated sparse Fourier expansions with exact rational coefficients.
// Values are immutable after construction; all operations return new series.
// Sparse maps never store zeros, so equality is structural. The truncation
// parameter bounds both diagonal entries (m, n <= trunc); within that box
// every ring operation below is exact because diagonal entries add.

class HermitianSeries {
 public:
  using Coeffs = std::map<HermitianIndex, Rational>;

  HermitianSeries() = default;
  explicit HermitianSeries(int trunc, std::optional<int> weight = std::nullopt)
      : trunc_(trunc), weight_(weight) {}
  // Prunes zeros; rejects indices outside the truncation box or not psd.
  HermitianSeries(int trunc, Coeffs coeffs,
                  std::optional<int> weight = std::nullopt);

  static HermitianSeries unit(int trunc, std::optional<int> weight = 0);

  int trunc() const { return trunc_; }
  std::optional<int> weight() const { return weight_; }
  const Coeffs& coeffs() const { return coeffs_; }
  Rational at(const HermitianIndex& h) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_integral() const;
  HermitianSeries with_weight(std::optional<int> w) const;

  // trunc + coefficients; weight metadata is not part of the value.
  friend bool operator==(const HermitianSeries& a, const HermitianSeries& b) {
    return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int trunc_ = 0;
  std::optional<int> weight_;
  Coeffs coeffs_;
};

class SiegelSeries {
 public:
  using Coeffs = std::map<SiegelIndex, Rational>;

  SiegelSeries() = default;
  explicit SiegelSeries(int trunc, std::optional<int> weight = std::nullopt)
      : trunc_(trunc), weight_(weight) {}
  SiegelSeries(int trunc, Coeffs coeffs,
               std::optional<int> weight = std::nullopt);

  static SiegelSeries unit(int trunc, std::optional<int> weight = 0);

  int trunc() const { return trunc_; }
  std::optional<int> weight() const { return weight_; }
  const Coeffs& coeffs() const { return coeffs_; }
  Rational at(const SiegelIndex& t) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_integral() const;
  SiegelSeries with_weight(std::optional<int> w) const;

  friend bool operator==(const SiegelSeries& a, const SiegelSeries& b) {
    return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int trunc_ = 0;
  std::optional<int> weight_;
  Coeffs coeffs_;
};

class EllipticSeries {
 public:
  using Coeffs = std::map<long, Rational>;

  EllipticSeries() = default;
  explicit EllipticSeries(long trunc, std::optional<int> weight = std::nullopt)
      : trunc_(trunc), weight_(weight) {}
  EllipticSeries(long trunc, Coeffs coeffs,
                 std::optional<int> weight = std::nullopt);

  static EllipticSeries unit(long trunc, std::optional<int> weight = 0);

  long trunc() const { return trunc_; }
  std::optional<int> weight() const { return weight_; }
  const Coeffs& coeffs() const { return coeffs_; }
  Rational at(long n) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_integral() const;
  EllipticSeries with_weight(std::optional<int> w) const;

  friend bool operator==(const EllipticSeries& a, const EllipticSeries& b) {
    return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
  }

 private:
  long trunc_ = 0;
  std::optional<int> weight_;
  Coeffs coeffs_;
};

// Ring operations. Binary ops truncate to the min of the operand truncations;
// weight metadata survives addition when both operands agree, and adds under
// multiplication when both are present.
HermitianSeries her_add(const HermitianSeries& a, const HermitianSeries& b);
HermitianSeries her_sub(const HermitianSeries& a, const HermitianSeries& b);
HermitianSeries her_scale(const HermitianSeries& a, const Rational& c);
HermitianSeries her_mul(const HermitianSeries& a, const HermitianSeries& b);
HermitianSeries her_pow(const HermitianSeries& a, unsigned e);

SiegelSeries sie_add(const SiegelSeries& a, const SiegelSeries& b);
SiegelSeries sie_sub(const SiegelSeries& a, const SiegelSeries& b);
SiegelSeries sie_scale(const SiegelSeries& a, const Rational& c);
SiegelSeries sie_mul(const SiegelSeries& a, const SiegelSeries& b);
SiegelSeries sie_pow(const SiegelSeries& a, unsigned e);

EllipticSeries ell_add(const EllipticSeries& a, const EllipticSeries& b);
EllipticSeries ell_sub(const EllipticSeries& a, const EllipticSeries& b);
EllipticSeries ell_scale(const EllipticSeries& a, const Rational& c);
EllipticSeries ell_mul(const EllipticSeries& a, const EllipticSeries& b);
EllipticSeries ell_pow(const EllipticSeries& a, unsigned e);

// v_p at truncation: min ord_p over stored coefficients; nullopt (= +inf)
// for the zero series.
std::optional<long> her_vp(const HermitianSeries& f, unsigned long p);

// Coefficient-wise reduction mod p (residues in [0, p)). Requires every
// coefficient p-integral; throws NotPIntegral naming the offending index.
HermitianSeries reduce_mod(const HermitianSeries& f, unsigned long p);
SiegelSeries reduce_mod(const SiegelSeries& f, unsigned long p);
EllipticSeries reduce_mod(const EllipticSeries& f, unsigned long p);

// Restriction to the Siegel half-space: a(m, t, n) = sum_r a_F(m, r, t, n).
SiegelSeries restrict_to_siegel(const HermitianSeries& f);

// ---- serialization (shared line-oriented text format) ----
//
//   # name=<id>
//   # weight=<k>          (omitted when absent)
//   # trunc=<M>
//   # kind=hermitian|siegel|elliptic
//   <indices> <num> <den>
//
// one line per nonzero coefficient in the deterministic order; bit-exact
// round trips.

using AnySeries = std::variant<HermitianSeries, SiegelSeries, EllipticSeries>;

std::string serialize(const std::string& name, const HermitianSeries& f);
std::string serialize(const std::string& name, const SiegelSeries& f);
std::string serialize(const std::string& name, const EllipticSeries& f);
std::string serialize(const std::string& name, const AnySeries& f);

struct NamedSeries {
  std::string name;
  AnySeries value;
};
NamedSeries parse_series(const std::string& text);

const char* kind_of(const AnySeries& s);

}  // namespace hermring
