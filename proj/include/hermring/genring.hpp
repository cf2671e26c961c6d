#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermring/cache.hpp"
#include "hermring/report.hpp"
#include "hermring/series.hpp"
#include "hermring/suv_tables.hpp"

namespace hermring {

struct LedgerEntry {
  HermitianSeries series;
  std::optional<int> weight;
  std::string formula;  // defining combination, as provenance
  bool integral_required = false;
};

// Named registry of every constructed Hermitian form at one truncation:
// the Eisenstein scaffolding E4..E12, the base forms, the ring generators,
// the auxiliary K/L forms and the substitution series S, U, V.
class GeneratorLedger {
 public:
  explicit GeneratorLedger(int trunc) : trunc_(trunc) {}

  int trunc() const { return trunc_; }
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  const LedgerEntry& entry(const std::string& name) const;
  const HermitianSeries& series(const std::string& name) const {
    return entry(name).series;
  }
  // Names in definition order.
  const std::vector<std::string>& names() const { return order_; }

  // Registers a form; with enforce_integrality, an integral_required entry
  // with a non-integer coefficient throws LedgerError naming form and index.
  void define(const std::string& name, HermitianSeries series,
              std::optional<int> weight, std::string formula,
              bool integral_required, bool enforce_integrality = true);

  static const std::vector<std::string>& theorem1_names();   // the 24
  static const std::vector<std::string>& auxiliary_names();  // K14..K42, L30, K38

 private:
  int trunc_;
  std::vector<std::string> order_;
  std::map<std::string, LedgerEntry> entries_;
};

// Builds every ledger entry in dependency order, consulting the cache per
// entry when one is given. enforce_integrality=false defers integrality
// reporting to verify_integrality.
GeneratorLedger build_all(int M, SeriesCache* cache = nullptr,
                          bool enforce_integrality = true);

// Evaluates a certificate polynomial in the ledger's H12, H8, S, U, V.
HermitianSeries evaluate_suv_polynomial(const SuvPolynomial& poly,
                                        const GeneratorLedger& ledger);

struct CuspVerdict {
  bool pass = true;
  std::optional<HermitianIndex> witness;  // first rank <= 1 index with a != 0
};
CuspVerdict is_cusp_at_trunc(const HermitianSeries& f);

// Integer-coefficient scan over every integral_required entry.
Report verify_integrality(const GeneratorLedger& ledger);

// The identity suite: base-form substitution identities, the I12 expansion,
// the three lift identities, cusp combinations, every certificate
// polynomial, and machine-checks of the three published-display defects.
// Rigor flags follow M >= floor(k/8).
Report verify_identities(const GeneratorLedger& ledger,
                         SeriesCache* cache = nullptr);

// Plus-space suite: recipe regeneration against the published tables and
// the T_chi/U/V membership certificates (level-32 bounds).
Report verify_plus_space();

// Lift of the named fixture form ("h13", "h15", "h17") at Hermitian
// truncation M, cached when a cache is given.
HermitianSeries lift_of_fixture(const std::string& name, int M,
                                SeriesCache* cache = nullptr);

}  // namespace hermring
