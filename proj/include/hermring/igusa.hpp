#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermring/cache.hpp"
#include "hermring/genring.hpp"
#include "hermring/report.hpp"
#include "hermring/series.hpp"

namespace hermring {

struct IgusaEntry {
  SiegelSeries series;
  std::optional<int> weight;
  std::string formula;
};

// The Siegel side: X4, X6, X10, X12 recovered by restriction of the
// Hermitian base forms, the integral combination ledger X16..X48 and Y12,
// and the generators of the weight-divisible-by-4 subring.
class IgusaLedger {
 public:
  explicit IgusaLedger(int trunc) : trunc_(trunc) {}

  int trunc() const { return trunc_; }
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  const IgusaEntry& entry(const std::string& name) const;
  const SiegelSeries& series(const std::string& name) const {
    return entry(name).series;
  }
  const std::vector<std::string>& names() const { return order_; }

  void define(const std::string& name, SiegelSeries series,
              std::optional<int> weight, std::string formula,
              bool assert_integral = true);

  // 23 generator names of the corollary (S/T/U families).
  static const std::vector<std::string>& corollary_names();

 private:
  int trunc_;
  std::vector<std::string> order_;
  std::map<std::string, IgusaEntry> entries_;
};

// Needs the Hermitian ledger for the restrictions; X10 = restrict(F10)/6
// must divide exactly (else LedgerError).
IgusaLedger build_igusa(const GeneratorLedger& hermitian,
                        SeriesCache* cache = nullptr);

// Every claimed restriction pairing, with the a(1,1,1) normalization facts
// and a rigor flag at M >= floor(k/10).
Report verify_restrictions(const GeneratorLedger& hermitian,
                           const IgusaLedger& siegel,
                           SeriesCache* cache = nullptr);

}  // namespace hermring
