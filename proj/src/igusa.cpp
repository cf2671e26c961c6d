#include "hermring/igusa.hpp"

#include <functional>

#include "hermring/errors.hpp"
#include "hermring/sturm.hpp"

namespace hermring {

const IgusaEntry& IgusaLedger::entry(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end())
    throw std::invalid_argument("igusa ledger: unknown form '" + name + "'");
  return it->second;
}

void IgusaLedger::define(const std::string& name, SiegelSeries series,
                         std::optional<int> weight, std::string formula,
                         bool assert_integral) {
  if (entries_.count(name))
    throw std::invalid_argument("igusa ledger: duplicate form '" + name + "'");
  if (weight) series = series.with_weight(weight);
  if (assert_integral) {
    for (const auto& [t, c] : series.coeffs())
      if (!is_integer(c))
        throw LedgerError("igusa ledger: " + name +
                          " has non-integer coefficient " + to_string(c) +
                          " at " + t.str());
  }
  order_.push_back(name);
  entries_.emplace(name, IgusaEntry{std::move(series), weight, std::move(formula)});
}

const std::vector<std::string>& IgusaLedger::corollary_names() {
  static const std::vector<std::string> names = {
      "S4",  "S12", "T12", "U12", "S16", "T16", "S20", "S24",
      "T24", "S28", "T28", "S36", "T36", "U36", "S40", "T40",
      "S48", "T48", "S52", "S60", "T60", "S72", "S84"};
  return names;
}

namespace {

Rational rat(long num, long den = 1) { return make_rational(num, den); }

class SiegelBuilder {
 public:
  SiegelBuilder(int M, SeriesCache* cache) : M_(M), cache_(cache), ledger_(M) {}
  IgusaLedger take() && { return std::move(ledger_); }
  const SiegelSeries& get(const std::string& name) { return ledger_.series(name); }

  void add(const std::string& name, std::optional<int> weight,
           const std::string& formula,
           const std::function<SiegelSeries()>& compute) {
    if (cache_) {
      if (auto hit = cache_->load_siegel("X:" + name, M_)) {
        ledger_.define(name, std::move(*hit), weight, formula);
        return;
      }
    }
    SiegelSeries s = compute();
    if (weight) s = s.with_weight(weight);
    if (cache_) cache_->store("X:" + name, AnySeries(s));
    ledger_.define(name, std::move(s), weight, formula);
  }

 private:
  int M_;
  SeriesCache* cache_;
  IgusaLedger ledger_;
};

}  // namespace

IgusaLedger build_igusa(const GeneratorLedger& her, SeriesCache* cache) {
  const int M = her.trunc();
  SiegelBuilder b(M, cache);
  auto X = [&](const std::string& n) -> const SiegelSeries& { return b.get(n); };

  b.add("X4", 4, "X4 := H4|", [&] { return restrict_to_siegel(her.series("H4")); });
  b.add("X6", 6, "X6 := E6|", [&] { return restrict_to_siegel(her.series("E6")); });
  b.add("X10", 10, "X10 := (F10|)/6", [&] {
    SiegelSeries r = sie_scale(restrict_to_siegel(her.series("F10")), rat(1, 6));
    for (const auto& [t, c] : r.coeffs())
      if (!is_integer(c))
        throw LedgerError("X10: restriction of F10 not divisible by 6 at " +
                          t.str());
    return r;
  });
  b.add("X12", 12, "X12 := H12|",
        [&] { return restrict_to_siegel(her.series("H12")); });

  b.add("Y12", 12, "Y12 := 2^-6 3^-3 (X4^3 - X6^2) + 2^4 3^2 X12", [&] {
    return sie_add(sie_scale(sie_sub(sie_pow(X("X4"), 3), sie_pow(X("X6"), 2)),
                             rat(1, 1728)),
                   sie_scale(X("X12"), rat(144)));
  });
  b.add("X16", 16, "X16 := 2^-2 3^-1 (X4 X12 - X6 X10)", [&] {
    return sie_scale(sie_sub(sie_mul(X("X4"), X("X12")),
                             sie_mul(X("X6"), X("X10"))),
                     rat(1, 12));
  });
  b.add("X18", 18, "X18 := 2^-2 3^-1 (X6 X12 - X4^2 X10)", [&] {
    return sie_scale(sie_sub(sie_mul(X("X6"), X("X12")),
                             sie_mul(sie_pow(X("X4"), 2), X("X10"))),
                     rat(1, 12));
  });
  b.add("X24", 24, "X24 := 2^-3 3^-1 (X12^2 - X4 X10^2)", [&] {
    return sie_scale(sie_sub(sie_pow(X("X12"), 2),
                             sie_mul(X("X4"), sie_pow(X("X10"), 2))),
                     rat(1, 24));
  });
  b.add("X28", 28, "X28 := 2^-1 3^-1 (X4 X24 - X10 X18)", [&] {
    return sie_scale(sie_sub(sie_mul(X("X4"), X("X24")),
                             sie_mul(X("X10"), X("X18"))),
                     rat(1, 6));
  });
  b.add("X30", 30, "X30 := 2^-1 3^-1 (X6 X24 - X4 X10 X16)", [&] {
    return sie_scale(sie_sub(sie_mul(X("X6"), X("X24")),
                             sie_mul(sie_mul(X("X4"), X("X10")), X("X16"))),
                     rat(1, 6));
  });
  b.add("X36", 36, "X36 := 2^-1 3^-2 (X12 X24 - X10^2 X16)", [&] {
    return sie_scale(sie_sub(sie_mul(X("X12"), X("X24")),
                             sie_mul(sie_pow(X("X10"), 2), X("X16"))),
                     rat(1, 18));
  });
  b.add("X40", 40, "X40 := 2^-2 (X4 X36 - X10 X30)", [&] {
    return sie_scale(sie_sub(sie_mul(X("X4"), X("X36")),
                             sie_mul(X("X10"), X("X30"))),
                     rat(1, 4));
  });
  b.add("X42", 42, "X42 := 2^-2 3^-1 (X12 X30 - X4 X10 X28)", [&] {
    return sie_scale(sie_sub(sie_mul(X("X12"), X("X30")),
                             sie_mul(sie_mul(X("X4"), X("X10")), X("X28"))),
                     rat(1, 12));
  });
  b.add("X48", 48, "X48 := 2^-2 (X12 X36 - X24^2)", [&] {
    return sie_scale(sie_sub(sie_mul(X("X12"), X("X36")),
                             sie_pow(X("X24"), 2)),
                     rat(1, 4));
  });

  // the 23 generators of the weight-divisible-by-4 subring
  b.add("S4", 4, "S4 := X4", [&] { return X("X4"); });
  b.add("S12", 12, "S12 := X12", [&] { return X("X12"); });
  b.add("T12", 12, "T12 := Y12", [&] { return X("Y12"); });
  b.add("U12", 12, "U12 := X6^2", [&] { return sie_pow(X("X6"), 2); });
  b.add("S16", 16, "S16 := X10 X6", [&] { return sie_mul(X("X10"), X("X6")); });
  b.add("T16", 16, "T16 := X16", [&] { return X("X16"); });
  b.add("S20", 20, "S20 := X10^2", [&] { return sie_pow(X("X10"), 2); });
  b.add("S24", 24, "S24 := X24", [&] { return X("X24"); });
  b.add("T24", 24, "T24 := X6 X18", [&] { return sie_mul(X("X6"), X("X18")); });
  b.add("S28", 28, "S28 := X28", [&] { return X("X28"); });
  b.add("T28", 28, "T28 := X10 X18", [&] { return sie_mul(X("X10"), X("X18")); });
  b.add("S36", 36, "S36 := X36", [&] { return X("X36"); });
  b.add("T36", 36, "T36 := X18^2", [&] { return sie_pow(X("X18"), 2); });
  b.add("U36", 36, "U36 := X6 X30", [&] { return sie_mul(X("X6"), X("X30")); });
  b.add("S40", 40, "S40 := X40", [&] { return X("X40"); });
  b.add("T40", 40, "T40 := X10 X30", [&] { return sie_mul(X("X10"), X("X30")); });
  b.add("S48", 48, "S48 := X48", [&] { return X("X48"); });
  b.add("T48", 48, "T48 := X18 X30", [&] { return sie_mul(X("X18"), X("X30")); });
  b.add("S52", 52, "S52 := X42 X10", [&] { return sie_mul(X("X42"), X("X10")); });
  b.add("S60", 60, "S60 := X30^2", [&] { return sie_pow(X("X30"), 2); });
  b.add("T60", 60, "T60 := X18 X42", [&] { return sie_mul(X("X18"), X("X42")); });
  b.add("S72", 72, "S72 := X30 X42", [&] { return sie_mul(X("X30"), X("X42")); });
  b.add("S84", 84, "S84 := X42^2", [&] { return sie_pow(X("X42"), 2); });

  return std::move(b).take();
}

namespace {

SiegelSeries cached_or_siegel(SeriesCache* cache, const std::string& key, int M,
                              const std::function<SiegelSeries()>& compute) {
  if (cache) {
    if (auto hit = cache->load_siegel(key, M)) return *hit;
  }
  SiegelSeries s = compute();
  if (cache) cache->store(key, AnySeries(s));
  return s;
}

std::string first_difference(const SiegelSeries& a, const SiegelSeries& b) {
  for (const SiegelIndex& t :
       enumerate_siegel_indices(std::min(a.trunc(), b.trunc()))) {
    Rational va = a.at(t), vb = b.at(t);
    if (va != vb)
      return "first differs at " + t.str() + ": " + to_string(va) + " vs " +
             to_string(vb);
  }
  return "series agree";
}

}  // namespace

Report verify_restrictions(const GeneratorLedger& her, const IgusaLedger& sie,
                           SeriesCache* cache) {
  Report report;
  const int M = her.trunc();
  if (sie.trunc() != M)
    throw std::invalid_argument("verify_restrictions: truncation mismatch");
  auto rigor = [&](int k) { return M >= siegel_sturm_bound(k); };
  auto check = [&](const std::string& label, const std::string& her_name,
                   const SiegelSeries& target, int weight,
                   const std::string& note = {}) {
    SiegelSeries lhs = restrict_to_siegel(her.series(her_name));
    if (lhs.with_weight(std::nullopt) == target.with_weight(std::nullopt))
      report.pass(label, rigor(weight), note);
    else
      report.fail(label, first_difference(lhs, target) +
                             (note.empty() ? "" : " (" + note + ")"));
  };

  // the five base facts
  check("restriction:H4|=X4", "H4", sie.series("X4"), 4);
  check("restriction:E6|=X6", "E6", sie.series("X6"), 6);
  {
    SiegelSeries h8r = restrict_to_siegel(her.series("H8"));
    if (h8r.is_zero())
      report.pass("restriction:H8|=0", rigor(8));
    else
      report.fail("restriction:H8|=0", "nonzero restriction");
  }
  check("restriction:F10|=6X10", "F10",
        sie_scale(sie.series("X10"), Rational(6)), 10);
  check("restriction:H12|=X12", "H12", sie.series("X12"), 12);

  // published normalization of the cusp restrictions
  for (const char* name : {"X10", "X12"}) {
    Rational a = sie.series(name).at({1, 1, 1});
    if (a == 1)
      report.pass(std::string("restriction:a_") + name + "(1,1,1)=1");
    else
      report.fail(std::string("restriction:a_") + name + "(1,1,1)=1",
                  "value " + to_string(a));
  }

  // H_{k1}| = S_{k1}; the k1 = 32 slot has no generator (the source names
  // no weight-32 form), recorded as an explicit skip
  for (int k : {4, 12, 16, 20, 24, 28, 32, 36, 40, 48, 52, 60, 72, 84}) {
    std::string hname = "H" + std::to_string(k);
    std::string sname = "S" + std::to_string(k);
    std::string label = "restriction:" + hname + "|=" + sname;
    if (k == 32) {
      report.skip(label, "no weight-32 generator exists in the ring ledger");
      continue;
    }
    check(label, hname, sie.series(sname), k);
  }
  for (int k : {12, 16, 24, 28, 36, 40, 48, 60})
    check("restriction:I" + std::to_string(k) + "|=T" + std::to_string(k),
          "I" + std::to_string(k), sie.series("T" + std::to_string(k)), k);
  for (int k : {12, 36})
    check("restriction:J" + std::to_string(k) + "|=U" + std::to_string(k),
          "J" + std::to_string(k), sie.series("U" + std::to_string(k)), k);

  // the K/L display; K26's printed target X6 X16 has impossible weight and
  // is read as X10 X16
  auto product = [&](const std::string& a, const std::string& b) {
    return cached_or_siegel(cache, "X:" + a + "*" + b, M, [&] {
      return sie_mul(sie.series(a), sie.series(b));
    });
  };
  check("restriction:K14|=X4X10", "K14", product("X4", "X10"), 14);
  check("restriction:K18|=X18", "K18", sie.series("X18"), 18);
  check("restriction:K22|=X10X12", "K22", product("X10", "X12"), 22);
  check("restriction:K26|=X10X16", "K26", product("X10", "X16"), 26,
        "printed target X6 X16 has weight 22; X10 X16 is the weight-correct reading");
  check("restriction:K30|=X30", "K30", sie.series("X30"), 30);
  {
    SiegelSeries x10cube = cached_or_siegel(cache, "X:X10^3", M, [&] {
      return sie_mul(sie.series("S20"), sie.series("X10"));
    });
    check("restriction:L30|=X10^3", "L30", x10cube, 30);
  }
  check("restriction:K34|=X10X24", "K34", product("X10", "X24"), 34);
  check("restriction:K42|=X42", "K42", sie.series("X42"), 42);

  return report;
}

}  // namespace hermring
