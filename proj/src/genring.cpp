#include "hermring/genring.hpp"

#include <sstream>

#include "hermring/eisenlift.hpp"
#include "hermring/errors.hpp"
#include "hermring/fixtures.hpp"
#include "hermring/sturm.hpp"

namespace hermring {

namespace {

std::optional<HermitianIndex> first_non_integral(const HermitianSeries& f) {
  for (const auto& [h, c] : f.coeffs())
    if (!is_integer(c)) return h;
  return std::nullopt;
}

}  // namespace

const LedgerEntry& GeneratorLedger::entry(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end())
    throw std::invalid_argument("ledger: unknown form '" + name + "'");
  return it->second;
}

void GeneratorLedger::define(const std::string& name, HermitianSeries series,
                             std::optional<int> weight, std::string formula,
                             bool integral_required, bool enforce_integrality) {
  if (entries_.count(name))
    throw std::invalid_argument("ledger: duplicate form '" + name + "'");
  if (weight) series = series.with_weight(weight);
  if (integral_required && enforce_integrality) {
    if (auto bad = first_non_integral(series))
      throw LedgerError("ledger: " + name + " has non-integer coefficient " +
                        to_string(series.at(*bad)) + " at " + bad->str());
  }
  order_.push_back(name);
  entries_.emplace(name, LedgerEntry{std::move(series), weight,
                                     std::move(formula), integral_required});
}

const std::vector<std::string>& GeneratorLedger::theorem1_names() {
  static const std::vector<std::string> names = {
      "H4",  "H8",  "H12", "I12", "J12", "H16", "I16", "H20",
      "H24", "I24", "H28", "I28", "H36", "I36", "J36", "H40",
      "I40", "H48", "I48", "H52", "H60", "I60", "H72", "H84"};
  return names;
}

const std::vector<std::string>& GeneratorLedger::auxiliary_names() {
  static const std::vector<std::string> names = {
      "K14", "K18", "K22", "K26", "K30", "L30", "K34", "K38", "K42"};
  return names;
}

namespace {

class Builder {
 public:
  Builder(int M, SeriesCache* cache, bool enforce)
      : M_(M), cache_(cache), enforce_(enforce), ledger_(M) {}

  GeneratorLedger take() && { return std::move(ledger_); }

  const HermitianSeries& get(const std::string& name) {
    return ledger_.series(name);
  }

  void add(const std::string& name, std::optional<int> weight,
           const std::string& formula, bool integral_required,
           const std::function<HermitianSeries()>& compute) {
    if (cache_) {
      if (auto hit = cache_->load_hermitian(name, M_)) {
        ledger_.define(name, std::move(*hit), weight, formula,
                       integral_required, enforce_);
        return;
      }
    }
    HermitianSeries s = compute();
    if (weight) s = s.with_weight(weight);
    if (cache_) cache_->store(name, AnySeries(s));
    ledger_.define(name, std::move(s), weight, formula, integral_required,
                   enforce_);
  }

 private:
  int M_;
  SeriesCache* cache_;
  bool enforce_;
  GeneratorLedger ledger_;
};

Rational rat(long num, long den = 1) { return make_rational(num, den); }

}  // namespace

GeneratorLedger build_all(int M, SeriesCache* cache, bool enforce_integrality) {
  if (M < 1) throw std::invalid_argument("build_all: truncation M >= 1 required");
  Builder b(M, cache, enforce_integrality);
  auto her = [&](const std::string& n) -> const HermitianSeries& { return b.get(n); };

  for (int k : {4, 6, 8, 10, 12})
    b.add("E" + std::to_string(k), k, "Eisenstein series (closed coefficient formula)",
          k <= 6, [&, k] { return hermitian_eisenstein(k, M); });

  b.add("H4", 4, "H4 := E4", true, [&] { return her("E4"); });

  b.add("H8", 8, "H8 := -61/(2^10*3^2*5^2) (E8 - H4^2)", true, [&] {
    return her_scale(her_sub(her("E8"), her_pow(her("H4"), 2)),
                     rat(-61, 230400));
  });

  b.add("F10", 10, "F10 := -277/(2^9*3^3*5^2*7) (E10 - H4*E6)", true, [&] {
    return her_scale(her_sub(her("E10"), her_mul(her("H4"), her("E6"))),
                     rat(-277, 2419200));
  });

  b.add("H12", 12,
        "H12 := -(19*691*2659)/(2^11*3^7*5^3*7^2*73) (E12 - 441/691 H4^3 - "
        "250/691 E6^2 + 2^9*3^4*5^2*7^2*6791/(19*691*2659) H4*H8)",
        true, [&] {
          const Integer c(34910011);  // 19*691*2659
          Integer den;                // 2^11*3^7*5^3*7^2*73
          den = Integer(2048) * 2187 * 125 * 49 * 73;
          Rational inner = make_rational(Integer(50803200) * 6791, c);
          HermitianSeries combo = her_add(
              her_sub(her_sub(her("E12"),
                              her_scale(her_pow(her("H4"), 3), rat(441, 691))),
                      her_scale(her_pow(her("E6"), 2), rat(250, 691))),
              her_scale(her_mul(her("H4"), her("H8")), inner));
          return her_scale(combo, make_rational(-c, den));
        });

  // substitution series; their integrality is the computational content of
  // the congruence lemmas
  b.add("S", std::nullopt, "S := (H4 - 1)/48", true, [&] {
    return her_scale(her_sub(her("H4"), HermitianSeries::unit(M)), rat(1, 48));
  });
  b.add("U", std::nullopt, "U := (E6 - 1 - 72 S)/864", true, [&] {
    return her_scale(her_sub(her_sub(her("E6"), HermitianSeries::unit(M)),
                             her_scale(her("S"), rat(72))),
                     rat(1, 864));
  });
  b.add("V", std::nullopt, "V := (6 H12 + H4^2 H8 - F10)/72", true, [&] {
    return her_scale(
        her_sub(her_add(her_scale(her("H12"), rat(6)),
                        her_mul(her_pow(her("H4"), 2), her("H8"))),
                her("F10")),
        rat(1, 72));
  });

  b.add("I12", 12, "I12 := 2^-6 3^-3 (H4^3 - E6^2) + 2^4 3^2 H12", true, [&] {
    return her_add(her_scale(her_sub(her_pow(her("H4"), 3), her_pow(her("E6"), 2)),
                             rat(1, 1728)),
                   her_scale(her("H12"), rat(144)));
  });
  b.add("J12", 12, "J12 := E6^2", true, [&] { return her_pow(her("E6"), 2); });
  b.add("H16", 16, "H16 := 2^-1 3^-1 (E6 F10 - H4^2 H8)", true, [&] {
    return her_scale(her_sub(her_mul(her("E6"), her("F10")),
                             her_mul(her_pow(her("H4"), 2), her("H8"))),
                     rat(1, 6));
  });
  b.add("I16", 16, "I16 := 2^-2 3^-1 (H4 H12 - H16)", true, [&] {
    return her_scale(her_sub(her_mul(her("H4"), her("H12")), her("H16")),
                     rat(1, 12));
  });
  b.add("H20", 20, "H20 := 2^-2 3^-2 (F10^2 - H4 H8^2 - 2^2 3 H8 H12)", true, [&] {
    return her_scale(
        her_sub(her_sub(her_pow(her("F10"), 2),
                        her_mul(her("H4"), her_pow(her("H8"), 2))),
                her_scale(her_mul(her("H8"), her("H12")), rat(12))),
        rat(1, 36));
  });
  b.add("H24", 24, "H24 := 2^-3 3^-1 (H12^2 - H4 H20) - 2^-1 3^-1 H8 I16", true, [&] {
    return her_sub(her_scale(her_sub(her_pow(her("H12"), 2),
                                     her_mul(her("H4"), her("H20"))),
                             rat(1, 24)),
                   her_scale(her_mul(her("H8"), her("I16")), rat(1, 6)));
  });

  b.add("K14", 14, "K14 := 2^-1 3^-1 (H4 F10 - E6 H8)", true, [&] {
    return her_scale(her_sub(her_mul(her("H4"), her("F10")),
                             her_mul(her("E6"), her("H8"))),
                     rat(1, 6));
  });
  b.add("K18", 18, "K18 := 2^-2 3^-1 (E6 H12 - H4 K14)", true, [&] {
    return her_scale(her_sub(her_mul(her("E6"), her("H12")),
                             her_mul(her("H4"), her("K14"))),
                     rat(1, 12));
  });
  b.add("K22", 22, "K22 := 2^-1 3^-1 (F10 H12 - H8 K14)", true, [&] {
    return her_scale(her_sub(her_mul(her("F10"), her("H12")),
                             her_mul(her("H8"), her("K14"))),
                     rat(1, 6));
  });
  b.add("K26", 26, "K26 := 2^-1 3^-1 (F10 I16 - H8 K18)", true, [&] {
    return her_scale(her_sub(her_mul(her("F10"), her("I16")),
                             her_mul(her("H8"), her("K18"))),
                     rat(1, 6));
  });
  b.add("K30", 30, "K30 := 2^-1 3^-1 (E6 H24 - K14 I16) + 3^-1 H8 F10 I12", true, [&] {
    return her_add(her_scale(her_sub(her_mul(her("E6"), her("H24")),
                                     her_mul(her("K14"), her("I16"))),
                             rat(1, 6)),
                   her_scale(her_mul(her_mul(her("H8"), her("F10")), her("I12")),
                             rat(1, 3)));
  });
  b.add("L30", 30, "L30 := 2^-1 3^-1 (F10 H20 - H8 K22)", true, [&] {
    return her_scale(her_sub(her_mul(her("F10"), her("H20")),
                             her_mul(her("H8"), her("K22"))),
                     rat(1, 6));
  });
  b.add("K34", 34, "K34 := 2^-1 3^-1 (F10 H24 - H8 K26)", true, [&] {
    return her_scale(her_sub(her_mul(her("F10"), her("H24")),
                             her_mul(her("H8"), her("K26"))),
                     rat(1, 6));
  });

  b.add("I24", 24, "I24 := E6 K18", true,
        [&] { return her_mul(her("E6"), her("K18")); });
  b.add("I28", 28, "I28 := 2^-1 3^-1 (F10 K18 - H4 H8 I16)", true, [&] {
    return her_scale(her_sub(her_mul(her("F10"), her("K18")),
                             her_mul(her_mul(her("H4"), her("H8")), her("I16"))),
                     rat(1, 6));
  });
  // the paper prints H28 one line before I28; built here in dependency order
  b.add("H28", 28, "H28 := 2^-1 3^-1 (H4 H24 - I28) - 3^-1 H8^2 I12", true, [&] {
    return her_sub(her_scale(her_sub(her_mul(her("H4"), her("H24")), her("I28")),
                             rat(1, 6)),
                   her_scale(her_mul(her_pow(her("H8"), 2), her("I12")),
                             rat(1, 3)));
  });
  b.add("H36", 36,
        "H36 := 2^-1 3^-2 (H12 H24 - H20 I16) + 7 3^-2 H8 H28 + 3^-1 H8^3 H12",
        true, [&] {
          return her_add(
              her_add(her_scale(her_sub(her_mul(her("H12"), her("H24")),
                                        her_mul(her("H20"), her("I16"))),
                                rat(1, 18)),
                      her_scale(her_mul(her("H8"), her("H28")), rat(7, 9))),
              her_scale(her_mul(her_pow(her("H8"), 3), her("H12")), rat(1, 3)));
        });
  b.add("I36", 36, "I36 := K18^2", true, [&] { return her_pow(her("K18"), 2); });
  b.add("J36", 36, "J36 := E6 K30", true,
        [&] { return her_mul(her("E6"), her("K30")); });
  b.add("I40", 40, "I40 := 2^-1 3^-1 (F10 K30 - H4 H8 H28)", true, [&] {
    return her_scale(her_sub(her_mul(her("F10"), her("K30")),
                             her_mul(her_mul(her("H4"), her("H8")), her("H28"))),
                     rat(1, 6));
  });
  b.add("H40", 40,
        "H40 := 2^-2 (H4 H36 - 1/6 F10 K30) - 5 2^-3 3^-1 H4 H8 H28 + 2^-2 "
        "H8^3 H16 + 2^-1 H8 I12 H20",
        true, [&] {
          HermitianSeries part =
              her_scale(her_sub(her_mul(her("H4"), her("H36")),
                                her_scale(her_mul(her("F10"), her("K30")),
                                          rat(1, 6))),
                        rat(1, 4));
          part = her_sub(part, her_scale(her_mul(her_mul(her("H4"), her("H8")),
                                                 her("H28")),
                                         rat(5, 24)));
          part = her_add(part, her_scale(her_mul(her_pow(her("H8"), 3), her("H16")),
                                         rat(1, 4)));
          return her_add(part,
                         her_scale(her_mul(her_mul(her("H8"), her("I12")),
                                           her("H20")),
                                   rat(1, 2)));
        });
  b.add("H48", 48,
        "H48 := 2^-2 (H12 H36 - H24^2) - 2^-3 H8 (H12 H28 + 2 H40 + 4 F10^2 "
        "H12 H8 - 2 H20 H4 H8^2 - 2 H12 H4 H8^3 + 4 H20 H8 I12 + 2 H12 H8^2 "
        "I12 - H24 I16 - 2 H8^3 I16 + 2 I40)",
        true, [&] {
          const HermitianSeries& H8s = her("H8");
          HermitianSeries inner = her_mul(her("H12"), her("H28"));
          inner = her_add(inner, her_scale(her("H40"), rat(2)));
          inner = her_add(inner,
                          her_scale(her_mul(her_mul(her_pow(her("F10"), 2),
                                                    her("H12")),
                                            H8s),
                                    rat(4)));
          inner = her_sub(inner, her_scale(her_mul(her_mul(her("H20"), her("H4")),
                                                   her_pow(H8s, 2)),
                                           rat(2)));
          inner = her_sub(inner, her_scale(her_mul(her_mul(her("H12"), her("H4")),
                                                   her_pow(H8s, 3)),
                                           rat(2)));
          inner = her_add(inner, her_scale(her_mul(her_mul(her("H20"), H8s),
                                                   her("I12")),
                                           rat(4)));
          inner = her_add(inner, her_scale(her_mul(her_mul(her("H12"), her_pow(H8s, 2)),
                                                   her("I12")),
                                           rat(2)));
          inner = her_sub(inner, her_mul(her("H24"), her("I16")));
          inner = her_sub(inner, her_scale(her_mul(her_pow(H8s, 3), her("I16")),
                                           rat(2)));
          inner = her_add(inner, her_scale(her("I40"), rat(2)));
          return her_sub(her_scale(her_sub(her_mul(her("H12"), her("H36")),
                                           her_pow(her("H24"), 2)),
                                   rat(1, 4)),
                         her_scale(her_mul(H8s, inner), rat(1, 8)));
        });
  b.add("I48", 48, "I48 := K18 K30", true,
        [&] { return her_mul(her("K18"), her("K30")); });
  b.add("K42", 42,
        "K42 := 2^-2 3^-1 (H12 K30 - K14 H28) - 2^-1 H8 I12 K22", true, [&] {
          return her_sub(her_scale(her_sub(her_mul(her("H12"), her("K30")),
                                           her_mul(her("K14"), her("H28"))),
                                   rat(1, 12)),
                         her_scale(her_mul(her_mul(her("H8"), her("I12")),
                                           her("K22")),
                                   rat(1, 2)));
        });
  b.add("H52", 52,
        "H52 := 2^-1 3^-1 (F10 K42 - 2 F10^2 H12^2 H8 - 2^2 H12 H20 H8 I12 - "
        "5 F10 K22 H8 I12 - H28 H8 I16 - H8^3 I12 I16)",
        true, [&] {
          HermitianSeries inner = her_mul(her("F10"), her("K42"));
          inner = her_sub(inner,
                          her_scale(her_mul(her_mul(her_pow(her("F10"), 2),
                                                    her_pow(her("H12"), 2)),
                                            her("H8")),
                                    rat(2)));
          inner = her_sub(inner,
                          her_scale(her_mul(her_mul(her_mul(her("H12"), her("H20")),
                                                    her("H8")),
                                            her("I12")),
                                    rat(4)));
          inner = her_sub(inner,
                          her_scale(her_mul(her_mul(her_mul(her("F10"), her("K22")),
                                                    her("H8")),
                                            her("I12")),
                                    rat(5)));
          inner = her_sub(inner, her_mul(her_mul(her("H28"), her("H8")), her("I16")));
          inner = her_sub(inner, her_mul(her_mul(her_pow(her("H8"), 3), her("I12")),
                                         her("I16")));
          return her_scale(inner, rat(1, 6));
        });
  b.add("H60", 60, "H60 := K30^2", true, [&] { return her_pow(her("K30"), 2); });
  b.add("I60", 60, "I60 := K18 K42", true,
        [&] { return her_mul(her("K18"), her("K42")); });
  b.add("H72", 72, "H72 := K30 K42", true,
        [&] { return her_mul(her("K30"), her("K42")); });
  b.add("H84", 84, "H84 := K42^2", true, [&] { return her_pow(her("K42"), 2); });

  // K38 has no construction in the source; its certificate polynomial is
  // the definition.
  GeneratorLedger partial = std::move(b).take();
  const SuvPolynomial* k38 = find_suv_polynomial("K38");
  if (cache) {
    if (auto hit = cache->load_hermitian("K38", M)) {
      partial.define("K38", std::move(*hit), 38, "K38 := its certificate polynomial",
                     true, enforce_integrality);
      return partial;
    }
  }
  HermitianSeries k38s = evaluate_suv_polynomial(*k38, partial).with_weight(38);
  if (cache) cache->store("K38", AnySeries(k38s));
  partial.define("K38", std::move(k38s), 38, "K38 := its certificate polynomial",
                 true, enforce_integrality);
  return partial;
}

namespace {

// Powers of the five substitution variables, grown lazily; once a power is
// empty at truncation every higher power is too.
class PowerTable {
 public:
  PowerTable(const HermitianSeries& base) : base_(base) {
    powers_.push_back(HermitianSeries::unit(base.trunc()));
  }
  const HermitianSeries& operator[](int e) {
    while (static_cast<int>(powers_.size()) <= e) {
      if (powers_.back().is_zero() && powers_.size() > 1) {
        powers_.push_back(powers_.back());
        continue;
      }
      powers_.push_back(her_mul(powers_.back(), base_));
    }
    return powers_[e];
  }

 private:
  HermitianSeries base_;
  std::vector<HermitianSeries> powers_;
};

}  // namespace

HermitianSeries evaluate_suv_polynomial(const SuvPolynomial& poly,
                                        const GeneratorLedger& ledger) {
  PowerTable h12(ledger.series("H12")), h8(ledger.series("H8"));
  PowerTable s(ledger.series("S")), u(ledger.series("U")), v(ledger.series("V"));
  HermitianSeries acc(ledger.trunc());
  for (std::size_t i = 0; i < poly.size; ++i) {
    const SuvTerm& t = poly.terms[i];
    HermitianSeries term = HermitianSeries::unit(ledger.trunc());
    bool dead = false;
    for (PowerTable* table : {&h12, &h8, &s, &u, &v}) {
      int e = table == &h12 ? t.h12
              : table == &h8 ? t.h8
              : table == &s  ? t.s
              : table == &u  ? t.u
                             : t.v;
      if (e == 0) continue;
      const HermitianSeries& p = (*table)[e];
      if (p.is_zero()) {
        dead = true;
        break;
      }
      term = her_mul(term, p);
      if (term.is_zero()) {
        dead = true;
        break;
      }
    }
    if (dead) continue;
    acc = her_add(acc, her_scale(term, Rational(static_cast<long>(t.coeff))));
  }
  return acc;
}

CuspVerdict is_cusp_at_trunc(const HermitianSeries& f) {
  for (const auto& [h, c] : f.coeffs())
    if (h.rank() <= 1) return {false, h};
  return {true, std::nullopt};
}

Report verify_integrality(const GeneratorLedger& ledger) {
  Report report;
  for (const std::string& name : ledger.names()) {
    const LedgerEntry& e = ledger.entry(name);
    if (!e.integral_required) continue;
    if (auto bad = first_non_integral(e.series))
      report.fail("integrality:" + name,
                  "coefficient " + to_string(e.series.at(*bad)) + " at " +
                      bad->str());
    else
      report.pass("integrality:" + name);
  }
  report.info("note:theorem1",
              "ring-generation itself is not a finite computation; this suite "
              "certifies the constructive half (all generators exist, are "
              "integral and restrict correctly)");
  return report;
}

HermitianSeries lift_of_fixture(const std::string& name, int M,
                                SeriesCache* cache) {
  const auto* fx = fixtures::find_plus_form_fixture(name);
  if (!fx) throw std::invalid_argument("unknown plus form '" + name + "'");
  std::string key = "Lift_" + name;
  if (cache) {
    if (auto hit = cache->load_hermitian(key, M)) return *hit;
  }
  long N = default_elliptic_trunc(fx->weight, M);
  EllipticSeries h = recipe_expand(recipe_from_fixture(*fx), N);
  HermitianSeries lift = maass_lift(h, fx->weight + 1, M);
  if (cache) cache->store(key, AnySeries(lift));
  return lift;
}

namespace {

HermitianSeries cached_or(SeriesCache* cache, const std::string& key, int M,
                          const std::function<HermitianSeries()>& compute) {
  if (cache) {
    if (auto hit = cache->load_hermitian(key, M)) return *hit;
  }
  HermitianSeries s = compute();
  if (cache) cache->store(key, AnySeries(s));
  return s;
}

std::string first_difference(const HermitianSeries& a, const HermitianSeries& b) {
  for (const HermitianIndex& h : enumerate_indices(std::min(a.trunc(), b.trunc()))) {
    Rational va = a.at(h), vb = b.at(h);
    if (va != vb)
      return "first differs at " + h.str() + ": " + to_string(va) + " vs " +
             to_string(vb);
  }
  return "series agree";
}

}  // namespace

Report verify_identities(const GeneratorLedger& ledger, SeriesCache* cache) {
  Report report;
  const int M = ledger.trunc();
  auto rigor = [&](int k) { return M >= hermitian_sturm_bound(k); };
  auto check_equal = [&](const std::string& name, const HermitianSeries& lhs,
                         const HermitianSeries& rhs, int weight,
                         const std::string& note = {}) {
    if (lhs == rhs)
      report.pass(name, rigor(weight), note);
    else
      report.fail(name, first_difference(lhs, rhs) +
                            (note.empty() ? "" : " (" + note + ")"));
  };

  const HermitianSeries unit = HermitianSeries::unit(M);
  const HermitianSeries& S = ledger.series("S");
  const HermitianSeries& U = ledger.series("U");
  const HermitianSeries& V = ledger.series("V");

  // base-form substitution identities
  check_equal("identity:H4=1+48S", ledger.series("H4"),
              her_add(unit, her_scale(S, Rational(48))).with_weight(4), 4);
  check_equal("identity:E6=1+72S+864U", ledger.series("E6"),
              her_add(unit, her_add(her_scale(S, Rational(72)),
                                    her_scale(U, Rational(864))))
                  .with_weight(6),
              6);
  HermitianSeries h4sq_h8 = cached_or(cache, "H4^2*H8", M, [&] {
    return her_mul(her_pow(ledger.series("H4"), 2), ledger.series("H8"));
  });
  check_equal("identity:F10=6H12+H4^2H8-72V", ledger.series("F10"),
              her_sub(her_add(her_scale(ledger.series("H12"), Rational(6)),
                              h4sq_h8),
                      her_scale(V, Rational(72)))
                  .with_weight(10),
              10);

  // Lemma(mod 2^3*3^3) is stated with modulus 216 but proved with 72; V
  // integral certifies the proof's version, the stronger one is reported
  // without being asserted.
  {
    bool mod216 = true;
    HermitianIndex witness;
    for (const auto& [h, c] : V.coeffs()) {
      if (residue_mod(c, 3) != 0) {
        mod216 = false;
        witness = h;
        break;
      }
    }
    report.info("identity:6H12+H4^2H8-F10 mod 216",
                mod216 ? "holds at this truncation (stated modulus 2^3*3^3)"
                       : "fails at " + witness.str() +
                             "; the proof's modulus 2^3*3^2 is what V certifies");
  }

  // I12 expansion of the weight-12 lemma
  {
    HermitianSeries lhs = cached_or(cache, "2^-6*3^-3*(H4^3-E6^2)", M, [&] {
      return her_scale(her_sub(her_pow(ledger.series("H4"), 3),
                               her_pow(ledger.series("E6"), 2)),
                       make_rational(1, 1728));
    });
    HermitianSeries rhs = cached_or(cache, "S^2+64S^3-U-72SU-432U^2", M, [&] {
      HermitianSeries s2 = her_pow(S, 2);
      HermitianSeries out = her_add(s2, her_scale(her_mul(s2, S), Rational(64)));
      out = her_sub(out, U);
      out = her_sub(out, her_scale(her_mul(S, U), Rational(72)));
      return her_sub(out, her_scale(her_pow(U, 2), Rational(432)));
    });
    check_equal("identity:I12-expansion", lhs, rhs, 12);
  }

  // lift identities
  check_equal("identity:K14=Lift(h13)", ledger.series("K14"),
              lift_of_fixture("h13", M, cache), 14);
  {
    HermitianSeries h8sq = cached_or(cache, "H8^2", M, [&] {
      return her_pow(ledger.series("H8"), 2);
    });
    check_equal("identity:I16=Lift(h15)-56H8^2", ledger.series("I16"),
                her_sub(lift_of_fixture("h15", M, cache),
                        her_scale(h8sq, Rational(56)))
                    .with_weight(16),
                16);
  }
  {
    HermitianSeries h8f10 = cached_or(cache, "H8*F10", M, [&] {
      return her_mul(ledger.series("H8"), ledger.series("F10"));
    });
    check_equal("identity:K18=Lift(h17)+256H8F10", ledger.series("K18"),
                her_add(lift_of_fixture("h17", M, cache),
                        her_scale(h8f10, Rational(256)))
                    .with_weight(18),
                18);
  }

  // cusp combinations from the Eisenstein scaffolding
  {
    HermitianSeries c10 = cached_or(cache, "E10-E4*E6", M, [&] {
      return her_sub(ledger.series("E10"),
                     her_mul(ledger.series("E4"), ledger.series("E6")));
    });
    CuspVerdict v10 = is_cusp_at_trunc(c10);
    if (v10.pass)
      report.pass("cusp:E10-E4E6");
    else
      report.fail("cusp:E10-E4E6", "rank<=1 coefficient at " + v10.witness->str());

    HermitianSeries c12 = cached_or(cache, "E12-441/691E4^3-250/691E6^2", M, [&] {
      return her_sub(her_sub(ledger.series("E12"),
                             her_scale(her_pow(ledger.series("E4"), 3),
                                       make_rational(441, 691))),
                     her_scale(her_pow(ledger.series("E6"), 2),
                               make_rational(250, 691)));
    });
    CuspVerdict v12 = is_cusp_at_trunc(c12);
    if (v12.pass)
      report.pass("cusp:E12-combination");
    else
      report.fail("cusp:E12-combination",
                  "rank<=1 coefficient at " + v12.witness->str());
  }

  // certificate polynomials
  for (const SuvPolynomial& poly : suv_polynomials()) {
    std::string name = std::string("polynomial:") + poly.name;
    HermitianSeries value = cached_or(cache, "suvpoly_" + std::string(poly.name),
                                      M, [&] {
                                        return evaluate_suv_polynomial(poly, ledger);
                                      });
    std::string note = poly.note ? poly.note : "";
    if (std::string_view(poly.name) == "K38") {
      // definitional: nothing independent to compare against
      report.pass(name, false, "vacuous (polynomial defines K38); " + note);
      continue;
    }
    check_equal(name, ledger.series(poly.name).with_weight(std::nullopt),
                value.with_weight(std::nullopt), poly.weight, note);
  }

  // the three published displays that disagree with the constructions,
  // verified to equal their documented transforms
  for (const SuvPolynomial& printed : suv_printed_displays()) {
    std::string name = std::string("display-defect:") + printed.name;
    HermitianSeries display = cached_or(
        cache, "suvdisplay_" + std::string(printed.name), M,
        [&] { return evaluate_suv_polynomial(printed, ledger); });
    std::string_view which = printed.name;
    HermitianSeries expected(M);
    std::string relation;
    if (which == "H24") {
      HermitianSeries h12sq_s = cached_or(cache, "H12^2*S", M, [&] {
        return her_mul(her_pow(ledger.series("H12"), 2), S);
      });
      expected = her_sub(her_scale(ledger.series("H24"), Rational(-1)),
                         her_scale(h12sq_s, Rational(4)));
      relation = "display = -H24 - 4 H12^2 S";
    } else if (which == "K26") {
      expected = her_scale(ledger.series("K26"), Rational(-1));
      relation = "display = -K26";
    } else {  // L30
      HermitianSeries h8k22 = cached_or(cache, "H8*K22", M, [&] {
        return her_mul(ledger.series("H8"), ledger.series("K22"));
      });
      expected = her_add(ledger.series("L30"), h8k22);
      relation = "display = L30 + H8 K22";
    }
    if (display.with_weight(std::nullopt) == expected.with_weight(std::nullopt))
      report.pass(name, false, relation);
    else
      report.fail(name, "documented relation '" + relation + "' does not hold: " +
                            first_difference(display, expected));
  }

  return report;
}

Report verify_plus_space() {
  Report report;
  for (const auto& fx : fixtures::plus_form_fixtures()) {
    long bound = sturm_bound_elliptic(fx.weight, 32);
    if (bound == fx.bound)
      report.pass(std::string("plus-space:bound:") + fx.name, false,
                  "b = " + std::to_string(bound));
    else
      report.fail(std::string("plus-space:bound:") + fx.name,
                  "expected " + std::to_string(fx.bound) + ", index formula gives " +
                      std::to_string(bound));

    EllipticSeries regen = recipe_expand(recipe_from_fixture(fx), fx.bound);
    bool match = true;
    long bad = -1;
    for (long n = 0; n <= fx.bound; ++n) {
      if (regen.at(n) != Rational(fx.coeffs[n])) {
        match = false;
        bad = n;
        break;
      }
    }
    if (match)
      report.pass(std::string("plus-space:table:") + fx.name, false,
                  std::to_string(fx.bound + 1) + " coefficients");
    else
      report.fail(std::string("plus-space:table:") + fx.name,
                  "differs from the published table at q^" + std::to_string(bad) +
                      ": computed " + to_string(regen.at(bad)) + ", table " +
                      std::to_string(fx.coeffs[bad]));

    PlusSpaceVerdict verdict = plus_space_check(regen, fx.weight, 32);
    if (verdict.pass)
      report.pass(std::string("plus-space:membership:") + fx.name, false,
                  "b = " + std::to_string(verdict.bound));
    else
      report.fail(std::string("plus-space:membership:") + fx.name,
                  "obstruction at q^" + std::to_string(*verdict.witness));
  }
  return report;
}

}  // namespace hermring
