#include "hermring/series.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hermring/errors.hpp"
#include "hermring/stats.hpp"

namespace hermring {

namespace {

std::optional<int> add_weight(const std::optional<int>& a,
                              const std::optional<int>& b) {
  if (a && b) return *a + *b;
  return std::nullopt;
}

std::optional<int> same_weight(const std::optional<int>& a,
                               const std::optional<int>& b) {
  if (a && b && *a == *b) return a;
  return std::nullopt;
}

template <typename Map>
void prune_zeros(Map& m) {
  for (auto it = m.begin(); it != m.end();)
    it = (it->second == 0) ? m.erase(it) : std::next(it);
}

// Slot table per truncation: index -> dense position, for convolution
// accumulation. Built once per truncation and shared.
struct SlotTable {
  std::vector<HermitianIndex> indices;
  std::unordered_map<std::uint64_t, int> slot;
};

std::uint64_t pack(const HermitianIndex& h) {
  auto u = [](int v) { return static_cast<std::uint64_t>(static_cast<std::uint16_t>(v)); };
  return u(h.m) << 48 | u(h.r) << 32 | u(h.s) << 16 | u(h.n);
}

const SlotTable& slot_table(int M) {
  static std::mutex mu;
  static std::map<int, SlotTable> tables;
  std::scoped_lock lock(mu);
  auto it = tables.find(M);
  if (it == tables.end()) {
    SlotTable t;
    t.indices = enumerate_indices(M);
    t.slot.reserve(t.indices.size() * 2);
    for (int i = 0; i < static_cast<int>(t.indices.size()); ++i)
      t.slot.emplace(pack(t.indices[i]), i);
    it = tables.emplace(M, std::move(t)).first;
  }
  return it->second;
}

}  // namespace

// ---------------------------------------------------------------- Hermitian

HermitianSeries::HermitianSeries(int trunc, Coeffs coeffs,
                                 std::optional<int> weight)
    : trunc_(trunc), weight_(weight), coeffs_(std::move(coeffs)) {
  for (const auto& [h, c] : coeffs_) {
    if (!h.psd() || h.m > trunc_ || h.n > trunc_)
      throw std::domain_error("HermitianSeries: index " + h.str() +
                              " outside truncation " + std::to_string(trunc_));
  }
  prune_zeros(coeffs_);
}

HermitianSeries HermitianSeries::unit(int trunc, std::optional<int> weight) {
  Coeffs c;
  c[{0, 0, 0, 0}] = 1;
  return HermitianSeries(trunc, std::move(c), weight);
}

Rational HermitianSeries::at(const HermitianIndex& h) const {
  auto it = coeffs_.find(h);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool HermitianSeries::is_integral() const {
  for (const auto& [h, c] : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

HermitianSeries HermitianSeries::with_weight(std::optional<int> w) const {
  HermitianSeries out = *this;
  out.weight_ = w;
  return out;
}

HermitianSeries her_add(const HermitianSeries& a, const HermitianSeries& b) {
  int M = std::min(a.trunc(), b.trunc());
  HermitianSeries::Coeffs out;
  for (const auto& [h, c] : a.coeffs())
    if (h.m <= M && h.n <= M) out[h] = c;
  for (const auto& [h, c] : b.coeffs())
    if (h.m <= M && h.n <= M) out[h] += c;
  return HermitianSeries(M, std::move(out), same_weight(a.weight(), b.weight()));
}

HermitianSeries her_sub(const HermitianSeries& a, const HermitianSeries& b) {
  return her_add(a, her_scale(b, Rational(-1)));
}

HermitianSeries her_scale(const HermitianSeries& a, const Rational& c) {
  HermitianSeries::Coeffs out;
  if (c != 0)
    for (const auto& [h, v] : a.coeffs()) out[h] = v * c;
  return HermitianSeries(a.trunc(), std::move(out), a.weight());
}

HermitianSeries her_mul(const HermitianSeries& a, const HermitianSeries& b) {
  stats::count_convolution();
  int M = std::min(a.trunc(), b.trunc());
  const SlotTable& table = slot_table(M);
  std::vector<Rational> acc(table.indices.size());
  std::vector<bool> touched(table.indices.size(), false);

  const auto& small = a.coeffs().size() <= b.coeffs().size() ? a : b;
  const auto& large = a.coeffs().size() <= b.coeffs().size() ? b : a;
  Rational tmp;
  for (const auto& [h1, c1] : small.coeffs()) {
    if (h1.m > M || h1.n > M) continue;
    for (const auto& [h2, c2] : large.coeffs()) {
      int m = h1.m + h2.m, n = h1.n + h2.n;
      if (m > M || n > M) continue;
      HermitianIndex h{m, h1.r + h2.r, h1.s + h2.s, n};
      auto it = table.slot.find(pack(h));
      if (it == table.slot.end()) continue;  // not psd
      tmp = c1 * c2;
      acc[it->second] += tmp;
      touched[it->second] = true;
    }
  }
  HermitianSeries::Coeffs out;
  auto hint = out.end();
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (touched[i] && acc[i] != 0)
      hint = out.emplace_hint(hint, table.indices[i], std::move(acc[i]));
  return HermitianSeries(M, std::move(out), add_weight(a.weight(), b.weight()));
}

HermitianSeries her_pow(const HermitianSeries& a, unsigned e) {
  HermitianSeries out = HermitianSeries::unit(a.trunc());
  for (unsigned i = 0; i < e; ++i) out = her_mul(out, a);
  return out.with_weight(a.weight() ? std::optional<int>(*a.weight() * static_cast<int>(e))
                                    : std::nullopt);
}

std::optional<long> her_vp(const HermitianSeries& f, unsigned long p) {
  std::optional<long> best;
  for (const auto& [h, c] : f.coeffs()) {
    long v = ord_p(c, p);
    if (!best || v < *best) best = v;
  }
  return best;
}

// ------------------------------------------------------------------ Siegel

SiegelSeries::SiegelSeries(int trunc, Coeffs coeffs, std::optional<int> weight)
    : trunc_(trunc), weight_(weight), coeffs_(std::move(coeffs)) {
  for (const auto& [t, c] : coeffs_) {
    if (!t.psd() || t.m > trunc_ || t.n > trunc_)
      throw std::domain_error("SiegelSeries: index " + t.str() +
                              " outside truncation " + std::to_string(trunc_));
  }
  prune_zeros(coeffs_);
}

SiegelSeries SiegelSeries::unit(int trunc, std::optional<int> weight) {
  Coeffs c;
  c[{0, 0, 0}] = 1;
  return SiegelSeries(trunc, std::move(c), weight);
}

Rational SiegelSeries::at(const SiegelIndex& t) const {
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool SiegelSeries::is_integral() const {
  for (const auto& [t, c] : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

SiegelSeries SiegelSeries::with_weight(std::optional<int> w) const {
  SiegelSeries out = *this;
  out.weight_ = w;
  return out;
}

SiegelSeries sie_add(const SiegelSeries& a, const SiegelSeries& b) {
  int M = std::min(a.trunc(), b.trunc());
  SiegelSeries::Coeffs out;
  for (const auto& [t, c] : a.coeffs())
    if (t.m <= M && t.n <= M) out[t] = c;
  for (const auto& [t, c] : b.coeffs())
    if (t.m <= M && t.n <= M) out[t] += c;
  return SiegelSeries(M, std::move(out), same_weight(a.weight(), b.weight()));
}

SiegelSeries sie_sub(const SiegelSeries& a, const SiegelSeries& b) {
  return sie_add(a, sie_scale(b, Rational(-1)));
}

SiegelSeries sie_scale(const SiegelSeries& a, const Rational& c) {
  SiegelSeries::Coeffs out;
  if (c != 0)
    for (const auto& [t, v] : a.coeffs()) out[t] = v * c;
  return SiegelSeries(a.trunc(), std::move(out), a.weight());
}

SiegelSeries sie_mul(const SiegelSeries& a, const SiegelSeries& b) {
  stats::count_convolution();
  int M = std::min(a.trunc(), b.trunc());
  SiegelSeries::Coeffs out;
  Rational tmp;
  for (const auto& [t1, c1] : a.coeffs()) {
    if (t1.m > M || t1.n > M) continue;
    for (const auto& [t2, c2] : b.coeffs()) {
      SiegelIndex t = t1 + t2;
      if (t.m > M || t.n > M || t.four_det() < 0) continue;
      tmp = c1 * c2;
      out[t] += tmp;
    }
  }
  prune_zeros(out);
  return SiegelSeries(M, std::move(out), add_weight(a.weight(), b.weight()));
}

SiegelSeries sie_pow(const SiegelSeries& a, unsigned e) {
  SiegelSeries out = SiegelSeries::unit(a.trunc());
  for (unsigned i = 0; i < e; ++i) out = sie_mul(out, a);
  return out.with_weight(a.weight() ? std::optional<int>(*a.weight() * static_cast<int>(e))
                                    : std::nullopt);
}

// ---------------------------------------------------------------- elliptic

EllipticSeries::EllipticSeries(long trunc, Coeffs coeffs,
                               std::optional<int> weight)
    : trunc_(trunc), weight_(weight), coeffs_(std::move(coeffs)) {
  for (const auto& [n, c] : coeffs_) {
    if (n < 0 || n > trunc_)
      throw std::domain_error("EllipticSeries: exponent " + std::to_string(n) +
                              " outside truncation " + std::to_string(trunc_));
  }
  prune_zeros(coeffs_);
}

EllipticSeries EllipticSeries::unit(long trunc, std::optional<int> weight) {
  Coeffs c;
  c[0] = 1;
  return EllipticSeries(trunc, std::move(c), weight);
}

Rational EllipticSeries::at(long n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool EllipticSeries::is_integral() const {
  for (const auto& [n, c] : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

EllipticSeries EllipticSeries::with_weight(std::optional<int> w) const {
  EllipticSeries out = *this;
  out.weight_ = w;
  return out;
}

EllipticSeries ell_add(const EllipticSeries& a, const EllipticSeries& b) {
  long N = std::min(a.trunc(), b.trunc());
  EllipticSeries::Coeffs out;
  for (const auto& [n, c] : a.coeffs())
    if (n <= N) out[n] = c;
  for (const auto& [n, c] : b.coeffs())
    if (n <= N) out[n] += c;
  return EllipticSeries(N, std::move(out), same_weight(a.weight(), b.weight()));
}

EllipticSeries ell_sub(const EllipticSeries& a, const EllipticSeries& b) {
  return ell_add(a, ell_scale(b, Rational(-1)));
}

EllipticSeries ell_scale(const EllipticSeries& a, const Rational& c) {
  EllipticSeries::Coeffs out;
  if (c != 0)
    for (const auto& [n, v] : a.coeffs()) out[n] = v * c;
  return EllipticSeries(a.trunc(), std::move(out), a.weight());
}

EllipticSeries ell_mul(const EllipticSeries& a, const EllipticSeries& b) {
  stats::count_convolution();
  long N = std::min(a.trunc(), b.trunc());
  EllipticSeries::Coeffs out;
  Rational tmp;
  for (const auto& [n1, c1] : a.coeffs()) {
    if (n1 > N) continue;
    for (const auto& [n2, c2] : b.coeffs()) {
      if (n1 + n2 > N) break;  // map is ordered by exponent
      tmp = c1 * c2;
      out[n1 + n2] += tmp;
    }
  }
  prune_zeros(out);
  return EllipticSeries(N, std::move(out), add_weight(a.weight(), b.weight()));
}

EllipticSeries ell_pow(const EllipticSeries& a, unsigned e) {
  EllipticSeries out = EllipticSeries::unit(a.trunc());
  for (unsigned i = 0; i < e; ++i) out = ell_mul(out, a);
  return out.with_weight(a.weight() ? std::optional<int>(*a.weight() * static_cast<int>(e))
                                    : std::nullopt);
}

// --------------------------------------------------------------- reductions

namespace {

template <typename Series>
Series reduce_mod_impl(const Series& f, unsigned long p) {
  typename Series::Coeffs out;
  for (const auto& [k, c] : f.coeffs()) {
    if (mpz_divisible_ui_p(c.get_den().get_mpz_t(), p)) {
      std::ostringstream os;
      if constexpr (std::is_same_v<Series, EllipticSeries>)
        os << "reduce_mod: coefficient at q^" << k << " is not " << p
           << "-integral";
      else
        os << "reduce_mod: coefficient at " << k.str() << " is not " << p
           << "-integral";
      throw NotPIntegral(os.str());
    }
    unsigned long r = residue_mod(c, p);
    if (r != 0) out[k] = Rational(r);
  }
  return Series(f.trunc(), std::move(out), f.weight());
}

}  // namespace

HermitianSeries reduce_mod(const HermitianSeries& f, unsigned long p) {
  return reduce_mod_impl(f, p);
}
SiegelSeries reduce_mod(const SiegelSeries& f, unsigned long p) {
  return reduce_mod_impl(f, p);
}
EllipticSeries reduce_mod(const EllipticSeries& f, unsigned long p) {
  return reduce_mod_impl(f, p);
}

SiegelSeries restrict_to_siegel(const HermitianSeries& f) {
  SiegelSeries::Coeffs out;
  for (const auto& [h, c] : f.coeffs()) out[{h.m, h.s, h.n}] += c;
  prune_zeros(out);
  return SiegelSeries(f.trunc(), std::move(out), f.weight());
}

// ------------------------------------------------------------ serialization

namespace {

void write_header(std::ostringstream& os, const std::string& name,
                  const std::optional<int>& weight, long trunc,
                  const char* kind) {
  os << "# name=" << name << "\n";
  if (weight) os << "# weight=" << *weight << "\n";
  os << "# trunc=" << trunc << "\n";
  os << "# kind=" << kind << "\n";
}

}  // namespace

std::string serialize(const std::string& name, const HermitianSeries& f) {
  std::ostringstream os;
  write_header(os, name, f.weight(), f.trunc(), "hermitian");
  for (const auto& [h, c] : f.coeffs())
    os << h.m << " " << h.r << " " << h.s << " " << h.n << " "
       << c.get_num().get_str() << " " << c.get_den().get_str() << "\n";
  return os.str();
}

std::string serialize(const std::string& name, const SiegelSeries& f) {
  std::ostringstream os;
  write_header(os, name, f.weight(), f.trunc(), "siegel");
  for (const auto& [t, c] : f.coeffs())
    os << t.m << " " << t.r << " " << t.n << " " << c.get_num().get_str()
       << " " << c.get_den().get_str() << "\n";
  return os.str();
}

std::string serialize(const std::string& name, const EllipticSeries& f) {
  std::ostringstream os;
  write_header(os, name, f.weight(), f.trunc(), "elliptic");
  for (const auto& [n, c] : f.coeffs())
    os << n << " " << c.get_num().get_str() << " " << c.get_den().get_str()
       << "\n";
  return os.str();
}

std::string serialize(const std::string& name, const AnySeries& f) {
  return std::visit([&](const auto& s) { return serialize(name, s); }, f);
}

const char* kind_of(const AnySeries& s) {
  if (std::holds_alternative<HermitianSeries>(s)) return "hermitian";
  if (std::holds_alternative<SiegelSeries>(s)) return "siegel";
  return "elliptic";
}

NamedSeries parse_series(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::string name, kind;
  std::optional<int> weight;
  std::optional<long> trunc;
  std::size_t lineno = 0;

  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("series parse: " + msg + " on line " +
                         std::to_string(lineno),
                     lineno);
  };

  HermitianSeries::Coeffs hc;
  SiegelSeries::Coeffs sc;
  EllipticSeries::Coeffs ec;

  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find('=');
      if (eq == std::string::npos) fail("malformed header");
      std::string key = line.substr(2, eq - 2);
      std::string value = line.substr(eq + 1);
      if (key == "name")
        name = value;
      else if (key == "weight")
        weight = std::stoi(value);
      else if (key == "trunc")
        trunc = std::stol(value);
      else if (key == "kind")
        kind = value;
      else
        fail("unknown header key '" + key + "'");
      continue;
    }
    if (!trunc || kind.empty()) fail("data before trunc/kind headers");
    std::istringstream ls(line);
    if (kind == "hermitian") {
      HermitianIndex h;
      std::string num, den;
      if (!(ls >> h.m >> h.r >> h.s >> h.n >> num >> den)) fail("bad data row");
      hc[h] = parse_rational(num + "/" + den);
    } else if (kind == "siegel") {
      SiegelIndex t;
      std::string num, den;
      if (!(ls >> t.m >> t.r >> t.n >> num >> den)) fail("bad data row");
      sc[t] = parse_rational(num + "/" + den);
    } else if (kind == "elliptic") {
      long n;
      std::string num, den;
      if (!(ls >> n >> num >> den)) fail("bad data row");
      ec[n] = parse_rational(num + "/" + den);
    } else {
      fail("unknown kind '" + kind + "'");
    }
    std::string rest;
    if (ls >> rest) fail("trailing tokens");
  }
  if (!trunc || kind.empty()) fail("missing trunc/kind headers");

  if (kind == "hermitian")
    return {name, HermitianSeries(static_cast<int>(*trunc), std::move(hc), weight)};
  if (kind == "siegel")
    return {name, SiegelSeries(static_cast<int>(*trunc), std::move(sc), weight)};
  return {name, EllipticSeries(*trunc, std::move(ec), weight)};
}

}  // namespace hermring
