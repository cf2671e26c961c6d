#include "hermring/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace hermring {

namespace fs = std::filesystem;

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

constexpr const char* kIndexName = "index.txt";

std::string sanitize(const std::string& name) {
  std::string out;
  bool replaced = false;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
      out += c;
    } else {
      out += '_';
      replaced = true;
    }
  }
  if (replaced) out += "_" + fnv1a_hex(name);
  return out;
}

std::string key_of(const std::string& name, long trunc) {
  return name + "\t" + std::to_string(trunc);
}

struct IndexRow {
  std::string kind, weight, digest, file;
};

std::map<std::string, IndexRow> read_index(const fs::path& dir) {
  std::map<std::string, IndexRow> rows;
  std::ifstream in(dir / kIndexName);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string name, trunc, kind, weight, digest, file;
    if (std::getline(ls, name, '\t') && std::getline(ls, trunc, '\t') &&
        std::getline(ls, kind, '\t') && std::getline(ls, weight, '\t') &&
        std::getline(ls, digest, '\t') && std::getline(ls, file))
      rows[name + "\t" + trunc] = {kind, weight, digest, file};
  }
  return rows;
}

void write_atomic(const fs::path& target, const std::string& content) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
  }
  fs::rename(tmp, target);
}

void write_index(const fs::path& dir, const std::map<std::string, IndexRow>& rows) {
  std::ostringstream os;
  for (const auto& [key, row] : rows)
    os << key << "\t" << row.kind << "\t" << row.weight << "\t" << row.digest
       << "\t" << row.file << "\n";
  write_atomic(dir / kIndexName, os.str());
}

}  // namespace

SeriesCache::SeriesCache(fs::path dir) : dir_(std::move(dir)) {
  fs::create_directories(dir_);
}

std::optional<SeriesCache> SeriesCache::resolve(const std::string& flag_value) {
  if (!flag_value.empty()) return SeriesCache(flag_value);
  if (const char* env = std::getenv("HERMRING_CACHE"); env && *env)
    return SeriesCache(env);
  return std::nullopt;
}

void SeriesCache::store(const std::string& name, const AnySeries& value) {
  long trunc = std::visit([](const auto& s) { return static_cast<long>(s.trunc()); }, value);
  std::string text = serialize(name, value);
  std::string file = sanitize(name) + "__t" + std::to_string(trunc) + ".series";
  write_atomic(dir_ / file, text);

  auto rows = read_index(dir_);
  auto weight = std::visit([](const auto& s) { return s.weight(); }, value);
  rows[key_of(name, trunc)] = {kind_of(value),
                               weight ? std::to_string(*weight) : "-",
                               fnv1a_hex(text), file};
  write_index(dir_, rows);
}

std::optional<AnySeries> SeriesCache::load_any(const std::string& name,
                                               long trunc,
                                               const char* kind) const {
  auto rows = read_index(dir_);
  auto it = rows.find(key_of(name, trunc));
  if (it == rows.end() || it->second.kind != kind) return std::nullopt;
  std::ifstream in(dir_ / it->second.file, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (fnv1a_hex(text) != it->second.digest) return std::nullopt;  // stale/corrupt
  NamedSeries parsed = parse_series(text);
  if (parsed.name != name || std::string(kind_of(parsed.value)) != kind)
    return std::nullopt;
  long got = std::visit([](const auto& s) { return static_cast<long>(s.trunc()); },
                        parsed.value);
  if (got != trunc) return std::nullopt;
  return parsed.value;
}

std::optional<HermitianSeries> SeriesCache::load_hermitian(
    const std::string& name, int trunc) const {
  auto any = load_any(name, trunc, "hermitian");
  if (!any) return std::nullopt;
  return std::get<HermitianSeries>(*any);
}

std::optional<SiegelSeries> SeriesCache::load_siegel(const std::string& name,
                                                     int trunc) const {
  auto any = load_any(name, trunc, "siegel");
  if (!any) return std::nullopt;
  return std::get<SiegelSeries>(*any);
}

std::optional<EllipticSeries> SeriesCache::load_elliptic(
    const std::string& name, long trunc) const {
  auto any = load_any(name, trunc, "elliptic");
  if (!any) return std::nullopt;
  return std::get<EllipticSeries>(*any);
}

std::vector<SeriesCache::Entry> SeriesCache::list() const {
  std::vector<Entry> out;
  for (const auto& [key, row] : read_index(dir_)) {
    auto tab = key.find('\t');
    Entry e;
    e.name = key.substr(0, tab);
    e.trunc = std::stol(key.substr(tab + 1));
    e.kind = row.kind;
    e.weight = row.weight;
    e.digest = row.digest;
    e.file = row.file;
    out.push_back(std::move(e));
  }
  return out;
}

void SeriesCache::clear() {
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const auto& p = entry.path();
    if (p.extension() == ".series" || p.filename() == kIndexName ||
        p.filename() == "ledger_manifest.txt")
      fs::remove(p);
  }
}

}  // namespace hermring
