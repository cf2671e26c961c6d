#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hermring/series.hpp"

namespace hermring {

// Disk cache of serialized series, keyed by (name, trunc). Writes are
// atomic (temp file + rename); an index file maps keys to files and content
// digests, and loads verify the digest. Commands work without a cache; one
// is attached via --cache-dir or HERMRING_CACHE.
class SeriesCache {
 public:
  explicit SeriesCache(std::filesystem::path dir);

  // Resolves flag > environment (HERMRING_CACHE) > none.
  static std::optional<SeriesCache> resolve(const std::string& flag_value);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<HermitianSeries> load_hermitian(const std::string& name,
                                                int trunc) const;
  std::optional<SiegelSeries> load_siegel(const std::string& name,
                                          int trunc) const;
  std::optional<EllipticSeries> load_elliptic(const std::string& name,
                                              long trunc) const;
  void store(const std::string& name, const AnySeries& value);

  struct Entry {
    std::string name;
    std::string kind;
    std::string weight;  // "-" when absent
    long trunc = 0;
    std::string digest;
    std::string file;
  };
  std::vector<Entry> list() const;
  void clear();

 private:
  std::optional<AnySeries> load_any(const std::string& name, long trunc,
                                    const char* kind) const;
  std::filesystem::path dir_;
};

// FNV-1a 64-bit, hex; the content digest used by the cache index and the
// ledger manifest.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace hermring
