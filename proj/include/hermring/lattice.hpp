#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hermring {

// Index H = (m, r, s, n) for a half-integral Hermitian matrix over Z[i]:
// diagonal m, n and off-diagonal (r + s i)/2. Positive semidefinite iff
// m, n >= 0 and 4mn - r^2 - s^2 >= 0.
struct HermitianIndex {
  int m = 0, r = 0, s = 0, n = 0;

  long four_det() const {
    return 4L * m * n - static_cast<long>(r) * r - static_cast<long>(s) * s;
  }
  bool is_zero() const { return m == 0 && r == 0 && s == 0 && n == 0; }
  bool psd() const { return m >= 0 && n >= 0 && four_det() >= 0; }
  // 0 for H = 0, 1 for singular nonzero, 2 otherwise.
  int rank() const { return is_zero() ? 0 : (four_det() == 0 ? 1 : 2); }

  friend HermitianIndex operator+(const HermitianIndex& a, const HermitianIndex& b) {
    return {a.m + b.m, a.r + b.r, a.s + b.s, a.n + b.n};
  }
  friend bool operator==(const HermitianIndex&, const HermitianIndex&) = default;
  // Deterministic total order: (m+n, m, r, s) ascending. Fixed once; this is
  // also the serialization order.
  friend std::strong_ordering operator<=>(const HermitianIndex& a,
                                          const HermitianIndex& b) {
    if (auto c = (a.m + a.n) <=> (b.m + b.n); c != 0) return c;
    if (auto c = a.m <=> b.m; c != 0) return c;
    if (auto c = a.r <=> b.r; c != 0) return c;
    return a.s <=> b.s;
  }
  std::string str() const;
};

// Index T = (m, r, n) for a half-integral symmetric matrix; psd iff
// m, n >= 0 and 4mn - r^2 >= 0.
struct SiegelIndex {
  int m = 0, r = 0, n = 0;

  long four_det() const { return 4L * m * n - static_cast<long>(r) * r; }
  bool is_zero() const { return m == 0 && r == 0 && n == 0; }
  bool psd() const { return m >= 0 && n >= 0 && four_det() >= 0; }
  int rank() const { return is_zero() ? 0 : (four_det() == 0 ? 1 : 2); }

  friend SiegelIndex operator+(const SiegelIndex& a, const SiegelIndex& b) {
    return {a.m + b.m, a.r + b.r, a.n + b.n};
  }
  friend bool operator==(const SiegelIndex&, const SiegelIndex&) = default;
  friend std::strong_ordering operator<=>(const SiegelIndex& a,
                                          const SiegelIndex& b) {
    if (auto c = (a.m + a.n) <=> (b.m + b.n); c != 0) return c;
    if (auto c = a.m <=> b.m; c != 0) return c;
    return a.r <=> b.r;
  }
  std::string str() const;
};

// Content eps(H) = gcd(m, r, s, n); equals the largest l with H/l still
// half-integral. Throws std::domain_error for H = 0.
int content(const HermitianIndex& h);

// All psd indices with m, n <= M, in the deterministic order.
std::vector<HermitianIndex> enumerate_indices(int M);
std::vector<SiegelIndex> enumerate_siegel_indices(int M);

// Orbit of H under the group generated by (r,s) -> (-r,s), (r,s) -> (s,-r)
// and (m,r,s,n) -> (n,r,-s,m); size divides 16. Sorted.
std::vector<HermitianIndex> symmetry_orbit(const HermitianIndex& h);

}  // namespace hermring
