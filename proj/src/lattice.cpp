#include "hermring/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hermring {

std::string HermitianIndex::str() const {
  return "(" + std::to_string(m) + "," + std::to_string(r) + "," +
         std::to_string(s) + "," + std::to_string(n) + ")";
}

std::string SiegelIndex::str() const {
  return "(" + std::to_string(m) + "," + std::to_string(r) + "," +
         std::to_string(n) + ")";
}

int content(const HermitianIndex& h) {
  if (h.is_zero()) throw std::domain_error("content: undefined for H = 0");
  int g = std::gcd(std::gcd(std::abs(h.m), std::abs(h.r)),
                   std::gcd(std::abs(h.s), std::abs(h.n)));
  return g;
}

namespace {

int isqrt_floor(long v) {
  if (v < 0) return -1;
  int r = static_cast<int>(std::sqrt(static_cast<double>(v)));
  while (static_cast<long>(r + 1) * (r + 1) <= v) ++r;
  while (static_cast<long>(r) * r > v) --r;
  return r;
}

}  // namespace

std::vector<HermitianIndex> enumerate_indices(int M) {
  std::vector<HermitianIndex> out;
  for (int m = 0; m <= M; ++m)
    for (int n = 0; n <= M; ++n) {
      long cap = 4L * m * n;
      int rmax = isqrt_floor(cap);
      for (int r = -rmax; r <= rmax; ++r) {
        int smax = isqrt_floor(cap - static_cast<long>(r) * r);
        for (int s = -smax; s <= smax; ++s) out.push_back({m, r, s, n});
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SiegelIndex> enumerate_siegel_indices(int M) {
  std::vector<SiegelIndex> out;
  for (int m = 0; m <= M; ++m)
    for (int n = 0; n <= M; ++n) {
      int rmax = isqrt_floor(4L * m * n);
      for (int r = -rmax; r <= rmax; ++r) out.push_back({m, r, n});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HermitianIndex> symmetry_orbit(const HermitianIndex& h) {
  std::set<HermitianIndex> seen{h};
  std::vector<HermitianIndex> queue{h};
  while (!queue.empty()) {
    HermitianIndex x = queue.back();
    queue.pop_back();
    HermitianIndex gens[3] = {
        {x.m, -x.r, x.s, x.n},   // transpose-type reflection
        {x.m, x.s, -x.r, x.n},   // unit i acting on the off-diagonal
        {x.n, x.r, -x.s, x.m},   // swap of the diagonal
    };
    for (const auto& g : gens)
      if (seen.insert(g).second) queue.push_back(g);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace hermring
