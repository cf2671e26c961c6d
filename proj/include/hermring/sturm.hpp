#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hermring/report.hpp"
#include "hermring/series.hpp"

namespace hermring {

class GeneratorLedger;

// floor(k/8): vanishing box for Hermitian forms (weights divisible by 4 at
// any prime; even weights at p >= 5).
long hermitian_sturm_bound(int k);
// floor(k/10): the degree-2 Siegel bound, any prime.
long siegel_sturm_bound(int k);

enum class SturmTheorem {
  HermitianAnyPrime,   // 4 | k, any p
  HermitianLargePrime, // even k, p >= 5
  Siegel,              // any p
  AdvisoryOnly,        // no covering statement; scan reported anyway
};
const char* to_string(SturmTheorem t);

struct HermitianCongruenceVerdict {
  SturmTheorem theorem;
  int weight = 0;
  unsigned long prime = 0;
  long bound = 0;
  bool pass = false;
  std::optional<HermitianIndex> witness;  // first scanned index != 0 mod p
  // reduction of every stored coefficient; a PASS scan with a failing
  // extension would contradict the theorem and means a bug
  bool empirical_pass = false;
  std::optional<HermitianIndex> empirical_witness;
  std::string certificate() const;
};

struct SiegelCongruenceVerdict {
  SturmTheorem theorem;
  int weight = 0;
  unsigned long prime = 0;
  long bound = 0;
  bool pass = false;
  std::optional<SiegelIndex> witness;
  bool empirical_pass = false;
  std::optional<SiegelIndex> empirical_witness;
  std::string certificate() const;
};

// Scans all indices with m, n <= floor(k/8); needs F.trunc >= bound and a
// p-integral F. PASS certifies F == 0 mod p under the applicable theorem.
HermitianCongruenceVerdict check_congruence_hermitian(const HermitianSeries& f,
                                                      int k, unsigned long p);

struct VanishingVerdict {
  long bound = 0;
  bool pass = false;
  std::optional<HermitianIndex> witness;
};

// Exact-vanishing certificate over Q: coefficients zero for m, n <= [k/8]
// force F = 0.
VanishingVerdict check_vanishing_hermitian(const HermitianSeries& f, int k);

SiegelCongruenceVerdict check_congruence_siegel(const SiegelSeries& f, int k,
                                                unsigned long p);

// Randomized falsifier for the Sturm statements: draws `count` integral
// combinations of weight-k ledger monomials whose coefficients vanish mod p
// on the scan box (kernel of the low-index matrix mod p, lifted by
// p * random combination), then demands every stored coefficient vanish
// mod p. Any violation is a build-breaking inconsistency, reported as FAIL.
Report sturm_falsifier(const GeneratorLedger& ledger, int k, unsigned long p,
                       int count, std::uint64_t seed);

}  // namespace hermring
