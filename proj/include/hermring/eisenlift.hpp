#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermring/fixtures.hpp"
#include "hermring/series.hpp"

namespace hermring {

// Hermitian Eisenstein series E_k of even weight k >= 4 at truncation M,
// from the closed coefficient formula: a(0) = 1,
//   rank 1:  -(2k/B_k) sigma_{k-1}(eps(H)),
//   rank 2:  (4k(k-1)/(B_k B_{k-1,chi})) sum_{d|eps} d^{k-1} G_K(k-2, 4detH/d^2).
// Throws std::invalid_argument for odd or small k.
HermitianSeries hermitian_eisenstein(int k, int M);

// theta^2: coefficient of q^n is r_2(n), the number of (a,b) in Z^2 with
// a^2 + b^2 = n. Weight 1.
EllipticSeries theta_sq(long N);

// f_2 = sum over odd n of sigma_1(n) q^n, the weight-2 companion generator
// of the level-4 graded ring. (Only odd exponents appear; together with
// theta^2 it reproduces the published h_13/h_15/h_17 tables.)
EllipticSeries f2(long N);

struct PlusFormRecipe {
  std::string name;
  int weight;
  std::vector<fixtures::PlusRecipeTerm> terms;
};

PlusFormRecipe recipe_from_fixture(const fixtures::PlusFormFixture& fx);

// sum coeff * (theta^2)^(theta_exp/2) * f2^(f2_exp); every term must carry
// weight theta_exp/2 + 2*f2_exp equal to the recipe weight, else
// WeightMismatch.
EllipticSeries recipe_expand(const PlusFormRecipe& recipe, long N);

// f|U(l) = sum a(ln) q^n, exact to floor(trunc/l).
EllipticSeries op_U(const EllipticSeries& f, long l);
// f|V(l) = sum a(n) q^{ln}; every emitted exponent is exact, so the result
// is emitted at truncation l*trunc.
EllipticSeries op_V(const EllipticSeries& f, long l);
// f|T_chi = sum chi_{-4}(n) a(n) q^n.
EllipticSeries op_Tchi(const EllipticSeries& f);

// floor(k/12 * [Gamma_1 : Gamma_0(level)]), index = level * prod_{p|level} (1+1/p).
long sturm_bound_elliptic(int k, long level);

struct PlusSpaceVerdict {
  bool pass = false;
  long bound = 0;                 // b_k used for the scan
  std::optional<long> witness;    // first n <= bound with nonzero obstruction
};

// Kohnen plus-space certificate: g = f + f|T_chi - f|U(2)V(2) must vanish
// up to the Sturm bound of M_k(Gamma_0(level)). Throws NeedsMoreTerms when
// f.trunc is below the bound.
PlusSpaceVerdict plus_space_check(const EllipticSeries& f, int k, long level);

// Maass lift of a plus form h of weight k-1 with a_h(0) = 0:
//   a(H) = sum_{d | eps(H)} d^{k-1} a_h(4detH/d^2) / (1 + |chi(4detH/d^2)|).
// Needs h.trunc >= 4M^2; throws NeedsMoreTerms otherwise, and
// std::invalid_argument when a_h(0) != 0.
HermitianSeries maass_lift(const EllipticSeries& h, int k, int M);

// Default elliptic truncation so lifts and plus-space checks at Hermitian
// truncation M are exact: max(4M^2, b_k at level 32).
long default_elliptic_trunc(int weight, int M);

}  // namespace hermring
