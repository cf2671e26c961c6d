#pragma once

#include <vector>

#include "hermring/rational.hpp"

namespace hermring {

// Kronecker character mod 4: +1 at 1 mod 4, -1 at 3 mod 4, 0 at even n.
// Defined 0 for n <= 0; all call sites pass n >= 0.
int chi_m4(long n);

// m-th Bernoulli number, B1 = -1/2 convention. Memoized.
const Rational& bernoulli(unsigned m);

// Generalized Bernoulli number attached to chi_{-4} (conductor 4),
// via B_{m,chi} = f^{m-1} sum_{a=1}^{f} chi(a) B_m(a/f).
Rational bernoulli_chi(unsigned m);

// Bernoulli polynomial B_m(x).
Rational bernoulli_poly(unsigned m, const Rational& x);

std::vector<unsigned long> divisors(unsigned long n);

// sum_{0<d|n} d^k
Integer sigma(unsigned k, unsigned long n);

// G_K(m, N) of the Eisenstein coefficient formula:
//   (sigma_{m,chi}(N) - sigma*_{m,chi}(N)) / (1 + |chi_{-4}(N)|).
// The division is proved exact; inexactness throws InternalError.
Integer g_k(unsigned m, unsigned long N);

}  // namespace hermring
