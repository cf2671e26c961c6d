#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace hermring {

// One monomial coeff * H12^h12 * H8^h8 * S^s * U^u * V^v of an integrality
// certificate polynomial, with V normalized to 6*H12 + H4^2*H8 - F10 = 72*V.
struct SuvTerm {
  std::int64_t coeff;
  int h12, h8, s, u, v;
};

struct SuvPolynomial {
  const char* name;
  int weight;
  const SuvTerm* terms;
  std::size_t size;
  // Non-null when the published display needed correction; states the defect.
  const char* note;
};

// The certificate polynomials: H20 plus the published list
// (K22 .. H52; K38 is definitional).
std::span<const SuvPolynomial> suv_polynomials();

// Verbatim transcriptions (V-sign normalized) of the three displays that
// disagree with the constructions: H24, K26, L30. Kept so the disagreement
// itself is machine-checkable.
std::span<const SuvPolynomial> suv_printed_displays();

const SuvPolynomial* find_suv_polynomial(std::string_view name);

}  // namespace hermring
