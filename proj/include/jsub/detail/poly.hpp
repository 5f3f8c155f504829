#pragma once

// Internal dense truncated polynomial helpers shared by the series kernel
// and the endomorphism layer. poly[d] is the coefficient of degree d.

#include <cstddef>
#include <vector>

#include "jsub/ring.hpp"

namespace jsub::detail {

using Poly = std::vector<Value>;

inline Poly zero_poly(const Ring& ring, std::size_t max_degree) {
  return Poly(max_degree + 1, ring.zero());
}

// Schoolbook product collecting only degrees <= max_degree. Zero operands
// are skipped; series polynomials are frequently sparse.
inline Poly poly_mul_trunc(const Ring& ring, const Poly& a, const Poly& b,
                           std::size_t max_degree) {
  Poly out = zero_poly(ring, max_degree);
  for (std::size_t i = 0; i < a.size() && i <= max_degree; ++i) {
    if (ring.is_zero(a[i])) continue;
    std::size_t jmax = std::min(b.size() - 1, max_degree - i);
    for (std::size_t j = 0; j <= jmax; ++j) {
      if (ring.is_zero(b[j])) continue;
      out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
    }
  }
  return out;
}

// a^e truncated, by binary powering.
inline Poly poly_pow_trunc(const Ring& ring, const Poly& a, unsigned long e,
                           std::size_t max_degree) {
  Poly acc = zero_poly(ring, max_degree);
  acc[0] = ring.one();
  Poly base = a;
  while (e > 0) {
    if (e & 1) acc = poly_mul_trunc(ring, acc, base, max_degree);
    e >>= 1;
    if (e > 0) base = poly_mul_trunc(ring, base, base, max_degree);
  }
  return acc;
}

}  // namespace jsub::detail
