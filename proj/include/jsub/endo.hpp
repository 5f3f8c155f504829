#pragma once

/**
 * @file endo.hpp
 * @brief Dilations and compressions of the substitution group.
 *
 * The dilation with parameter t maps a_i to t^i * a_i. The compression
 * with coefficient s sends f = x(1 + x h(x)) to
 *
 *   x * (1 + s^2 x^s h(s^2 x^s))^(1/s),
 *
 * a group homomorphism into the grid subgroup of series in x^s. Its s-th
 * root is expanded through the integer series u(z) = (1 + s^2 z)^(1/s),
 * whose coefficients are integers divisible by s; that integrality is what
 * makes the compression total over arbitrary coefficient rings, so the
 * table construction treats any division failure as an internal defect
 * rather than an input error.
 */

#include <cstddef>
#include <vector>

#include "jsub/series.hpp"

namespace jsub {

/// Integer coefficients beta_1..beta_N of u(z) = (1+s^2 z)^(1/s).
struct BinomialRootTable {
  unsigned s;
  std::vector<Int> betas;
};

/// Builds the table by solving (1 + sum beta_i z^i)^s = 1 + s^2 z degree
/// by degree with exact integer division by s, then cross-checks every
/// entry against the rational generalized-binomial expansion. Disagreement
/// or non-integrality throws std::logic_error.
BinomialRootTable binomial_root_table(unsigned s, std::size_t length);

/// Independent oracle: beta_k = C(1/s, k) * s^(2k) over exact rationals.
std::vector<Rat> binomial_root_reference(unsigned s, std::size_t length);

/// a_i -> t^i a_i, precision preserved.
Series dilate(const Series& f, const Value& t);

/// The compression homomorphism. Input precision m gives output precision
/// s*m + s - 1; the image lies in the grid subgroup of step s.
Series compress(const Series& f, unsigned s);

/// f(x^s)^(1/s) by rational binomial expansion; requires a coefficient
/// ring containing the rationals. Same output precision as compress, and
/// compress(f, s) = theta_only(dilate(f, s^2), s) exactly.
Series theta_only(const Series& f, unsigned s);

/// Inverse of the compression on the grid subgroup: requires f there and
/// s invertible in the ring. Output precision floor(m/s).
Series decompress(const Series& f, unsigned s);

struct EndomorphismDescriptor {
  enum class Kind { Dilation, Compression, ThetaOnly, Decompression };
  Kind kind;
  unsigned s = 0;  // Compression / ThetaOnly / Decompression
  Value t;         // Dilation parameter
};

/// Compression whose image lies inside the depth-n neighborhood of the
/// identity: step s = n+1 works because the grid subgroup of step s sits
/// inside depth s-1.
EndomorphismDescriptor compression_into(std::size_t n);

Series apply(const EndomorphismDescriptor& endo, const Series& f);

}  // namespace jsub
