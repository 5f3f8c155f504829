#include "jsub/endo.hpp"

#include <stdexcept>

#include "jsub/detail/poly.hpp"

namespace jsub {

namespace {

using detail::Poly;
using detail::poly_mul_trunc;
using detail::poly_pow_trunc;
using detail::zero_poly;

// Integer truncated polynomials for the root table.
using IPoly = std::vector<Int>;

IPoly ipoly_mul_trunc(const IPoly& a, const IPoly& b, std::size_t max_degree) {
  IPoly out(max_degree + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= max_degree; ++i) {
    if (a[i] == 0) continue;
    std::size_t jmax = std::min(b.size() - 1, max_degree - i);
    for (std::size_t j = 0; j <= jmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IPoly ipoly_pow_trunc(const IPoly& a, unsigned long e, std::size_t max_degree) {
  IPoly acc(max_degree + 1, 0);
  acc[0] = 1;
  IPoly base = a;
  while (e > 0) {
    if (e & 1) acc = ipoly_mul_trunc(acc, base, max_degree);
    e >>= 1;
    if (e > 0) base = ipoly_mul_trunc(base, base, max_degree);
  }
  return acc;
}

// Grid assembly shared by compress and theta_only: given the unit-part
// coefficients H_1..H_m (in y = x^s), produce the series
// x * (1 + sum H_j x^(s j)) at precision s*m + s - 1.
Series grid_series(const Ring& ring, const Poly& h, std::size_t m, unsigned s) {
  std::size_t out_prec = s * m + s - 1;
  std::vector<Value> coeffs(out_prec, ring.zero());
  for (std::size_t j = 1; j <= m; ++j)
    if (!ring.is_zero(h[j])) coeffs[s * j - 1] = h[j];
  return Series(ring, std::move(coeffs));
}

}  // namespace

std::vector<Rat> binomial_root_reference(unsigned s, std::size_t length) {
  if (s == 0) throw DomainError("compression coefficient s must be positive");
  std::vector<Rat> out;
  out.reserve(length);
  Rat inv_s(1, s);
  inv_s.canonicalize();
  Rat binom(1);      // C(1/s, k)
  Rat scale(1);      // s^(2k)
  Rat s2(static_cast<unsigned long>(s) * s);
  for (std::size_t k = 1; k <= length; ++k) {
    binom *= (inv_s - Rat(static_cast<long>(k) - 1)) / Rat(static_cast<long>(k));
    scale *= s2;
    out.emplace_back(binom * scale);
  }
  return out;
}

BinomialRootTable binomial_root_table(unsigned s, std::size_t length) {
  if (s == 0) throw DomainError("compression coefficient s must be positive");
  BinomialRootTable table{s, {}};
  table.betas.reserve(length);

  // Solve (1 + sum beta_i z^i)^s = 1 + s^2 z degree by degree; the new
  // coefficient enters as s*beta_n, so each step divides exactly by s.
  IPoly u(length + 1, 0);
  u[0] = 1;
  Int s_int(s);
  for (std::size_t n = 1; n <= length; ++n) {
    IPoly un = ipoly_pow_trunc(u, s, n);
    Int target = (n == 1) ? Int(s_int * s_int) : Int(0);
    Int num = target - un[n];
    Int beta;
    if (mpz_divisible_p(num.get_mpz_t(), s_int.get_mpz_t()) == 0)
      throw std::logic_error(
          "binomial root recurrence produced a non-divisible step; "
          "integrality of (1+s^2 z)^(1/s) is violated");
    mpz_divexact(beta.get_mpz_t(), num.get_mpz_t(), s_int.get_mpz_t());
    u[n] = beta;
    table.betas.push_back(beta);
  }

  // Independent rational expansion must reproduce the table exactly.
  std::vector<Rat> oracle = binomial_root_reference(s, length);
  for (std::size_t k = 0; k < length; ++k) {
    if (oracle[k].get_den() != 1 || oracle[k].get_num() != table.betas[k])
      throw std::logic_error("binomial root table disagrees with the rational "
                             "binomial expansion at index " + std::to_string(k + 1));
    if (mpz_divisible_p(table.betas[k].get_mpz_t(), s_int.get_mpz_t()) == 0)
      throw std::logic_error("binomial root coefficient not divisible by s at "
                             "index " + std::to_string(k + 1));
  }
  return table;
}

Series dilate(const Series& f, const Value& t) {
  const Ring& ring = f.ring();
  std::vector<Value> coeffs;
  coeffs.reserve(f.precision());
  Value tp = ring.one();
  for (std::size_t i = 1; i <= f.precision(); ++i) {
    tp = ring.mul(tp, t);  // t^i
    coeffs.push_back(ring.mul(f.coeff(i), tp));
  }
  return Series(ring, std::move(coeffs));
}

Series compress(const Series& f, unsigned s) {
  if (s == 0) throw DomainError("compression coefficient s must be positive");
  const Ring& ring = f.ring();
  std::size_t m = f.precision();
  if (m == 0) return Series::identity(ring, s - 1);

  // X = x^s h(s^2 x^s) as a polynomial in y = x^s: coefficient i is
  // a_i (s^2)^(i-1).
  BinomialRootTable table = binomial_root_table(s, m);
  Value s2 = ring.from_int(static_cast<long>(s) * s);
  Poly arg = zero_poly(ring, m);
  Value p = ring.one();
  for (std::size_t i = 1; i <= m; ++i) {
    arg[i] = ring.mul(f.coeff(i), p);
    p = ring.mul(p, s2);
  }

  // u(X) - 1 = sum beta_k X^k, truncated at y-degree m.
  Poly h = zero_poly(ring, m);
  Poly xk = arg;
  for (std::size_t k = 1; k <= m; ++k) {
    Value beta = ring.from_int(table.betas[k - 1]);
    if (!ring.is_zero(beta))
      for (std::size_t d = k; d <= m; ++d)
        if (!ring.is_zero(xk[d])) h[d] = ring.add(h[d], ring.mul(beta, xk[d]));
    if (k < m) xk = poly_mul_trunc(ring, xk, arg, m);
  }
  return grid_series(ring, h, m, s);
}

Series theta_only(const Series& f, unsigned s) {
  if (s == 0) throw DomainError("compression coefficient s must be positive");
  const Ring& ring = f.ring();
  if (!ring.contains_rationals())
    throw DomainError("theta_s needs a coefficient ring containing the "
                      "rationals; use the compression over " + ring.selector());
  std::size_t m = f.precision();
  if (m == 0) return Series::identity(ring, s - 1);

  // f(x^s) = x^s (1 + w(y)) with w = sum a_i y^i; take (1 + w)^(1/s) by
  // the generalized binomial series.
  Poly w = zero_poly(ring, m);
  for (std::size_t i = 1; i <= m; ++i) w[i] = f.coeff(i);

  Poly h = zero_poly(ring, m);
  Poly wk = w;
  Rat inv_s(1, s);
  inv_s.canonicalize();
  Rat binom(1);
  for (std::size_t k = 1; k <= m; ++k) {
    binom *= (inv_s - Rat(static_cast<long>(k) - 1)) / Rat(static_cast<long>(k));
    Value c = ring.from_rational(binom);
    if (!ring.is_zero(c))
      for (std::size_t d = k; d <= m; ++d)
        if (!ring.is_zero(wk[d])) h[d] = ring.add(h[d], ring.mul(c, wk[d]));
    if (k < m) wk = poly_mul_trunc(ring, wk, w, m);
  }
  return grid_series(ring, h, m, s);
}

Series decompress(const Series& f, unsigned s) {
  if (s == 0) throw DomainError("compression coefficient s must be positive");
  const Ring& ring = f.ring();
  if (!in_grid_subgroup(f, s))
    throw DomainError("decompression needs a series in the grid subgroup of "
                      "step " + std::to_string(s));
  auto s_inv = ring.try_invert(ring.from_int(static_cast<long>(s)));
  if (!s_inv)
    throw DomainError("decompression needs s = " + std::to_string(s) +
                      " invertible in " + ring.selector());
  std::size_t m = f.precision() / s;

  // (f(x^(1/s)))^s = x (1 + sum h_j x^j)^s with h_j = a_(s j).
  Poly base = zero_poly(ring, m);
  base[0] = ring.one();
  for (std::size_t j = 1; j <= m; ++j) base[j] = f.coeff(s * j);
  Poly powed = poly_pow_trunc(ring, base, s, m);

  std::vector<Value> coeffs(powed.begin() + 1, powed.end());
  Series hat(ring, std::move(coeffs));
  Value t = ring.mul(*s_inv, *s_inv);  // dilation by s^(-2)
  return dilate(hat, t);
}

EndomorphismDescriptor compression_into(std::size_t n) {
  EndomorphismDescriptor endo;
  endo.kind = EndomorphismDescriptor::Kind::Compression;
  endo.s = static_cast<unsigned>(n) + 1;
  return endo;
}

Series apply(const EndomorphismDescriptor& endo, const Series& f) {
  switch (endo.kind) {
    case EndomorphismDescriptor::Kind::Dilation: return dilate(f, endo.t);
    case EndomorphismDescriptor::Kind::Compression: return compress(f, endo.s);
    case EndomorphismDescriptor::Kind::ThetaOnly: return theta_only(f, endo.s);
    case EndomorphismDescriptor::Kind::Decompression:
      return decompress(f, endo.s);
  }
  throw std::logic_error("unreachable endomorphism kind");
}

}  // namespace jsub
