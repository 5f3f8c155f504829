#include "jsub/group.hpp"

namespace jsub {

Series power(const Series& f, long k) {
  std::size_t m = f.precision();
  if (k == 0) return Series::identity(f.ring(), m);
  Series base = k < 0 ? invert(f) : f;
  // -(k+1)+1 avoids overflow at LONG_MIN
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1
                          : static_cast<unsigned long>(k);
  Series acc = Series::identity(f.ring(), m);
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

Series commutator(const Series& f, const Series& g) {
  if (!(f.ring() == g.ring()))
    throw DomainError("commutator requires both operands over the same ring");
  Series gi = invert(g);
  Series fi = invert(f);
  return compose(compose(compose(gi, fi), g), f);
}

Series conjugate(const Series& f, const Series& g) {
  if (!(f.ring() == g.ring()))
    throw DomainError("conjugate requires both operands over the same ring");
  return compose(compose(g, f), invert(g));
}

Value abelian_coefficient(const Series& f, std::size_t n) {
  if (f.precision() < n + 1)
    throw DomainError("abelian_coefficient needs precision at least n+1");
  if (depth(f).n < n)
    throw DomainError("abelian_coefficient needs a series of depth at least n");
  return f.coeff(n + 1);
}

CommutatorWitness commutator_level_witness(const Ring& ring, std::size_t n,
                                           const Value& c,
                                           std::size_t precision) {
  if (precision < 2 * n + 3)
    throw DomainError("commutator witness needs precision at least 2n+3");
  std::vector<Value> fc(precision, ring.zero());
  std::vector<Value> gc(precision, ring.zero());
  fc[n] = ring.one();  // f = x + x^(n+2)
  gc[n + 1] = c;       // g = x + c*x^(n+3)
  Series f(ring, std::move(fc));
  Series g(ring, std::move(gc));
  Series com = commutator(f, g);
  return CommutatorWitness{std::move(f), std::move(g), std::move(com)};
}

std::vector<Series> enumerate_quotient(const Ring& modular_ring, std::size_t m,
                                       unsigned long bound) {
  if (modular_ring.kind() != Ring::Kind::Modular)
    throw DomainError("enumeration needs a Z/q coefficient ring");
  const Int& q = modular_ring.modulus();
  Int total;
  mpz_pow_ui(total.get_mpz_t(), q.get_mpz_t(), m);
  if (total > Int(bound))
    throw DomainError("quotient size " + total.get_str() +
                      " exceeds the enumeration bound " + std::to_string(bound));

  std::vector<Series> out;
  out.reserve(total.get_ui());
  std::vector<Int> digits(m, 0);
  while (true) {
    std::vector<Value> coeffs;
    coeffs.reserve(m);
    for (const Int& d : digits) coeffs.emplace_back(d);
    out.emplace_back(modular_ring, std::move(coeffs));
    // lexicographic odometer, last coefficient fastest
    std::size_t i = m;
    while (i > 0) {
      digits[i - 1] += 1;
      if (digits[i - 1] < q) break;
      digits[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

std::optional<unsigned long> element_order(const Series& f,
                                           unsigned long max_iter) {
  const Ring& ring = f.ring();
  if (ring.kind() != Ring::Kind::Modular && ring.kind() != Ring::Kind::PadicFixed)
    throw DomainError("element orders are computed in finite quotients (Z/q)");
  if (max_iter == 0) {
    Int cap;
    mpz_pow_ui(cap.get_mpz_t(), ring.modulus().get_mpz_t(),
               2 * f.precision());
    max_iter = cap.fits_ulong_p() ? cap.get_ui() : ~0ul;
  }
  Series acc = f;
  for (unsigned long k = 1; k <= max_iter; ++k) {
    if (acc.is_identity()) return k;
    acc = compose(acc, f);
  }
  return std::nullopt;
}

QuotientWitness separating_quotient(const Series& f, const Int& p) {
  if (f.ring().kind() != Ring::Kind::Integers)
    throw DomainError("separating quotients are built from integer series");
  if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
    throw DomainError("separating quotient needs a prime p");
  Depth d = depth(f);
  if (d.saturated)
    throw DomainError("the identity has no separating quotient");
  std::size_t n = d.n + 1;  // first nonzero coefficient index
  const Int& a = std::get<Int>(f.coeff(n));
  unsigned long v = 0;
  Int rest = a;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  unsigned j = static_cast<unsigned>(v) + 1;
  Series image = reduce_coefficients(project(f, n), p, j);
  return QuotientWitness{p, j, n, std::move(image)};
}

std::string format_witness(const QuotientWitness& w) {
  return "p=" + w.p.get_str() + " j=" + std::to_string(w.j) +
         " m=" + std::to_string(w.m) + " image=" + format_series(w.image);
}

}  // namespace jsub
