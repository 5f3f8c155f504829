#pragma once

/**
 * @file group.hpp
 * @brief Group-theoretic layer over the substitution kernel: powers,
 * commutators, the abelianization coefficient map, finite quotient
 * enumeration and residual-finiteness witnesses.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jsub/series.hpp"

namespace jsub {

/// Finite quotient J^m(Z/p^j) separating a series from the identity.
struct QuotientWitness {
  Int p;
  unsigned j;
  std::size_t m;
  Series image;  // reduced series, nonidentity at precision m
};

/// k-fold composition by binary exponentiation; negative k composes the
/// inverse.
Series power(const Series& f, long k);

/// Group commutator, oriented so that the leading graded term of
/// [x + a x^(n+1), x + b x^(m+1)] is +(m-n)ab at level n+m.
Series commutator(const Series& f, const Series& g);

/// g o f o g^-1.
Series conjugate(const Series& f, const Series& g);

/// a_(n+1) of a series of depth >= n: the additive character that
/// identifies the graded quotient at level n with the coefficient ring.
Value abelian_coefficient(const Series& f, std::size_t n);

struct CommutatorWitness {
  Series f, g, com;
};

/// A commutator of depth-n elements realizing a prescribed coefficient c
/// at the first reachable level 2n+3. Needs precision >= 2n+3.
CommutatorWitness commutator_level_witness(const Ring& ring, std::size_t n,
                                           const Value& c,
                                           std::size_t precision);

/// All q^m elements of J^m(Z/q) in lexicographic coefficient order.
/// Refuses when q^m exceeds the enumeration bound.
std::vector<Series> enumerate_quotient(const Ring& modular_ring, std::size_t m,
                                       unsigned long bound = 1000000);

/// Least k >= 1 with f^k = identity, or nullopt past max_iter.
/// max_iter = 0 picks q^(2m) for a series over Z/q.
std::optional<unsigned long> element_order(const Series& f,
                                           unsigned long max_iter = 0);

/// For a nonidentity integer series and a prime p: the quotient
/// J^n(Z/p^j) in which f stays nonidentity, with n the first nonzero
/// coefficient index and j one more than its p-adic valuation.
QuotientWitness separating_quotient(const Series& f, const Int& p);

std::string format_witness(const QuotientWitness& w);

}  // namespace jsub
