#pragma once

/**
 * @file series.hpp
 * @brief Truncated substitution series and the group kernel.
 *
 * A Series is an element of the quotient group J^m(k): a formal series
 *
 *   f(x) = x + a_1 x^2 + a_2 x^3 + ... + a_m x^(m+1)   (mod x^(m+2))
 *
 * with exactly m known coefficients over a coefficient ring k. The group
 * operation is substitution, f o g = f(g(x)). Composition is triangular:
 * coefficient i of f o g depends only on coefficients 1..i of f and g, so
 * arithmetic at finite precision is exact.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jsub/ring.hpp"

namespace jsub {

class Series {
 public:
  /// coeffs lists a_1..a_m. Values must belong to the ring.
  Series(Ring ring, std::vector<Value> coeffs);

  /// The group identity x, with m zero coefficients.
  static Series identity(const Ring& ring, std::size_t precision);

  const Ring& ring() const { return ring_; }
  std::size_t precision() const { return coeffs_.size(); }
  /// a_i, 1-based, 1 <= i <= precision().
  const Value& coeff(std::size_t i) const { return coeffs_.at(i - 1); }
  const std::vector<Value>& coeffs() const { return coeffs_; }
  bool is_identity() const;

  friend bool operator==(const Series& a, const Series& b) {
    if (!(a.ring_ == b.ring_) || a.coeffs_.size() != b.coeffs_.size())
      return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!a.ring_.eq(a.coeffs_[i], b.coeffs_[i])) return false;
    return true;
  }

 private:
  Ring ring_;
  std::vector<Value> coeffs_;
};

/// Two independent composition kernels; they must agree coefficient-exactly
/// and are cross-checked by the bench harness before any timing run.
enum class ComposeKernel { Horner, PowerTable };

/// f(g(x)) at precision min(prec f, prec g). Rings must match.
Series compose(const Series& f, const Series& g,
               ComposeKernel kernel = ComposeKernel::Horner);

/// The unique g with f(g(x)) = x = g(f(x)) at the precision of f. Each
/// unknown coefficient enters linearly with unit multiplier, so inversion
/// needs no division and works over every coefficient ring.
Series invert(const Series& f);

struct Depth {
  std::size_t n;   // largest n with a_1 = ... = a_n = 0
  bool saturated;  // all known coefficients vanish; deeper membership is
                   // not certified beyond the precision
};
Depth depth(const Series& f);

/// Projection J^m -> J^n, n <= m: keep the first n coefficients.
Series project(const Series& f, std::size_t n);

/// True iff every nonzero coefficient index is divisible by s (the grid
/// subgroup of series in x^s).
bool in_grid_subgroup(const Series& f, unsigned s);

/// Coefficient-wise reduction of an integer series modulo p^j.
Series reduce_coefficients(const Series& f, const Int& p, unsigned j);

/// Series literals: polynomial form "x + 2*x^2 - x^4" or list form
/// "[2, 0, -1]" (a_1..a_m in order). The leading term must be exactly x.
Series parse_series(std::string_view text, const Ring& ring,
                    std::size_t precision);

/// Number of entries of a list-form literal, nullopt for polynomial form.
/// Lets callers infer the precision a bracketed literal names.
std::optional<std::size_t> list_literal_length(std::string_view text);

/// Canonical polynomial rendering with only nonzero terms ("x" alone for
/// the identity).
std::string format_series(const Series& f);
/// "[a_1, a_2, ...]" rendering.
std::string format_series_list(const Series& f);

}  // namespace jsub
