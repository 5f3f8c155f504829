#pragma once

/**
 * @file witt.hpp
 * @brief Truncated one-sided Witt algebra and the exponential bridge to
 * the substitution group.
 *
 * A VectorField is a truncated element sum c_n e_n with e_n the polynomial
 * field x^(n+1) d/dx, bracket [e_n, e_m] = (m-n) e_(n+m). Over rings
 * containing the rationals, exp_field is the time-1 flow of the field,
 * log_series its inverse, and kth_root the unique k-th root of a series
 * under composition.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jsub/series.hpp"

namespace jsub {

class VectorField {
 public:
  /// components lists c_1..c_M for v = sum c_n e_n.
  VectorField(Ring ring, std::vector<Value> components);

  static VectorField zero(const Ring& ring, std::size_t degree_bound);
  /// e_n at the given bound (n <= bound).
  static VectorField basis(const Ring& ring, std::size_t n,
                           std::size_t degree_bound);

  const Ring& ring() const { return ring_; }
  std::size_t degree_bound() const { return comps_.size(); }
  /// c_n, 1-based.
  const Value& component(std::size_t n) const { return comps_.at(n - 1); }
  const std::vector<Value>& components() const { return comps_; }
  bool is_zero() const;

  friend bool operator==(const VectorField& a, const VectorField& b) {
    if (!(a.ring_ == b.ring_) || a.comps_.size() != b.comps_.size())
      return false;
    for (std::size_t i = 0; i < a.comps_.size(); ++i)
      if (!a.ring_.eq(a.comps_[i], b.comps_[i])) return false;
    return true;
  }

 private:
  Ring ring_;
  std::vector<Value> comps_;
};

/// Bilinear extension of [e_n, e_m] = (m-n) e_(n+m); components beyond the
/// degree bound are dropped (truncation is not an ideal, so identities are
/// only exact when no dropped index contributes).
VectorField witt_bracket(const VectorField& v, const VectorField& w);

/// e_n -> (1/s) e_(s n), indices beyond the bound dropped. Needs a ring
/// containing the rationals.
VectorField theta_star(const VectorField& v, unsigned s);

VectorField add(const VectorField& v, const VectorField& w);
VectorField scale(const VectorField& v, const Value& c);

/// Time-1 flow of the field: sum_i v^i(x)/i!, a series of precision M.
Series exp_field(const VectorField& v);

/// Inverse of exp_field, solved degree by degree (each component enters
/// with unit multiplier).
VectorField log_series(const Series& f);

/// The unique h with h composed k times = f, over rings containing the
/// rationals. Solved coefficient-by-coefficient; over the rationals the
/// result is cross-checked against exp(log(f)/k) and disagreement is an
/// internal defect.
Series kth_root(const Series& f, unsigned k);

/// Field literals: "c1*e1 + c2*e2", "0", or bracketed component list.
VectorField parse_field(std::string_view text, const Ring& ring,
                        std::size_t degree_bound);
std::string format_field(const VectorField& v);
std::string format_field_list(const VectorField& v);

}  // namespace jsub
