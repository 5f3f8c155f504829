#pragma once

/**
 * @file ring.hpp
 * @brief Coefficient rings with exact arithmetic and decidable equality.
 *
 * Every series in this library lives over a commutative unital ring chosen
 * at runtime. Ring describes the ring (integers, rationals, Z/n, fixed
 * precision p-adic integers, or the sequence ring of finitely supported
 * rational sequences) and performs all arithmetic on Value operands.
 *
 * All values are canonical: rationals in lowest terms with positive
 * denominator, residues in 0..n-1, sequence tails sorted with no zero
 * entries. Equality is therefore plain structural comparison.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace jsub {

using Int = mpz_class;
using Rat = mpq_class;

/// Violated precondition or missing ring capability.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed literal; position() is the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/**
 * Finitely supported rational sequence (head, tail), multiplied by
 *
 *   (x0, xbar) * (y0, ybar) = (x0*y0, x0*ybar + y0*xbar + xbar*ybar)
 *
 * with coordinate-wise tail product. Canonical form: tail indices strictly
 * increasing, no zero tail values. The unit is (1, empty).
 */
struct ErdosSeq {
  Rat head;
  std::vector<std::pair<std::uint32_t, Rat>> tail;

  friend bool operator==(const ErdosSeq& a, const ErdosSeq& b) {
    return a.head == b.head && a.tail == b.tail;
  }
};

ErdosSeq erdos_add(const ErdosSeq& x, const ErdosSeq& y);
ErdosSeq erdos_negate(const ErdosSeq& x);
ErdosSeq erdos_multiply(const ErdosSeq& x, const ErdosSeq& y);

using Value = std::variant<Int, Rat, ErdosSeq>;

class Ring {
 public:
  enum class Kind { Integers, Rationals, Modular, PadicFixed, Erdos };

  static Ring integers();
  static Ring rationals();
  static Ring modular(const Int& n);
  static Ring padic(const Int& p, unsigned precision);
  static Ring erdos();

  /// Accepts "int", "rat", "mod:<n>", "padic:<p>:<N>", "erdos".
  static Ring parse_selector(std::string_view text);

  Kind kind() const { return kind_; }
  bool contains_rationals() const {
    return kind_ == Kind::Rationals || kind_ == Kind::Erdos;
  }
  /// Modular: n. PadicFixed: p^N. Others have no modulus.
  const Int& modulus() const;
  const Int& prime() const;
  unsigned padic_precision() const;
  std::string selector() const;

  Value zero() const;
  Value one() const;
  Value from_int(long v) const;
  Value from_int(const Int& v) const;
  /// Canonical image of an exact rational; DomainError unless the ring
  /// contains the rationals.
  Value from_rational(const Rat& v) const;

  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value negate(const Value& a) const;
  Value mul(const Value& a, const Value& b) const;
  bool eq(const Value& a, const Value& b) const;
  bool is_zero(const Value& a) const;
  bool is_one(const Value& a) const;

  /// The unique q with q*b = a, when it exists and is unique; nullopt
  /// otherwise. b = 0 is a DomainError.
  std::optional<Value> try_exact_divide(const Value& a, const Value& b) const;
  /// Multiplicative inverse, when it exists.
  std::optional<Value> try_invert(const Value& a) const;

  Value parse(std::string_view text) const;
  std::string format(const Value& v) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ &&
           a.prime_ == b.prime_ && a.padic_prec_ == b.padic_prec_;
  }

 private:
  Ring(Kind kind) : kind_(kind) {}

  const Int& check_int(const Value& v) const;
  const Rat& check_rat(const Value& v) const;
  const ErdosSeq& check_erdos(const Value& v) const;
  Int reduce(const Int& v) const;  // canonical residue mod modulus_

  Kind kind_;
  Int modulus_{0};
  Int prime_{0};
  unsigned padic_prec_ = 0;
};

}  // namespace jsub
