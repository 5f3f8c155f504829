#include "jsub/series.hpp"

#include <cctype>

#include "jsub/detail/poly.hpp"

namespace jsub {

namespace {

using detail::Poly;
using detail::poly_mul_trunc;
using detail::zero_poly;

Poly series_to_poly(const Series& f, std::size_t prec) {
  Poly y = zero_poly(f.ring(), prec + 1);
  y[1] = f.ring().one();
  for (std::size_t i = 1; i <= prec; ++i) y[i + 1] = f.coeff(i);
  return y;
}

Series poly_to_series(const Ring& ring, const Poly& r, std::size_t prec) {
  std::vector<Value> coeffs;
  coeffs.reserve(prec);
  for (std::size_t i = 1; i <= prec; ++i) coeffs.push_back(r[i + 1]);
  return Series(ring, std::move(coeffs));
}

// f(g) = y * (1 + y*w) with w = a_1 + y*(a_2 + ... + y*a_m), y = g(x).
Series compose_horner(const Series& f, const Series& g, std::size_t m) {
  const Ring& ring = f.ring();
  if (m == 0) return Series::identity(ring, 0);
  Poly y = series_to_poly(g, m);
  Poly w = zero_poly(ring, m - 1);
  w[0] = f.coeff(m);
  for (std::size_t i = m - 1; i >= 1; --i) {
    w = poly_mul_trunc(ring, w, y, m - 1);
    w[0] = ring.add(w[0], f.coeff(i));
  }
  Poly u = poly_mul_trunc(ring, y, w, m);
  u[0] = ring.one();
  Poly r = poly_mul_trunc(ring, y, u, m + 1);
  return poly_to_series(ring, r, m);
}

// Independent kernel: accumulates the table y^2, y^3, ... and sums
// a_i * y^(i+1). The inner product below is written degree-outer on
// purpose so the two kernels do not share a multiplication routine.
Series compose_power_table(const Series& f, const Series& g, std::size_t m) {
  const Ring& ring = f.ring();
  if (m == 0) return Series::identity(ring, 0);
  Poly y = series_to_poly(g, m);
  Poly p = y;
  Poly acc = y;
  for (std::size_t i = 1; i <= m; ++i) {
    Poly next = zero_poly(ring, m + 1);
    for (std::size_t d = 0; d <= m + 1; ++d) {
      Value sum = ring.zero();
      for (std::size_t e = 1; e < d; ++e) {
        if (ring.is_zero(p[e]) || ring.is_zero(y[d - e])) continue;
        sum = ring.add(sum, ring.mul(p[e], y[d - e]));
      }
      next[d] = sum;
    }
    p = std::move(next);  // p = y^(i+1)
    if (!ring.is_zero(f.coeff(i)))
      for (std::size_t d = 0; d <= m + 1; ++d)
        if (!ring.is_zero(p[d]))
          acc[d] = ring.add(acc[d], ring.mul(f.coeff(i), p[d]));
  }
  return poly_to_series(ring, acc, m);
}

}  // namespace

Series::Series(Ring ring, std::vector<Value> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (const Value& c : coeffs_) ring_.is_zero(c);  // type-checks c against the ring
}

Series Series::identity(const Ring& ring, std::size_t precision) {
  return Series(ring, std::vector<Value>(precision, ring.zero()));
}

bool Series::is_identity() const {
  for (const Value& c : coeffs_)
    if (!ring_.is_zero(c)) return false;
  return true;
}

Series compose(const Series& f, const Series& g, ComposeKernel kernel) {
  if (!(f.ring() == g.ring()))
    throw DomainError("compose requires both operands over the same ring");
  std::size_t m = std::min(f.precision(), g.precision());
  return kernel == ComposeKernel::Horner ? compose_horner(f, g, m)
                                         : compose_power_table(f, g, m);
}

Series invert(const Series& f) {
  const Ring& ring = f.ring();
  std::size_t m = f.precision();
  if (m == 0) return Series::identity(ring, 0);

  // Solve f(g) = x coefficient by coefficient. pow[k][d] caches [x^d] g^k
  // for the partial inverse g; entry (k, d) only depends on the b_j with
  // j <= d-k, so the table can be filled one diagonal per step.
  std::vector<Value> b(m, ring.zero());
  std::vector<std::vector<Value>> pow(
      m + 2, std::vector<Value>(m + 2, ring.zero()));
  for (std::size_t k = 0; k <= m + 1; ++k) pow[k][k] = ring.one();

  auto g_coeff = [&](std::size_t e) -> Value {
    if (e == 1) return ring.one();
    return b[e - 2];  // g_(j+1) = b_j
  };

  for (std::size_t n = 1; n <= m; ++n) {
    Value s = ring.zero();
    for (std::size_t j = 1; j <= n; ++j) {
      if (ring.is_zero(f.coeff(j))) continue;
      s = ring.add(s, ring.mul(f.coeff(j), pow[j + 1][n + 1]));
    }
    b[n - 1] = ring.negate(s);
    pow[1][n + 1] = b[n - 1];
    for (std::size_t k = 2; k + n <= m + 1; ++k) {
      std::size_t d = k + n;
      Value acc = ring.zero();
      for (std::size_t e = 1; e + k - 1 <= d; ++e) {
        Value ge = g_coeff(e);
        if (ring.is_zero(ge) || ring.is_zero(pow[k - 1][d - e])) continue;
        acc = ring.add(acc, ring.mul(ge, pow[k - 1][d - e]));
      }
      pow[k][d] = acc;
    }
  }
  return Series(ring, std::move(b));
}

Depth depth(const Series& f) {
  for (std::size_t i = 1; i <= f.precision(); ++i)
    if (!f.ring().is_zero(f.coeff(i))) return Depth{i - 1, false};
  return Depth{f.precision(), true};
}

Series project(const Series& f, std::size_t n) {
  if (n > f.precision())
    throw DomainError("projection target exceeds the series precision");
  std::vector<Value> coeffs(f.coeffs().begin(), f.coeffs().begin() + n);
  return Series(f.ring(), std::move(coeffs));
}

bool in_grid_subgroup(const Series& f, unsigned s) {
  if (s == 0) throw DomainError("grid step s must be positive");
  for (std::size_t i = 1; i <= f.precision(); ++i)
    if (i % s != 0 && !f.ring().is_zero(f.coeff(i))) return false;
  return true;
}

Series reduce_coefficients(const Series& f, const Int& p, unsigned j) {
  if (f.ring().kind() != Ring::Kind::Integers)
    throw DomainError("reduce_coefficients expects a series over the integers");
  Int q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), j);
  Ring target = Ring::modular(q);
  std::vector<Value> coeffs;
  coeffs.reserve(f.precision());
  for (std::size_t i = 1; i <= f.precision(); ++i)
    coeffs.push_back(target.from_int(std::get<Int>(f.coeff(i))));
  return Series(target, std::move(coeffs));
}

namespace {

std::size_t ws(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

Series parse_series_list(std::string_view text, const Ring& ring,
                         std::size_t precision) {
  std::size_t i = ws(text, 0);
  std::size_t close = text.rfind(']');
  if (close == std::string_view::npos)
    throw ParseError("unterminated coefficient list", text.size());
  if (ws(text, close + 1) != text.size())
    throw ParseError("trailing characters after coefficient list", close + 1);
  std::string_view body = text.substr(i + 1, close - i - 1);
  std::vector<Value> coeffs;
  std::size_t pos = ws(body, 0);
  if (pos < body.size()) {
    int paren = 0;
    std::size_t start = pos;
    for (std::size_t k = pos; k <= body.size(); ++k) {
      if (k < body.size() && body[k] == '(') ++paren;
      if (k < body.size() && body[k] == ')') --paren;
      if (k == body.size() || (body[k] == ',' && paren == 0)) {
        coeffs.push_back(ring.parse(body.substr(start, k - start)));
        start = k + 1;
      }
    }
  }
  if (coeffs.size() != precision)
    throw ParseError("coefficient list has " + std::to_string(coeffs.size()) +
                         " entries, expected " + std::to_string(precision),
                     i);
  return Series(ring, std::move(coeffs));
}

}  // namespace

std::optional<std::size_t> list_literal_length(std::string_view text) {
  std::size_t i = ws(text, 0);
  if (i >= text.size() || text[i] != '[') return std::nullopt;
  std::size_t close = text.rfind(']');
  if (close == std::string_view::npos || close <= i) return std::nullopt;
  std::string_view body = text.substr(i + 1, close - i - 1);
  if (ws(body, 0) == body.size()) return 0;
  std::size_t count = 1;
  int paren = 0;
  for (char c : body) {
    if (c == '(') ++paren;
    if (c == ')') --paren;
    if (c == ',' && paren == 0) ++count;
  }
  return count;
}

Series parse_series(std::string_view text, const Ring& ring,
                    std::size_t precision) {
  std::size_t i = ws(text, 0);
  if (i < text.size() && text[i] == '[')
    return parse_series_list(text, ring, precision);

  if (i >= text.size() || text[i] != 'x')
    throw ParseError("leading term must be exactly x", i);
  ++i;
  std::size_t after_x = ws(text, i);
  if (after_x < text.size() && text[after_x] == '^')
    throw ParseError("leading term must be exactly x", after_x);

  std::vector<Value> coeffs(precision, ring.zero());
  std::vector<bool> seen(precision, false);
  i = after_x;
  while (i < text.size()) {
    bool negative;
    if (text[i] == '+')
      negative = false;
    else if (text[i] == '-')
      negative = true;
    else
      throw ParseError("expected '+' or '-' between terms", i);
    i = ws(text, i + 1);
    if (i >= text.size()) throw ParseError("dangling sign", i);

    Value coeff = ring.one();
    if (text[i] != 'x') {
      int paren = 0;
      std::size_t star = std::string_view::npos;
      for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] == '(') ++paren;
        if (text[k] == ')') --paren;
        if (text[k] == '*' && paren == 0) {
          star = k;
          break;
        }
      }
      if (star == std::string_view::npos)
        throw ParseError("expected '*' between coefficient and x", i);
      coeff = ring.parse(text.substr(i, star - i));
      i = ws(text, star + 1);
      if (i >= text.size() || text[i] != 'x')
        throw ParseError("expected x after coefficient", i);
    }
    ++i;  // past 'x'
    i = ws(text, i);
    if (i >= text.size() || text[i] != '^')
      throw ParseError("expected '^' after x (exponent >= 2)", i);
    i = ws(text, i + 1);
    std::size_t dig = i;
    while (dig < text.size() && std::isdigit(static_cast<unsigned char>(text[dig])))
      ++dig;
    if (dig == i) throw ParseError("missing exponent", i);
    unsigned long e = std::stoul(std::string(text.substr(i, dig - i)));
    if (e < 2) throw ParseError("exponent must be at least 2", i);
    if (e > precision + 1)
      throw ParseError("exponent " + std::to_string(e) +
                           " exceeds precision (max " +
                           std::to_string(precision + 1) + ")",
                       i);
    std::size_t idx = e - 2;
    if (seen[idx])
      throw ParseError("duplicate term x^" + std::to_string(e), i);
    seen[idx] = true;
    coeffs[idx] = negative ? ring.negate(coeff) : coeff;
    i = ws(text, dig);
  }
  return Series(ring, std::move(coeffs));
}

namespace {

bool formats_negative(const Ring& ring, const Value& v) {
  switch (ring.kind()) {
    case Ring::Kind::Integers: return sgn(std::get<Int>(v)) < 0;
    case Ring::Kind::Rationals: return sgn(std::get<Rat>(v)) < 0;
    default: return false;  // residues and sequences render unsigned
  }
}

}  // namespace

std::string format_series(const Series& f) {
  const Ring& ring = f.ring();
  std::string out = "x";
  for (std::size_t i = 1; i <= f.precision(); ++i) {
    const Value& c = f.coeff(i);
    if (ring.is_zero(c)) continue;
    bool neg = formats_negative(ring, c);
    Value body = neg ? ring.negate(c) : c;
    out += neg ? " - " : " + ";
    if (!ring.is_one(body)) out += ring.format(body) + "*";
    out += "x^" + std::to_string(i + 1);
  }
  return out;
}

std::string format_series_list(const Series& f) {
  std::string out = "[";
  for (std::size_t i = 1; i <= f.precision(); ++i) {
    if (i > 1) out += ", ";
    out += f.ring().format(f.coeff(i));
  }
  return out + "]";
}

}  // namespace jsub
