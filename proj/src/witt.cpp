#include "jsub/witt.hpp"

#include <cctype>
#include <stdexcept>

#include "jsub/detail/poly.hpp"
#include "jsub/group.hpp"

namespace jsub {

namespace {

using detail::Poly;
using detail::poly_mul_trunc;
using detail::zero_poly;

void require_rationals(const Ring& ring, const char* what) {
  if (!ring.contains_rationals())
    throw DomainError(std::string(what) +
                      " needs a coefficient ring containing the rationals, "
                      "got " + ring.selector());
}

}  // namespace

VectorField::VectorField(Ring ring, std::vector<Value> components)
    : ring_(std::move(ring)), comps_(std::move(components)) {
  for (const Value& c : comps_) ring_.is_zero(c);  // type-check against the ring
}

VectorField VectorField::zero(const Ring& ring, std::size_t degree_bound) {
  return VectorField(ring, std::vector<Value>(degree_bound, ring.zero()));
}

VectorField VectorField::basis(const Ring& ring, std::size_t n,
                               std::size_t degree_bound) {
  if (n < 1 || n > degree_bound)
    throw DomainError("basis index out of range");
  std::vector<Value> c(degree_bound, ring.zero());
  c[n - 1] = ring.one();
  return VectorField(ring, std::move(c));
}

bool VectorField::is_zero() const {
  for (const Value& c : comps_)
    if (!ring_.is_zero(c)) return false;
  return true;
}

VectorField witt_bracket(const VectorField& v, const VectorField& w) {
  if (!(v.ring() == w.ring()) || v.degree_bound() != w.degree_bound())
    throw DomainError("bracket operands need the same ring and degree bound");
  const Ring& ring = v.ring();
  std::size_t bound = v.degree_bound();
  std::vector<Value> out(bound, ring.zero());
  for (std::size_t n = 1; n <= bound; ++n) {
    if (ring.is_zero(v.component(n))) continue;
    for (std::size_t m = 1; n + m <= bound; ++m) {
      if (m == n || ring.is_zero(w.component(m))) continue;
      Value c = ring.mul(v.component(n), w.component(m));
      c = ring.mul(c, ring.from_int(static_cast<long>(m) - static_cast<long>(n)));
      out[n + m - 1] = ring.add(out[n + m - 1], c);
    }
  }
  return VectorField(ring, std::move(out));
}

VectorField theta_star(const VectorField& v, unsigned s) {
  if (s == 0) throw DomainError("compression coefficient s must be positive");
  require_rationals(v.ring(), "theta_star");
  const Ring& ring = v.ring();
  std::size_t bound = v.degree_bound();
  Rat inv_s(1, s);
  inv_s.canonicalize();
  Value c = ring.from_rational(inv_s);
  std::vector<Value> out(bound, ring.zero());
  for (std::size_t n = 1; n <= bound; ++n) {
    if (ring.is_zero(v.component(n))) continue;
    std::size_t target = static_cast<std::size_t>(s) * n;
    if (target > bound) continue;
    out[target - 1] = ring.add(out[target - 1], ring.mul(c, v.component(n)));
  }
  return VectorField(ring, std::move(out));
}

VectorField add(const VectorField& v, const VectorField& w) {
  if (!(v.ring() == w.ring()) || v.degree_bound() != w.degree_bound())
    throw DomainError("field sum needs the same ring and degree bound");
  std::vector<Value> out;
  out.reserve(v.degree_bound());
  for (std::size_t n = 1; n <= v.degree_bound(); ++n)
    out.push_back(v.ring().add(v.component(n), w.component(n)));
  return VectorField(v.ring(), std::move(out));
}

VectorField scale(const VectorField& v, const Value& c) {
  std::vector<Value> out;
  out.reserve(v.degree_bound());
  for (std::size_t n = 1; n <= v.degree_bound(); ++n)
    out.push_back(v.ring().mul(c, v.component(n)));
  return VectorField(v.ring(), std::move(out));
}

Series exp_field(const VectorField& v) {
  require_rationals(v.ring(), "exp_field");
  const Ring& ring = v.ring();
  std::size_t bound = v.degree_bound();

  // v acts as the derivation (sum c_n x^(n+1)) d/dx; each application
  // raises the valuation, so the flow sum is finite per coefficient.
  Poly vpoly = zero_poly(ring, bound + 1);
  for (std::size_t n = 1; n <= bound; ++n) vpoly[n + 1] = v.component(n);

  Poly term = zero_poly(ring, bound + 1);
  term[1] = ring.one();  // v^0(x) = x
  Poly sum = zero_poly(ring, bound + 1);
  Rat factorial(1);
  for (unsigned long i = 0;; ++i) {
    if (i > 0) factorial *= Rat(i);
    Value inv_fact = ring.from_rational(Rat(1) / factorial);
    bool any = false;
    for (std::size_t d = 0; d <= bound + 1; ++d) {
      if (ring.is_zero(term[d])) continue;
      sum[d] = ring.add(sum[d], ring.mul(inv_fact, term[d]));
      any = true;
    }
    if (!any && i > 0) break;
    // term <- vpoly * d(term)/dx
    Poly deriv = zero_poly(ring, bound + 1);
    bool nonzero = false;
    for (std::size_t d = 1; d <= bound + 1; ++d) {
      if (ring.is_zero(term[d])) continue;
      deriv[d - 1] = ring.mul(term[d], ring.from_int(static_cast<long>(d)));
      nonzero = true;
    }
    if (!nonzero) break;
    term = poly_mul_trunc(ring, deriv, vpoly, bound + 1);
  }

  std::vector<Value> coeffs;
  coeffs.reserve(bound);
  for (std::size_t i = 1; i <= bound; ++i) coeffs.push_back(sum[i + 1]);
  return Series(ring, std::move(coeffs));
}

VectorField log_series(const Series& f) {
  require_rationals(f.ring(), "log_series");
  const Ring& ring = f.ring();
  std::size_t bound = f.precision();
  std::vector<Value> c(bound, ring.zero());
  // Each c_j enters coefficient j of the flow with unit multiplier; the
  // higher flow terms only involve lower components.
  for (std::size_t j = 1; j <= bound; ++j) {
    std::vector<Value> partial(c.begin(), c.begin() + j);
    Series e = exp_field(VectorField(ring, std::move(partial)));
    c[j - 1] = ring.sub(f.coeff(j), e.coeff(j));
  }
  return VectorField(ring, std::move(c));
}

Series kth_root(const Series& f, unsigned k) {
  if (k == 0) throw DomainError("root index k must be positive");
  require_rationals(f.ring(), "kth_root");
  const Ring& ring = f.ring();
  std::size_t m = f.precision();
  Rat inv_k(1, k);
  inv_k.canonicalize();
  Value inv = ring.from_rational(inv_k);

  // h^k = f solved low to high; the unknown coefficient enters k times
  // linearly, once per factor.
  std::vector<Value> b(m, ring.zero());
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<Value> partial(b.begin(), b.begin() + i);
    Series h(ring, std::move(partial));
    Series p = power(h, static_cast<long>(k));
    b[i - 1] = ring.mul(inv, ring.sub(f.coeff(i), p.coeff(i)));
  }
  Series root(ring, std::move(b));

  // Second route through the exponential; the completeness lemma makes
  // the two answers equal over the rationals.
  if (ring.kind() == Ring::Kind::Rationals) {
    Series via_log = exp_field(scale(log_series(f), inv));
    if (!(via_log == root))
      throw std::logic_error("kth_root: coefficient solve and exp/log route "
                             "disagree");
  }
  return root;
}

namespace {

std::size_t ws(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

VectorField parse_field_list(std::string_view text, const Ring& ring,
                             std::size_t bound) {
  std::size_t i = ws(text, 0);
  std::size_t close = text.rfind(']');
  if (close == std::string_view::npos)
    throw ParseError("unterminated component list", text.size());
  if (ws(text, close + 1) != text.size())
    throw ParseError("trailing characters after component list", close + 1);
  std::string_view body = text.substr(i + 1, close - i - 1);
  std::vector<Value> comps;
  std::size_t pos = ws(body, 0);
  if (pos < body.size()) {
    int paren = 0;
    std::size_t start = pos;
    for (std::size_t k = pos; k <= body.size(); ++k) {
      if (k < body.size() && body[k] == '(') ++paren;
      if (k < body.size() && body[k] == ')') --paren;
      if (k == body.size() || (body[k] == ',' && paren == 0)) {
        comps.push_back(ring.parse(body.substr(start, k - start)));
        start = k + 1;
      }
    }
  }
  if (comps.size() != bound)
    throw ParseError("component list has " + std::to_string(comps.size()) +
                         " entries, expected " + std::to_string(bound),
                     i);
  return VectorField(ring, std::move(comps));
}

}  // namespace

VectorField parse_field(std::string_view text, const Ring& ring,
                        std::size_t degree_bound) {
  std::size_t i = ws(text, 0);
  if (i < text.size() && text[i] == '[')
    return parse_field_list(text, ring, degree_bound);
  std::vector<Value> comps(degree_bound, ring.zero());
  std::vector<bool> seen(degree_bound, false);
  if (i < text.size() && text[i] == '0' && ws(text, i + 1) == text.size())
    return VectorField(ring, std::move(comps));

  bool first = true;
  while (i < text.size()) {
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      i = ws(text, i + 1);
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", i);
    }
    first = false;
    if (i >= text.size()) throw ParseError("dangling sign", i);

    Value coeff = ring.one();
    if (text[i] != 'e') {
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
        throw ParseError("expected '*' between coefficient and basis element",
                         i);
      coeff = ring.parse(text.substr(i, star - i));
      i = ws(text, star + 1);
      if (i >= text.size() || text[i] != 'e')
        throw ParseError("expected basis element e<n>", i);
    }
    ++i;  // past 'e'
    std::size_t dig = i;
    while (dig < text.size() && std::isdigit(static_cast<unsigned char>(text[dig])))
      ++dig;
    if (dig == i) throw ParseError("missing basis index", i);
    unsigned long n = std::stoul(std::string(text.substr(i, dig - i)));
    if (n < 1 || n > degree_bound)
      throw ParseError("basis index e" + std::to_string(n) +
                           " outside degree bound " +
                           std::to_string(degree_bound),
                       i);
    if (seen[n - 1])
      throw ParseError("duplicate component e" + std::to_string(n), i);
    seen[n - 1] = true;
    comps[n - 1] = negative ? ring.negate(coeff) : coeff;
    i = ws(text, dig);
  }
  return VectorField(ring, std::move(comps));
}

namespace {

bool formats_negative_vf(const Ring& ring, const Value& v) {
  switch (ring.kind()) {
    case Ring::Kind::Integers: return sgn(std::get<Int>(v)) < 0;
    case Ring::Kind::Rationals: return sgn(std::get<Rat>(v)) < 0;
    default: return false;
  }
}

}  // namespace

std::string format_field(const VectorField& v) {
  const Ring& ring = v.ring();
  std::string out;
  for (std::size_t n = 1; n <= v.degree_bound(); ++n) {
    const Value& c = v.component(n);
    if (ring.is_zero(c)) continue;
    bool neg = formats_negative_vf(ring, c);
    Value body = neg ? ring.negate(c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (!ring.is_one(body)) out += ring.format(body) + "*";
    out += "e" + std::to_string(n);
  }
  return out.empty() ? "0" : out;
}

std::string format_field_list(const VectorField& v) {
  std::string out = "[";
  for (std::size_t n = 1; n <= v.degree_bound(); ++n) {
    if (n > 1) out += ", ";
    out += v.ring().format(v.component(n));
  }
  return out + "]";
}

}  // namespace jsub
