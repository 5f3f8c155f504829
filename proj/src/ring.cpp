#include "jsub/ring.hpp"

#include <algorithm>
#include <cctype>

namespace jsub {

namespace {

// Coordinate-wise view: the sequence ring is isomorphic to eventually
// constant rational sequences under coordinate-wise operations, via
// coord_i = head + tail_i. Arithmetic below merges the two supports.
template <typename F>
ErdosSeq merge_tails(const ErdosSeq& x, const ErdosSeq& y, F combine) {
  ErdosSeq out;
  out.head = combine(x.head, y.head);
  auto ix = x.tail.begin(), iy = y.tail.begin();
  auto push = [&out](std::uint32_t idx, const Rat& v) {
    if (v != 0) out.tail.emplace_back(idx, v);
  };
  while (ix != x.tail.end() || iy != y.tail.end()) {
    if (iy == y.tail.end() || (ix != x.tail.end() && ix->first < iy->first)) {
      push(ix->first, Rat(combine(x.head + ix->second, y.head) - out.head));
      ++ix;
    } else if (ix == x.tail.end() || iy->first < ix->first) {
      push(iy->first, Rat(combine(x.head, y.head + iy->second) - out.head));
      ++iy;
    } else {
      push(ix->first,
           Rat(combine(x.head + ix->second, y.head + iy->second) - out.head));
      ++ix;
      ++iy;
    }
  }
  return out;
}

bool erdos_is_zero(const ErdosSeq& x) { return x.head == 0 && x.tail.empty(); }

std::size_t skip_ws(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

Int parse_mpz(std::string_view text, std::size_t offset) {
  std::size_t b = skip_ws(text, 0);
  std::size_t e = text.size();
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string t(text.substr(b, e - b));
  if (t.empty()) throw ParseError("empty integer literal", offset + b);
  std::size_t k = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (k == t.size()) throw ParseError("empty integer literal", offset + b);
  for (std::size_t i = k; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw ParseError("invalid integer literal '" + t + "'", offset + b + i);
  return Int(t);
}

Rat parse_mpq(std::string_view text, std::size_t offset) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_mpz(text, offset));
  Int num = parse_mpz(text.substr(0, slash), offset);
  Int den = parse_mpz(text.substr(slash + 1), offset + slash + 1);
  if (den == 0) throw ParseError("zero denominator", offset + slash + 1);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rat(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

ErdosSeq erdos_add(const ErdosSeq& x, const ErdosSeq& y) {
  return merge_tails(x, y, [](const Rat& a, const Rat& b) { return Rat(a + b); });
}

ErdosSeq erdos_multiply(const ErdosSeq& x, const ErdosSeq& y) {
  return merge_tails(x, y, [](const Rat& a, const Rat& b) { return Rat(a * b); });
}

ErdosSeq erdos_negate(const ErdosSeq& x) {
  ErdosSeq out;
  out.head = -x.head;
  out.tail.reserve(x.tail.size());
  for (const auto& [i, v] : x.tail) out.tail.emplace_back(i, Rat(-v));
  return out;
}

Ring Ring::integers() { return Ring(Kind::Integers); }
Ring Ring::rationals() { return Ring(Kind::Rationals); }
Ring Ring::erdos() { return Ring(Kind::Erdos); }

Ring Ring::modular(const Int& n) {
  if (n < 1) throw DomainError("modulus must be a positive integer");
  Ring r(Kind::Modular);
  r.modulus_ = n;
  return r;
}

Ring Ring::padic(const Int& p, unsigned precision) {
  if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
    throw DomainError("p-adic base " + p.get_str() + " is not prime");
  if (precision == 0) throw DomainError("p-adic precision must be positive");
  Ring r(Kind::PadicFixed);
  r.prime_ = p;
  r.padic_prec_ = precision;
  mpz_pow_ui(r.modulus_.get_mpz_t(), p.get_mpz_t(), precision);
  return r;
}

Ring Ring::parse_selector(std::string_view text) {
  if (text == "int") return integers();
  if (text == "rat") return rationals();
  if (text == "erdos") return erdos();
  if (text.rfind("mod:", 0) == 0) return modular(parse_mpz(text.substr(4), 4));
  if (text.rfind("padic:", 0) == 0) {
    auto rest = text.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("padic selector needs padic:<p>:<N>", 6);
    Int p = parse_mpz(rest.substr(0, colon), 6);
    Int n = parse_mpz(rest.substr(colon + 1), 7 + colon);
    if (n < 1 || n.fits_uint_p() == 0)
      throw ParseError("padic precision out of range", 7 + colon);
    return padic(p, static_cast<unsigned>(n.get_ui()));
  }
  throw ParseError("unknown ring selector '" + std::string(text) + "'", 0);
}

const Int& Ring::modulus() const {
  if (kind_ != Kind::Modular && kind_ != Kind::PadicFixed)
    throw DomainError("ring has no modulus");
  return modulus_;
}

const Int& Ring::prime() const {
  if (kind_ != Kind::PadicFixed) throw DomainError("ring has no prime");
  return prime_;
}

unsigned Ring::padic_precision() const {
  if (kind_ != Kind::PadicFixed) throw DomainError("ring has no p-adic precision");
  return padic_prec_;
}

std::string Ring::selector() const {
  switch (kind_) {
    case Kind::Integers: return "int";
    case Kind::Rationals: return "rat";
    case Kind::Modular: return "mod:" + modulus_.get_str();
    case Kind::PadicFixed:
      return "padic:" + prime_.get_str() + ":" + std::to_string(padic_prec_);
    case Kind::Erdos: return "erdos";
  }
  return "?";
}

const Int& Ring::check_int(const Value& v) const {
  if (const Int* p = std::get_if<Int>(&v)) return *p;
  throw DomainError("value does not belong to ring " + selector());
}

const Rat& Ring::check_rat(const Value& v) const {
  if (const Rat* p = std::get_if<Rat>(&v)) return *p;
  throw DomainError("value does not belong to ring " + selector());
}

const ErdosSeq& Ring::check_erdos(const Value& v) const {
  if (const ErdosSeq* p = std::get_if<ErdosSeq>(&v)) return *p;
  throw DomainError("value does not belong to ring " + selector());
}

Int Ring::reduce(const Int& v) const {
  Int r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

Value Ring::zero() const {
  switch (kind_) {
    case Kind::Rationals: return Rat(0);
    case Kind::Erdos: return ErdosSeq{Rat(0), {}};
    default: return Int(0);
  }
}

Value Ring::one() const {
  switch (kind_) {
    case Kind::Rationals: return Rat(1);
    case Kind::Erdos: return ErdosSeq{Rat(1), {}};
    case Kind::Modular:
    case Kind::PadicFixed: return reduce(Int(1));
    default: return Int(1);
  }
}

Value Ring::from_int(long v) const { return from_int(Int(v)); }

Value Ring::from_int(const Int& v) const {
  switch (kind_) {
    case Kind::Integers: return v;
    case Kind::Rationals: return Rat(v);
    case Kind::Erdos: return ErdosSeq{Rat(v), {}};
    case Kind::Modular:
    case Kind::PadicFixed: return reduce(v);
  }
  return Int(0);
}

Value Ring::from_rational(const Rat& v) const {
  switch (kind_) {
    case Kind::Rationals: return v;
    case Kind::Erdos: return ErdosSeq{v, {}};
    default:
      throw DomainError("ring " + selector() + " does not contain the rationals");
  }
}

Value Ring::add(const Value& a, const Value& b) const {
  switch (kind_) {
    case Kind::Integers: return Int(check_int(a) + check_int(b));
    case Kind::Rationals: return Rat(check_rat(a) + check_rat(b));
    case Kind::Erdos: return erdos_add(check_erdos(a), check_erdos(b));
    case Kind::Modular:
    case Kind::PadicFixed: return reduce(check_int(a) + check_int(b));
  }
  return Int(0);
}

Value Ring::sub(const Value& a, const Value& b) const { return add(a, negate(b)); }

Value Ring::negate(const Value& a) const {
  switch (kind_) {
    case Kind::Integers: return Int(-check_int(a));
    case Kind::Rationals: return Rat(-check_rat(a));
    case Kind::Erdos: return erdos_negate(check_erdos(a));
    case Kind::Modular:
    case Kind::PadicFixed: return reduce(Int(-check_int(a)));
  }
  return Int(0);
}

Value Ring::mul(const Value& a, const Value& b) const {
  switch (kind_) {
    case Kind::Integers: return Int(check_int(a) * check_int(b));
    case Kind::Rationals: return Rat(check_rat(a) * check_rat(b));
    case Kind::Erdos: return erdos_multiply(check_erdos(a), check_erdos(b));
    case Kind::Modular:
    case Kind::PadicFixed: return reduce(check_int(a) * check_int(b));
  }
  return Int(0);
}

bool Ring::eq(const Value& a, const Value& b) const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Modular:
    case Kind::PadicFixed: return check_int(a) == check_int(b);
    case Kind::Rationals: return check_rat(a) == check_rat(b);
    case Kind::Erdos: return check_erdos(a) == check_erdos(b);
  }
  return false;
}

bool Ring::is_zero(const Value& a) const { return eq(a, zero()); }
bool Ring::is_one(const Value& a) const { return eq(a, one()); }

std::optional<Value> Ring::try_exact_divide(const Value& a, const Value& b) const {
  if (is_zero(b)) throw DomainError("exact division by zero");
  switch (kind_) {
    case Kind::Integers: {
      const Int& x = check_int(a);
      const Int& y = check_int(b);
      if (mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t()) == 0) return std::nullopt;
      Int q;
      mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      return Value(q);
    }
    case Kind::Rationals: return Value(Rat(check_rat(a) / check_rat(b)));
    case Kind::Modular:
    case Kind::PadicFixed: {
      // q*b = a has a unique residue solution exactly when b is a unit.
      auto inv = try_invert(b);
      if (!inv) return std::nullopt;
      return mul(a, *inv);
    }
    case Kind::Erdos: {
      const ErdosSeq& x = check_erdos(a);
      const ErdosSeq& y = check_erdos(b);
      // Unique division needs every coordinate of y (in the eventually
      // constant view) nonzero; a zero coordinate either blocks existence
      // or leaves that coordinate of q free.
      if (y.head == 0) return std::nullopt;
      ErdosSeq q;
      q.head = x.head / y.head;
      auto ix = x.tail.begin(), iy = y.tail.begin();
      while (ix != x.tail.end() || iy != y.tail.end()) {
        std::uint32_t idx;
        Rat xc = x.head, yc = y.head;
        if (iy == y.tail.end() || (ix != x.tail.end() && ix->first < iy->first)) {
          idx = ix->first;
          xc += ix->second;
          ++ix;
        } else if (ix == x.tail.end() || iy->first < ix->first) {
          idx = iy->first;
          yc += iy->second;
          ++iy;
        } else {
          idx = ix->first;
          xc += ix->second;
          yc += iy->second;
          ++ix;
          ++iy;
        }
        if (yc == 0) return std::nullopt;
        Rat qc = xc / yc - q.head;
        if (qc != 0) q.tail.emplace_back(idx, qc);
      }
      return Value(q);
    }
  }
  return std::nullopt;
}

std::optional<Value> Ring::try_invert(const Value& a) const {
  switch (kind_) {
    case Kind::Integers: {
      const Int& x = check_int(a);
      if (x == 1 || x == -1) return Value(x);
      return std::nullopt;
    }
    case Kind::Rationals: {
      const Rat& x = check_rat(a);
      if (x == 0) return std::nullopt;
      return Value(Rat(1 / x));
    }
    case Kind::Modular:
    case Kind::PadicFixed: {
      const Int& x = check_int(a);
      Int inv;
      if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t()) == 0)
        return std::nullopt;
      return Value(inv);
    }
    case Kind::Erdos: {
      if (erdos_is_zero(check_erdos(a))) return std::nullopt;
      return try_exact_divide(one(), a);
    }
  }
  return std::nullopt;
}

Value Ring::parse(std::string_view text) const {
  switch (kind_) {
    case Kind::Integers: return parse_mpz(text, 0);
    case Kind::Rationals: return parse_mpq(text, 0);
    case Kind::Modular:
    case Kind::PadicFixed: return reduce(parse_mpz(text, 0));
    case Kind::Erdos: {
      std::size_t i = skip_ws(text, 0);
      if (i >= text.size() || text[i] != '(')
        throw ParseError("sequence literal must start with '('", i);
      std::size_t close = text.rfind(')');
      if (close == std::string_view::npos || close <= i)
        throw ParseError("unterminated sequence literal", text.size());
      if (skip_ws(text, close + 1) != text.size())
        throw ParseError("trailing characters after sequence literal", close + 1);
      std::string_view body = text.substr(i + 1, close - i - 1);
      std::size_t base = i + 1;
      auto semi = body.find(';');
      ErdosSeq out;
      out.head = parse_mpq(body.substr(0, semi), base);
      if (semi != std::string_view::npos) {
        std::string_view rest = body.substr(semi + 1);
        std::size_t roff = base + semi + 1;
        std::size_t pos = skip_ws(rest, 0);
        while (pos < rest.size()) {
          auto comma = rest.find(',', pos);
          std::string_view entry =
              rest.substr(pos, comma == std::string_view::npos ? rest.size() - pos
                                                               : comma - pos);
          auto colon = entry.find(':');
          if (colon == std::string_view::npos)
            throw ParseError("sequence entry needs index:value", roff + pos);
          Int idx = parse_mpz(entry.substr(0, colon), roff + pos);
          if (idx < 1 || idx.fits_uint_p() == 0)
            throw ParseError("sequence index must be a positive integer",
                             roff + pos);
          Rat val = parse_mpq(entry.substr(colon + 1), roff + pos + colon + 1);
          if (val != 0)
            out.tail.emplace_back(static_cast<std::uint32_t>(idx.get_ui()), val);
          if (comma == std::string_view::npos) break;
          pos = skip_ws(rest, comma + 1);
          if (pos >= rest.size())
            throw ParseError("dangling comma in sequence literal", roff + comma);
        }
      }
      std::sort(out.tail.begin(), out.tail.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t k = 1; k < out.tail.size(); ++k)
        if (out.tail[k - 1].first == out.tail[k].first)
          throw ParseError("duplicate sequence index " +
                               std::to_string(out.tail[k].first),
                           base);
      return out;
    }
  }
  throw ParseError("unsupported ring", 0);
}

std::string Ring::format(const Value& v) const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Modular:
    case Kind::PadicFixed: return check_int(v).get_str();
    case Kind::Rationals: return format_rat(check_rat(v));
    case Kind::Erdos: {
      const ErdosSeq& e = check_erdos(v);
      std::string out = "(" + format_rat(e.head) + ";";
      bool first = true;
      for (const auto& [i, val] : e.tail) {
        out += first ? " " : ", ";
        out += std::to_string(i) + ":" + format_rat(val);
        first = false;
      }
      out += ")";
      return out;
    }
  }
  return "?";
}

}  // namespace jsub
