#include "jsub/verify.hpp"

#include <chrono>

#include "jsub/bench.hpp"
#include "jsub/detail/poly.hpp"
#include "jsub/endo.hpp"
#include "jsub/group.hpp"
#include "jsub/witt.hpp"

namespace jsub {

namespace {

long pick(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Int random_residue(const Int& modulus, std::mt19937_64& rng) {
  std::size_t bits = mpz_sizeinbase(modulus.get_mpz_t(), 2);
  Int r = 0;
  for (std::size_t b = 0; b < bits + 32; b += 32) {
    r <<= 32;
    r += static_cast<unsigned long>(rng() & 0xffffffffUL);
  }
  return Int(r % modulus);
}

Rat random_rat(std::mt19937_64& rng) {
  Rat q(pick(rng, -9, 9), pick(rng, 1, 9));
  q.canonicalize();
  return q;
}

}  // namespace

Value random_value(const Ring& ring, std::mt19937_64& rng) {
  switch (ring.kind()) {
    case Ring::Kind::Integers: return ring.from_int(pick(rng, -9, 9));
    case Ring::Kind::Rationals: return Value(random_rat(rng));
    case Ring::Kind::Modular:
    case Ring::Kind::PadicFixed:
      return Value(random_residue(ring.modulus(), rng));
    case Ring::Kind::Erdos: {
      ErdosSeq e;
      e.head = random_rat(rng);
      unsigned entries = static_cast<unsigned>(rng() % 3);
      std::uint32_t idx = 0;
      for (unsigned k = 0; k < entries; ++k) {
        idx += static_cast<std::uint32_t>(pick(rng, 1, 4));
        Rat v(pick(rng, 1, 9) * (rng() % 2 ? 1 : -1), pick(rng, 1, 9));
        v.canonicalize();
        e.tail.emplace_back(idx, v);
      }
      return Value(e);
    }
  }
  return ring.zero();
}

Value random_nonzero_value(const Ring& ring, std::mt19937_64& rng) {
  for (int tries = 0; tries < 64; ++tries) {
    Value v = random_value(ring, rng);
    if (!ring.is_zero(v)) return v;
  }
  return ring.one();
}

Series random_series(const Ring& ring, std::size_t precision,
                     std::mt19937_64& rng, unsigned zero_percent) {
  std::vector<Value> coeffs;
  coeffs.reserve(precision);
  for (std::size_t i = 0; i < precision; ++i) {
    if (rng() % 100 < zero_percent)
      coeffs.push_back(ring.zero());
    else
      coeffs.push_back(random_value(ring, rng));
  }
  return Series(ring, std::move(coeffs));
}

Series random_series_deep(const Ring& ring, std::size_t precision,
                          std::size_t n, std::mt19937_64& rng) {
  std::vector<Value> coeffs(precision, ring.zero());
  for (std::size_t i = n; i < precision; ++i) {
    if (rng() % 4 == 0)
      coeffs[i] = ring.zero();
    else
      coeffs[i] = random_value(ring, rng);
  }
  return Series(ring, std::move(coeffs));
}

namespace {

using clock_type = std::chrono::steady_clock;

class Checker {
 public:
  Checker() : start_(clock_type::now()) {}

  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (failures_ <= 3) {
        if (!sample_.empty()) sample_ += "; ";
        sample_ += what;
      }
    }
  }

  void note(const std::string& text) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += text;
  }

  SuiteResult finish(const std::string& name) {
    SuiteResult r;
    r.name = name;
    r.passed = failures_ == 0;
    r.checks = checks_;
    r.millis = std::chrono::duration<double, std::milli>(clock_type::now() -
                                                         start_)
                   .count();
    if (failures_ > 0)
      r.detail = std::to_string(failures_) + " failed: " + sample_;
    else
      r.detail = notes_;
    return r;
  }

 private:
  clock_type::time_point start_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string sample_;
  std::string notes_;
};

std::vector<Ring> axiom_rings() {
  return {Ring::integers(), Ring::rationals(), Ring::modular(Int(7)),
          Ring::padic(Int(2), 16), Ring::erdos()};
}

// --- criterion 1 -----------------------------------------------------------

SuiteResult suite_group_axioms() {
  Checker c;
  for (const Ring& ring : axiom_rings()) {
    std::mt19937_64 rng(1001);
    const std::size_t prec = 24;
    for (int t = 0; t < 1000; ++t) {
      Series f = random_series(ring, prec, rng);
      Series g = random_series(ring, prec, rng);
      Series h = random_series(ring, prec, rng);
      c.require(compose(compose(f, g), h) == compose(f, compose(g, h)),
                "associativity over " + ring.selector());
      Series id = Series::identity(ring, prec);
      c.require(compose(f, id) == f && compose(id, f) == f,
                "identity law over " + ring.selector());
      Series fi = invert(f);
      c.require(compose(f, fi) == id && compose(fi, f) == id,
                "inverse law over " + ring.selector());
    }
  }
  return c.finish("group-axioms");
}

// --- criterion 2 -----------------------------------------------------------

SuiteResult suite_abelianization() {
  Checker c;
  for (const Ring& ring : {Ring::rationals(), Ring::modular(Int(5))}) {
    std::mt19937_64 rng(1002);
    for (std::size_t n = 0; n <= 8; ++n) {
      std::size_t prec = n + 3;
      for (int t = 0; t < 200; ++t) {
        Series f = random_series_deep(ring, prec, n, rng);
        Series g = random_series_deep(ring, prec, n, rng);
        Value lhs = abelian_coefficient(compose(f, g), n);
        Value rhs =
            ring.add(abelian_coefficient(f, n), abelian_coefficient(g, n));
        c.require(ring.eq(lhs, rhs),
                  "additivity at level " + std::to_string(n) + " over " +
                      ring.selector());
        c.require(ring.eq(abelian_coefficient(invert(f), n),
                          ring.negate(abelian_coefficient(f, n))),
                  "inverse negates the level-" + std::to_string(n) +
                      " coefficient over " + ring.selector());
      }
    }
  }
  return c.finish("abelianization");
}

// --- criterion 3 -----------------------------------------------------------

SuiteResult suite_commutator_filtration() {
  Checker c;
  for (const Ring& ring : {Ring::rationals(), Ring::modular(Int(3))}) {
    std::mt19937_64 rng(1003);
    for (std::size_t n = 0; n <= 5; ++n) {
      std::size_t prec = 2 * n + 6;
      for (int t = 0; t < 200; ++t) {
        Series f = random_series_deep(ring, prec, n, rng);
        Series g = random_series_deep(ring, prec, n, rng);
        Series com = commutator(f, g);
        c.require(depth(com).n >= std::min(prec, 2 * n + 2),
                  "commutator containment at depth " + std::to_string(n) +
                      " over " + ring.selector());
      }
      for (int t = 0; t < 50; ++t) {
        Value cv = random_value(ring, rng);
        CommutatorWitness w =
            commutator_level_witness(ring, n, cv, 2 * n + 3);
        c.require(depth(w.com).n >= 2 * n + 2,
                  "witness containment at n=" + std::to_string(n));
        c.require(ring.eq(w.com.coeff(2 * n + 3), cv),
                  "witness level coefficient at n=" + std::to_string(n) +
                      " over " + ring.selector());
      }
    }
  }
  // Behavior over non-prime moduli is recorded, not asserted.
  for (const Int& q : {Int(4), Int(9)}) {
    Ring ring = Ring::modular(q);
    std::mt19937_64 rng(1033);
    std::size_t held = 0, total = 0;
    for (std::size_t n = 0; n <= 3; ++n) {
      for (int t = 0; t < 50; ++t) {
        Series f = random_series_deep(ring, 2 * n + 6, n, rng);
        Series g = random_series_deep(ring, 2 * n + 6, n, rng);
        if (depth(commutator(f, g)).n >= 2 * n + 2) ++held;
        ++total;
      }
    }
    c.note("containment over " + ring.selector() + " held in " +
           std::to_string(held) + "/" + std::to_string(total) +
           " samples (informational)");
  }
  return c.finish("commutator-filtration");
}

// --- criterion 4 -----------------------------------------------------------

SuiteResult suite_binomial_root_lemma() {
  Checker c;
  const std::size_t len = 64;
  Ring zint = Ring::integers();
  for (unsigned s = 2; s <= 8; ++s) {
    BinomialRootTable table = binomial_root_table(s, len);
    c.require(table.betas.size() == len, "table length for s=" + std::to_string(s));
    c.require(table.betas[0] == Int(s), "beta_1 = s for s=" + std::to_string(s));
    Int s_int(s);
    for (std::size_t i = 0; i < len; ++i)
      c.require(mpz_divisible_p(table.betas[i].get_mpz_t(),
                                s_int.get_mpz_t()) != 0,
                "s | beta_" + std::to_string(i + 1) + " for s=" +
                    std::to_string(s));

    // (1 + sum beta_i z^i)^s = 1 + s^2 z, checked on truncations.
    detail::Poly u = detail::zero_poly(zint, len);
    u[0] = zint.one();
    for (std::size_t i = 1; i <= len; ++i) u[i] = Value(table.betas[i - 1]);
    detail::Poly us = detail::poly_pow_trunc(zint, u, s, len);
    c.require(zint.eq(us[0], zint.one()), "constant term for s=" + std::to_string(s));
    c.require(zint.eq(us[1], zint.from_int(static_cast<long>(s) * s)),
              "linear term s^2 for s=" + std::to_string(s));
    bool higher_vanish = true;
    for (std::size_t d = 2; d <= len; ++d)
      if (!zint.is_zero(us[d])) higher_vanish = false;
    c.require(higher_vanish, "higher terms vanish for s=" + std::to_string(s));

    std::vector<Rat> oracle = binomial_root_reference(s, len);
    for (std::size_t i = 0; i < len; ++i) {
      c.require(oracle[i].get_den() == 1,
                "oracle integrality at s=" + std::to_string(s));
      c.require(oracle[i].get_num() == table.betas[i],
                "recurrence equals oracle at s=" + std::to_string(s) +
                    ", index " + std::to_string(i + 1));
    }
  }
  return c.finish("binomial-root-lemma");
}

// --- criterion 5 -----------------------------------------------------------

SuiteResult suite_compression_homomorphism() {
  Checker c;
  std::vector<Ring> rings = {Ring::integers(), Ring::rationals(),
                             Ring::modular(Int(2)), Ring::modular(Int(3))};
  for (const Ring& ring : rings) {
    std::mt19937_64 rng(1005);
    for (unsigned s = 1; s <= 5; ++s) {
      for (int t = 0; t < 10; ++t) {
        std::size_t m = 12;
        Series f = random_series(ring, m, rng);
        Series g = random_series(ring, m, rng);
        Series cf = compress(f, s);
        c.require(cf.precision() == s * m + s - 1,
                  "output precision for s=" + std::to_string(s) + " over " +
                      ring.selector());
        c.require(in_grid_subgroup(cf, s),
                  "image in the grid subgroup for s=" + std::to_string(s));
        c.require(compose(cf, compress(g, s)) == compress(compose(f, g), s),
                  "homomorphism for s=" + std::to_string(s) + " over " +
                      ring.selector());
        for (std::size_t n : {std::size_t(1), std::size_t(4), m}) {
          c.require(project(cf, s * n + s - 1) == compress(project(f, n), s),
                    "projection coherence at n=" + std::to_string(n));
        }
      }
      // Leading-term law: first nonzero index n maps to s^(2n-1) a_n at
      // index n*s.
      for (std::size_t n = 1; n <= 6; ++n) {
        Series f = random_series_deep(ring, 8, n - 1, rng);
        std::vector<Value> coeffs = f.coeffs();
        coeffs[n - 1] = random_nonzero_value(ring, rng);
        f = Series(ring, std::move(coeffs));
        Series cf = compress(f, s);
        Int factor;
        mpz_ui_pow_ui(factor.get_mpz_t(), s, 2 * n - 1);
        Value expect = ring.mul(ring.from_int(factor), f.coeff(n));
        c.require(ring.eq(cf.coeff(n * s), expect),
                  "leading term law n=" + std::to_string(n) + " s=" +
                      std::to_string(s) + " over " + ring.selector());
        for (std::size_t i = 1; i < n * s; ++i)
          c.require(ring.is_zero(cf.coeff(i)),
                    "terms below the leading index vanish");
      }
    }
  }
  return c.finish("compression-homomorphism");
}

// --- criterion 6 -----------------------------------------------------------

SuiteResult suite_compression_roundtrip() {
  Checker c;
  Ring ring = Ring::rationals();
  std::mt19937_64 rng(1006);
  for (unsigned s = 1; s <= 4; ++s) {
    for (int t = 0; t < 500; ++t) {
      Series f = random_series(ring, 10, rng);
      Series cf = compress(f, s);
      c.require(decompress(cf, s) == f,
                "decompress(compress(f)) = f at s=" + std::to_string(s));
      Value s2 = ring.from_int(static_cast<long>(s) * s);
      c.require(theta_only(dilate(f, s2), s) == cf,
                "compression factors through theta and dilation at s=" +
                    std::to_string(s));
    }
    // compress(decompress(g)) = g on the grid subgroup
    for (int t = 0; t < 100; ++t) {
      std::size_t m = 12;
      std::vector<Value> coeffs(m, ring.zero());
      for (std::size_t j = 1; j * s <= m; ++j)
        coeffs[j * s - 1] = random_value(ring, rng);
      Series g(ring, std::move(coeffs));
      Series back = compress(decompress(g, s), s);
      std::size_t keep = std::min(back.precision(), g.precision());
      c.require(project(back, keep) == project(g, keep),
                "compress(decompress(g)) = g at s=" + std::to_string(s));
    }
  }
  return c.finish("compression-roundtrip");
}

// --- criterion 7 -----------------------------------------------------------

SuiteResult suite_dilation_laws() {
  Checker c;
  for (const Ring& ring : axiom_rings()) {
    std::mt19937_64 rng(1007);
    for (int t = 0; t < 500; ++t) {
      std::size_t m = 10;
      Series f = random_series(ring, m, rng);
      Series g = random_series(ring, m, rng);
      Value tv = random_value(ring, rng);
      Value rv = random_value(ring, rng);
      c.require(dilate(f, ring.one()) == f,
                "unit dilation is the identity over " + ring.selector());
      c.require(dilate(compose(f, g), tv) ==
                    compose(dilate(f, tv), dilate(g, tv)),
                "dilation is an endomorphism over " + ring.selector());
      c.require(dilate(dilate(f, tv), rv) == dilate(f, ring.mul(tv, rv)),
                "dilation composition law over " + ring.selector());
    }
  }
  // Injectivity evidence over the integers (sampled, not asserted as a
  // theorem for general rings).
  Ring zint = Ring::integers();
  std::mt19937_64 rng(1070);
  for (int t = 0; t < 200; ++t) {
    Series f = random_series(zint, 8, rng);
    Series g = random_series(zint, 8, rng);
    if (f == g) continue;
    Value tv = zint.from_int(pick(rng, 1, 9));
    c.require(!(dilate(f, tv) == dilate(g, tv)),
              "nonzero dilation separates distinct series");
    unsigned s = static_cast<unsigned>(pick(rng, 1, 4));
    c.require(!(compress(f, s) == compress(g, s)),
              "compression separates distinct series");
  }
  return c.finish("dilation-laws");
}

// --- criterion 8 -----------------------------------------------------------

SuiteResult suite_compressibility() {
  Checker c;
  Ring ring = Ring::integers();
  std::mt19937_64 rng(1008);
  for (std::size_t n = 0; n <= 10; ++n) {
    for (int t = 0; t < 100; ++t) {
      Series f = random_series(ring, 6, rng);
      EndomorphismDescriptor endo = compression_into(n);
      c.require(endo.kind == EndomorphismDescriptor::Kind::Compression &&
                    endo.s == n + 1,
                "compression_into picks s = n+1");
      Series image = apply(endo, f);
      c.require(depth(image).n >= n,
                "image lies in the depth-" + std::to_string(n) +
                    " neighborhood");
    }
  }
  return c.finish("compressibility");
}

// --- criterion 9 -----------------------------------------------------------

SuiteResult suite_roots() {
  Checker c;
  Ring ring = Ring::rationals();
  std::mt19937_64 rng(1009);
  for (unsigned k = 1; k <= 5; ++k) {
    for (int t = 0; t < 20; ++t) {
      Series f = random_series(ring, 16, rng);
      Series root = kth_root(f, k);
      c.require(power(root, k) == f,
                "power(root, k) = f at k=" + std::to_string(k));
      Rat inv_k(1, k);
      inv_k.canonicalize();
      Series via_log = exp_field(scale(log_series(f), ring.from_rational(inv_k)));
      c.require(via_log == root,
                "coefficient solve equals exp/log route at k=" +
                    std::to_string(k));
      Series again = kth_root(power(f, static_cast<long>(k)), k);
      c.require(again == f, "root of the k-th power returns f at k=" +
                                std::to_string(k));
    }
  }
  // frozen oracle: sqrt of x + x^2 begins x + 1/2 x^2 - 1/4 x^3 + 1/4 x^4
  Series base = parse_series("x + x^2", ring, 6);
  Series r2 = kth_root(base, 2);
  const char* expected[] = {"1/2", "-1/4", "1/4", "-5/16", "27/64", "-9/16"};
  for (std::size_t i = 1; i <= 6; ++i)
    c.require(ring.eq(r2.coeff(i), ring.parse(expected[i - 1])),
              "square root of x+x^2, coefficient " + std::to_string(i));
  // roots respect depth and divide the abelianization coefficient
  for (unsigned k = 2; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 4; ++n) {
      Series f = random_series_deep(ring, 12, n, rng);
      Series root = kth_root(f, k);
      c.require(depth(root).n >= n, "root stays at depth n");
      Rat inv_k(1, k);
      inv_k.canonicalize();
      c.require(ring.eq(abelian_coefficient(root, n),
                        ring.mul(ring.from_rational(inv_k),
                                 abelian_coefficient(f, n))),
                "root divides the graded coefficient by k");
    }
  }
  // compatibility with theta over the rationals
  for (unsigned s = 2; s <= 3; ++s)
    for (unsigned k = 2; k <= 3; ++k) {
      Series f = random_series(ring, 8, rng);
      c.require(kth_root(theta_only(f, s), k) ==
                    theta_only(kth_root(f, k), s),
                "theta commutes with roots");
    }
  return c.finish("roots");
}

// --- criterion 10 ----------------------------------------------------------

SuiteResult suite_exp_log() {
  Checker c;
  Ring ring = Ring::rationals();
  std::mt19937_64 rng(1010);
  for (int t = 0; t < 400; ++t) {
    VectorField v(ring, random_series(ring, 16, rng).coeffs());
    c.require(log_series(exp_field(v)) == v, "log after exp is the identity");
    Series f = random_series(ring, 16, rng);
    c.require(exp_field(log_series(f)) == f, "exp after log is the identity");
  }
  Ring erd = Ring::erdos();
  std::mt19937_64 rng2(1110);
  for (int t = 0; t < 100; ++t) {
    VectorField v(erd, random_series(erd, 12, rng2).coeffs());
    c.require(log_series(exp_field(v)) == v,
              "log after exp over the sequence ring");
    Series f = random_series(erd, 12, rng2);
    c.require(exp_field(log_series(f)) == f,
              "exp after log over the sequence ring");
  }
  // closed-form flow: exp(c e_1) = x/(1 - c x)
  for (int t = 0; t < 20; ++t) {
    Rat cv = random_rat(rng);
    VectorField v = scale(VectorField::basis(ring, 1, 16), Value(cv));
    Series flow = exp_field(v);
    Rat expect(1);
    bool ok = true;
    for (std::size_t i = 1; i <= 16; ++i) {
      expect *= cv;
      if (!ring.eq(flow.coeff(i), Value(expect))) ok = false;
    }
    c.require(ok, "flow of c e_1 is the geometric series");
  }
  return c.finish("exp-log");
}

// --- criterion 11 ----------------------------------------------------------

SuiteResult suite_witt_layer() {
  Checker c;
  Ring ring = Ring::rationals();
  const std::size_t bound = 24;
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t m = 1; m <= 12; ++m) {
      VectorField lhs = witt_bracket(VectorField::basis(ring, n, bound),
                                     VectorField::basis(ring, m, bound));
      VectorField rhs = scale(VectorField::basis(ring, n + m, bound),
                              ring.from_int(static_cast<long>(m) -
                                            static_cast<long>(n)));
      c.require(lhs == rhs, "bracket rule at (" + std::to_string(n) + "," +
                                std::to_string(m) + ")");
    }
  std::mt19937_64 rng(1011);
  for (int t = 0; t < 100; ++t) {
    VectorField v(ring, random_series(ring, bound, rng).coeffs());
    VectorField w(ring, random_series(ring, bound, rng).coeffs());
    c.require(witt_bracket(v, w) ==
                  scale(witt_bracket(w, v), ring.from_int(-1)),
              "antisymmetry");
    c.require(witt_bracket(v, v).is_zero(), "self-bracket vanishes");
  }
  // Jacobi on basis triples with a+b+c within the bound
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = 1; b <= 6; ++b)
      for (std::size_t cc = 1; cc <= 6; ++cc) {
        if (a + b + cc > bound) continue;
        VectorField ea = VectorField::basis(ring, a, bound);
        VectorField eb = VectorField::basis(ring, b, bound);
        VectorField ec = VectorField::basis(ring, cc, bound);
        VectorField sum = add(
            add(witt_bracket(ea, witt_bracket(eb, ec)),
                witt_bracket(eb, witt_bracket(ec, ea))),
            witt_bracket(ec, witt_bracket(ea, eb)));
        c.require(sum.is_zero(), "Jacobi identity at (" + std::to_string(a) +
                                     "," + std::to_string(b) + "," +
                                     std::to_string(cc) + ")");
      }
  // theta_star is a Lie homomorphism in the truncation-safe regime
  for (unsigned s = 1; s <= 4; ++s)
    for (std::size_t a = 1; a <= 3; ++a)
      for (std::size_t b = 1; b <= 3; ++b) {
        if (s * (a + b) > bound || a == b) continue;
        VectorField ea = VectorField::basis(ring, a, bound);
        VectorField eb = VectorField::basis(ring, b, bound);
        c.require(witt_bracket(theta_star(ea, s), theta_star(eb, s)) ==
                      theta_star(witt_bracket(ea, eb), s),
                  "theta_star homomorphism at s=" + std::to_string(s));
      }
  // the worked identity: both sides of the s=2 case at (1,2) equal e_6/2
  VectorField left = witt_bracket(theta_star(VectorField::basis(ring, 1, 8), 2),
                                  theta_star(VectorField::basis(ring, 2, 8), 2));
  Rat half(1, 2);
  half.canonicalize();
  c.require(left == scale(VectorField::basis(ring, 6, 8),
                          ring.from_rational(half)),
            "quarter of [e_2, e_4] is e_6/2");
  return c.finish("witt-layer");
}

// --- criterion 12 ----------------------------------------------------------

SuiteResult suite_finite_quotients() {
  Checker c;
  struct Case {
    unsigned long p;
    std::size_t max_m;
  };
  for (Case cs : {Case{2, 4}, Case{3, 3}}) {
    for (std::size_t m = 1; m <= cs.max_m; ++m) {
      Ring ring = Ring::modular(Int(cs.p));
      std::vector<Series> all = enumerate_quotient(ring, m);
      Int expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), cs.p, m);
      c.require(Int(static_cast<unsigned long>(all.size())) == expected,
                "count p^m at p=" + std::to_string(cs.p) + ", m=" +
                    std::to_string(m));
      bool sorted = true;
      for (std::size_t i = 1; i < all.size(); ++i)
        if (format_series_list(all[i - 1]) >= format_series_list(all[i]))
          sorted = false;
      c.require(sorted, "enumeration is lexicographically sorted");

      auto member = [&all](const Series& s) {
        for (const Series& e : all)
          if (e == s) return true;
        return false;
      };
      bool closed = true, inverses = true, orders = true;
      for (const Series& f : all) {
        if (!member(invert(f))) inverses = false;
        auto ord = element_order(f);
        if (!ord) {
          orders = false;
        } else {
          unsigned long o = *ord;
          while (o % cs.p == 0) o /= cs.p;
          if (o != 1) orders = false;
        }
        for (const Series& g : all)
          if (!member(compose(f, g))) closed = false;
      }
      c.require(closed, "closure under composition");
      c.require(inverses, "closure under inversion");
      c.require(orders, "every order is a power of p");
    }
  }
  Ring z2 = Ring::modular(Int(2));
  Series f = parse_series("x + x^2", z2, 2);
  auto ord = element_order(f);
  c.require(ord && *ord == 2, "x + x^2 has order 2 in the level-2 quotient");
  return c.finish("finite-quotients");
}

// --- criterion 13 ----------------------------------------------------------

SuiteResult suite_residual_finiteness() {
  Checker c;
  Ring ring = Ring::integers();
  std::mt19937_64 rng(1013);
  for (const long pv : {2L, 3L, 5L}) {
    Int p(pv);
    for (int t = 0; t < 100; ++t) {
      Series f = random_series(ring, 8, rng);
      if (f.is_identity()) {
        std::vector<Value> coeffs = f.coeffs();
        coeffs[static_cast<std::size_t>(pick(rng, 0, 7))] =
            ring.from_int(pick(rng, 1, 50));
        f = Series(ring, std::move(coeffs));
      }
      QuotientWitness w = separating_quotient(f, p);
      c.require(!w.image.is_identity(),
                "witness image is not the identity (p=" + std::to_string(pv) +
                    ")");
      c.require(w.image.precision() == w.m, "witness level matches the image");
      // independent re-reduction of the first nonzero coefficient
      Int pj;
      mpz_ui_pow_ui(pj.get_mpz_t(), static_cast<unsigned long>(pv), w.j);
      Int lead = std::get<Int>(f.coeff(w.m));
      c.require(Int(lead % pj) != 0,
                "first nonzero coefficient survives reduction mod p^j");
      bool earlier_zero = true;
      for (std::size_t i = 1; i < w.m; ++i)
        if (!ring.is_zero(f.coeff(i))) earlier_zero = false;
      c.require(earlier_zero, "witness level is the first nonzero index");
    }
  }
  return c.finish("residual-finiteness");
}

// --- criterion 14 ----------------------------------------------------------

SuiteResult suite_bench_sanity() {
  Checker c;
  Ring ring = Ring::modular(Int((1L << 31) - 1));
  std::vector<BenchRow> rows = run_bench(
      {16, 64, 256}, ring, {ComposeKernel::Horner, ComposeKernel::PowerTable});
  c.require(rows.size() == 6, "one row per kernel per size");
  for (const BenchRow& r : rows) {
    c.require(r.kernel == "horner" || r.kernel == "power-table",
              "kernel name is well-formed");
    c.require(r.repetitions >= 1 && r.nanos > 0, "timing row is populated");
  }
  std::string csv = bench_csv(rows);
  c.require(csv.rfind("kernel,precision,repetitions,nanos\n", 0) == 0,
            "CSV header");
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  c.require(lines == 7, "CSV has a header and six rows");
  for (std::size_t pos = csv.find('\n') + 1; pos < csv.size();) {
    std::size_t end = csv.find('\n', pos);
    std::string_view line(csv.data() + pos, end - pos);
    std::size_t commas = 0;
    for (char ch : line)
      if (ch == ',') ++commas;
    c.require(commas == 3, "CSV row has four fields");
    pos = end + 1;
  }
  return c.finish("bench-sanity");
}

// --- extra: ring axioms ------------------------------------------------------

SuiteResult suite_ring_axioms() {
  Checker c;
  for (const Ring& ring : axiom_rings()) {
    std::mt19937_64 rng(1015);
    for (int t = 0; t < 1000; ++t) {
      Value a = random_value(ring, rng);
      Value b = random_value(ring, rng);
      Value d = random_value(ring, rng);
      c.require(ring.eq(ring.add(ring.add(a, b), d),
                        ring.add(a, ring.add(b, d))),
                "additive associativity over " + ring.selector());
      c.require(ring.eq(ring.mul(ring.mul(a, b), d),
                        ring.mul(a, ring.mul(b, d))),
                "multiplicative associativity over " + ring.selector());
      c.require(ring.eq(ring.mul(a, b), ring.mul(b, a)),
                "commutativity over " + ring.selector());
      c.require(ring.eq(ring.mul(a, ring.add(b, d)),
                        ring.add(ring.mul(a, b), ring.mul(a, d))),
                "distributivity over " + ring.selector());
      c.require(ring.eq(ring.add(a, ring.zero()), a) &&
                    ring.eq(ring.mul(a, ring.one()), a),
                "identities over " + ring.selector());
      c.require(ring.eq(ring.add(a, ring.negate(a)), ring.zero()),
                "additive inverse over " + ring.selector());
    }
  }
  // exact division recovers the factor
  for (const Ring& ring : {Ring::integers(), Ring::rationals()}) {
    std::mt19937_64 rng(1016);
    for (int t = 0; t < 500; ++t) {
      Value a = random_value(ring, rng);
      Value b = random_nonzero_value(ring, rng);
      auto q = ring.try_exact_divide(ring.mul(a, b), b);
      c.require(q && ring.eq(*q, a),
                "exact division recovers the factor over " + ring.selector());
    }
  }
  // coefficient-wise reduction is a ring homomorphism
  {
    std::mt19937_64 rng(1017);
    Ring zint = Ring::integers();
    for (const auto& [p, j] : std::vector<std::pair<long, unsigned>>{
             {2, 3}, {3, 2}, {5, 1}}) {
      Int pj;
      mpz_ui_pow_ui(pj.get_mpz_t(), static_cast<unsigned long>(p), j);
      Ring target = Ring::modular(pj);
      for (int t = 0; t < 300; ++t) {
        Int a(pick(rng, -99, 99));
        Int b(pick(rng, -99, 99));
        c.require(target.eq(target.from_int(Int(a + b)),
                            target.add(target.from_int(a), target.from_int(b))),
                  "reduction respects addition");
        c.require(target.eq(target.from_int(Int(a * b)),
                            target.mul(target.from_int(a), target.from_int(b))),
                  "reduction respects multiplication");
      }
    }
    // and therefore reduce_coefficients respects composition
    for (int t = 0; t < 50; ++t) {
      Series f = random_series(zint, 8, rng);
      Series g = random_series(zint, 8, rng);
      c.require(reduce_coefficients(compose(f, g), Int(3), 2) ==
                    compose(reduce_coefficients(f, Int(3), 2),
                            reduce_coefficients(g, Int(3), 2)),
                "reduction commutes with composition");
    }
  }
  return c.finish("ring-axioms");
}

const std::vector<Suite>& suites_impl() {
  static const std::vector<Suite> suites = {
      {"group-axioms", 1,
       "group laws at precision 24 over five coefficient rings",
       suite_group_axioms},
      {"abelianization", 2,
       "the level-n coefficient is additive on depth-n elements",
       suite_abelianization},
      {"commutator-filtration", 3,
       "commutators of depth-n elements reach depth 2n+2 with prescribed "
       "leading coefficient",
       suite_commutator_filtration},
      {"binomial-root-lemma", 4,
       "integrality and divisibility of the (1+s^2 z)^(1/s) tables",
       suite_binomial_root_lemma},
      {"compression-homomorphism", 5,
       "compressions are grid-valued homomorphisms with the leading-term law",
       suite_compression_homomorphism},
      {"compression-roundtrip", 6,
       "decompression inverts compression; compression factors through theta",
       suite_compression_roundtrip},
      {"dilation-laws", 7, "dilation composition and endomorphism laws",
       suite_dilation_laws},
      {"compressibility", 8,
       "step-(n+1) compression lands inside the depth-n neighborhood",
       suite_compressibility},
      {"roots", 9, "unique k-th roots over the rationals, two routes",
       suite_roots},
      {"exp-log", 10, "flow exponential and its inverse", suite_exp_log},
      {"witt-layer", 11, "bracket rule, Jacobi identity, theta_star",
       suite_witt_layer},
      {"finite-quotients", 12,
       "exhaustive finite quotient groups over prime fields",
       suite_finite_quotients},
      {"residual-finiteness", 13,
       "separating finite quotients for nonidentity integer series",
       suite_residual_finiteness},
      {"bench-sanity", 14, "kernel agreement and CSV shape",
       suite_bench_sanity},
      {"ring-axioms", 0, "coefficient ring axioms and exact division",
       suite_ring_axioms},
  };
  return suites;
}

}  // namespace

const std::vector<Suite>& all_suites() { return suites_impl(); }

const Suite* find_suite(const std::string& name) {
  for (const Suite& s : all_suites())
    if (s.name == name) return &s;
  return nullptr;
}

std::string format_result_line(const SuiteResult& r, int criterion) {
  std::string line = r.passed ? "PASS" : "FAIL";
  if (criterion > 0)
    line += " criterion " + std::to_string(criterion);
  line += " " + r.name + ": " + std::to_string(r.checks) + " checks, " +
          std::to_string(static_cast<long long>(r.millis)) + " ms";
  if (!r.detail.empty()) line += " [" + r.detail + "]";
  return line;
}

}  // namespace jsub
