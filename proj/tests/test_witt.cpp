#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jsub/group.hpp"
#include "jsub/verify.hpp"
#include "jsub/witt.hpp"

using namespace jsub;

namespace {

VectorField rats(const Ring& ring, std::vector<const char*> values) {
  std::vector<Value> comps;
  for (const char* v : values) comps.push_back(ring.parse(v));
  return VectorField(ring, std::move(comps));
}

}  // namespace

TEST_CASE("bracket on basis elements") {
  Ring q = Ring::rationals();
  const std::size_t bound = 8;
  VectorField e1 = VectorField::basis(q, 1, bound);
  VectorField e2 = VectorField::basis(q, 2, bound);
  VectorField e3 = VectorField::basis(q, 3, bound);
  CHECK(witt_bracket(e1, e2) == e3);
  CHECK(witt_bracket(e2, e1) == scale(e3, q.from_int(-1)));
  CHECK(witt_bracket(e1, e1).is_zero());

  // out-of-bound targets are dropped silently
  VectorField e7 = VectorField::basis(q, 7, bound);
  CHECK(witt_bracket(e7, e2).is_zero());

  std::mt19937_64 rng(51);
  for (int t = 0; t < 50; ++t) {
    VectorField v(q, random_series(q, bound, rng).coeffs());
    VectorField w(q, random_series(q, bound, rng).coeffs());
    CHECK(witt_bracket(v, v).is_zero());
    CHECK(witt_bracket(v, w) == scale(witt_bracket(w, v), q.from_int(-1)));
  }
  CHECK_THROWS_AS(
      witt_bracket(e1, VectorField::basis(Ring::rationals(), 1, 9)),
      DomainError);
}

TEST_CASE("theta_star rescales and spreads the basis") {
  Ring q = Ring::rationals();
  VectorField e1 = VectorField::basis(q, 1, 8);
  CHECK(theta_star(e1, 2) == rats(q, {"0", "1/2", "0", "0", "0", "0", "0", "0"}));
  VectorField v = rats(q, {"1", "-2", "3", "0", "0", "0", "0", "0"});
  CHECK(theta_star(v, 1) == v);

  // the worked homomorphism identity: both sides are e_6 / 2
  VectorField e2 = VectorField::basis(q, 2, 8);
  VectorField lhs = witt_bracket(theta_star(e1, 2), theta_star(e2, 2));
  VectorField rhs = theta_star(witt_bracket(e1, e2), 2);
  CHECK(lhs == rhs);
  CHECK(lhs == rats(q, {"0", "0", "0", "0", "0", "1/2", "0", "0"}));

  CHECK_THROWS_AS(theta_star(VectorField::basis(Ring::integers(), 1, 4), 2),
                  DomainError);
  CHECK_THROWS_AS(theta_star(e1, 0), DomainError);
}

TEST_CASE("exponential of simple fields") {
  Ring q = Ring::rationals();
  CHECK(exp_field(VectorField::zero(q, 5)) == Series::identity(q, 5));

  Series flow = exp_field(VectorField::basis(q, 1, 6));
  for (std::size_t i = 1; i <= 6; ++i) CHECK(q.is_one(flow.coeff(i)));

  // exp(c e_1) = x/(1-cx): coefficients c^i
  Value c = q.parse("2/3");
  Series flow_c = exp_field(scale(VectorField::basis(q, 1, 6), c));
  Value expect = q.one();
  for (std::size_t i = 1; i <= 6; ++i) {
    expect = q.mul(expect, c);
    CHECK(q.eq(flow_c.coeff(i), expect));
  }

  CHECK_THROWS_AS(exp_field(VectorField::zero(Ring::integers(), 3)),
                  DomainError);
}

TEST_CASE("logarithm of simple series") {
  Ring q = Ring::rationals();
  CHECK(log_series(Series::identity(q, 5)).is_zero());

  Series ones = parse_series("[1, 1, 1, 1, 1]", q, 5);
  CHECK(log_series(ones) == rats(q, {"1", "0", "0", "0", "0"}));

  // frozen oracle: log(x + x^2) under the time-1 flow normalization
  Series f = parse_series("x + x^2", q, 5);
  CHECK(log_series(f) == rats(q, {"1", "-1", "3/2", "-8/3", "31/6"}));
  CHECK(exp_field(log_series(f)) == f);
}

TEST_CASE("exp and log are mutually inverse") {
  Ring q = Ring::rationals();
  std::mt19937_64 rng(52);
  for (int t = 0; t < 60; ++t) {
    VectorField v(q, random_series(q, 12, rng).coeffs());
    CHECK(log_series(exp_field(v)) == v);
    Series f = random_series(q, 12, rng);
    CHECK(exp_field(log_series(f)) == f);
  }
  Ring e = Ring::erdos();
  std::mt19937_64 rng2(53);
  for (int t = 0; t < 20; ++t) {
    VectorField v(e, random_series(e, 8, rng2).coeffs());
    CHECK(log_series(exp_field(v)) == v);
  }
}

TEST_CASE("k-th roots") {
  Ring q = Ring::rationals();
  CHECK(kth_root(Series::identity(q, 6), 4) == Series::identity(q, 6));

  Series f = parse_series("x + x^2", q, 6);
  Series r2 = kth_root(f, 2);
  CHECK(r2 == parse_series("[1/2, -1/4, 1/4, -5/16, 27/64, -9/16]", q, 6));
  CHECK(power(r2, 2) == f);

  Series r3 = kth_root(project(f, 5), 3);
  CHECK(r3 == parse_series("[1/3, -2/9, 7/27, -10/27, 140/243]", q, 5));
  CHECK(power(r3, 3) == project(f, 5));

  std::mt19937_64 rng(54);
  for (unsigned k = 1; k <= 5; ++k) {
    for (int t = 0; t < 10; ++t) {
      Series g = random_series(q, 10, rng);
      CHECK(power(kth_root(g, k), k) == g);
      CHECK(kth_root(power(g, k), k) == g);
    }
  }

  CHECK_THROWS_AS(kth_root(Series::identity(Ring::integers(), 3), 2),
                  DomainError);
  CHECK_THROWS_AS(kth_root(Series::identity(q, 3), 0), DomainError);
}

TEST_CASE("roots over the sequence ring use the coefficient solve") {
  Ring e = Ring::erdos();
  std::mt19937_64 rng(55);
  for (int t = 0; t < 15; ++t) {
    Series f = random_series(e, 8, rng);
    for (unsigned k : {2u, 3u}) {
      Series r = kth_root(f, k);
      CHECK(power(r, k) == f);
    }
  }
}

TEST_CASE("roots respect the depth filtration") {
  Ring q = Ring::rationals();
  std::mt19937_64 rng(56);
  for (std::size_t n = 1; n <= 4; ++n) {
    Series f = random_series_deep(q, 10, n, rng);
    Series r = kth_root(f, 3);
    CHECK(depth(r).n >= n);
    Rat third(1, 3);
    CHECK(q.eq(abelian_coefficient(r, n),
               q.mul(q.from_rational(third), abelian_coefficient(f, n))));
  }
}

TEST_CASE("field literals parse and format") {
  Ring q = Ring::rationals();
  VectorField v = parse_field("e1 + 2*e2 - 1/2*e4", q, 4);
  CHECK(v == rats(q, {"1", "2", "0", "-1/2"}));
  CHECK(format_field(v) == "e1 + 2*e2 - 1/2*e4");
  CHECK(parse_field(format_field(v), q, 4) == v);
  CHECK(parse_field("[1, 2, 0, -1/2]", q, 4) == v);
  CHECK(format_field_list(v) == "[1, 2, 0, -1/2]");
  CHECK(parse_field("0", q, 3).is_zero());
  CHECK(format_field(VectorField::zero(q, 3)) == "0");
  CHECK(parse_field("-e2", q, 2) == rats(q, {"0", "-1"}));

  CHECK_THROWS_AS(parse_field("e5", q, 4), ParseError);
  CHECK_THROWS_AS(parse_field("e1 + e1", q, 4), ParseError);
  CHECK_THROWS_AS(parse_field("[1, 2]", q, 4), ParseError);
  CHECK_THROWS_AS(parse_field("x + x^2", q, 4), ParseError);
}
