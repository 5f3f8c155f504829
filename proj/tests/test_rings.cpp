#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jsub/ring.hpp"
#include "jsub/verify.hpp"

using namespace jsub;

TEST_CASE("integer and rational arithmetic") {
  Ring z = Ring::integers();
  CHECK(z.eq(z.add(z.from_int(2), z.from_int(3)), z.from_int(5)));

  Ring q = Ring::rationals();
  Value half = q.parse("1/2");
  Value two_thirds = q.parse("2/3");
  CHECK(q.eq(q.mul(half, two_thirds), q.parse("1/3")));
  CHECK(q.format(q.parse("2/4")) == "1/2");
  CHECK(q.format(q.parse("-6/4")) == "-3/2");
}

TEST_CASE("modular arithmetic reduces canonically") {
  Ring m7 = Ring::modular(Int(7));
  CHECK(m7.eq(m7.mul(m7.from_int(3), m7.from_int(5)), m7.one()));
  CHECK(m7.format(m7.parse("-1")) == "6");
  CHECK(m7.format(m7.from_int(21)) == "0");
}

TEST_CASE("fixed-precision p-adic ring is arithmetic mod p^N") {
  Ring zp = Ring::padic(Int(2), 5);
  CHECK(zp.modulus() == 32);
  CHECK(zp.eq(zp.add(zp.from_int(30), zp.from_int(5)), zp.from_int(3)));
  CHECK(zp.try_invert(zp.from_int(3)).has_value());   // odd: a unit
  CHECK(!zp.try_invert(zp.from_int(6)).has_value());  // even: not a unit
  CHECK_THROWS_AS(Ring::padic(Int(6), 3), DomainError);
}

TEST_CASE("exact division") {
  Ring z = Ring::integers();
  CHECK(z.eq(*z.try_exact_divide(z.from_int(6), z.from_int(3)), z.from_int(2)));
  CHECK(!z.try_exact_divide(z.from_int(7), z.from_int(3)).has_value());
  CHECK_THROWS_AS(z.try_exact_divide(z.from_int(1), z.zero()), DomainError);

  Ring q = Ring::rationals();
  CHECK(q.eq(*q.try_exact_divide(q.from_int(7), q.from_int(3)), q.parse("7/3")));

  // in Z/6 division by a non-unit is never unique
  Ring m6 = Ring::modular(Int(6));
  CHECK(m6.eq(*m6.try_exact_divide(m6.from_int(3), m6.from_int(5)),
              m6.from_int(3 * 5)));  // 5 is self-inverse mod 6
  CHECK(!m6.try_exact_divide(m6.zero(), m6.from_int(2)).has_value());
}

TEST_CASE("integer units") {
  Ring z = Ring::integers();
  CHECK(z.eq(*z.try_invert(z.from_int(-1)), z.from_int(-1)));
  CHECK(!z.try_invert(z.from_int(2)).has_value());
  CHECK(!Ring::rationals().try_invert(Ring::rationals().zero()).has_value());
}

TEST_CASE("sequence ring multiplication follows the head/tail law") {
  Ring e = Ring::erdos();
  Value x = e.parse("(2; 1:1)");
  Value y = e.parse("(3; 2:1)");
  CHECK(e.format(e.mul(x, y)) == "(6; 1:3, 2:2)");

  // disjoint supports with zero heads annihilate
  Value a = e.parse("(0; 1:1)");
  Value b = e.parse("(0; 2:1)");
  CHECK(e.is_zero(e.mul(a, b)));

  // the unit is (1; )
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    Value v = random_value(e, rng);
    CHECK(e.eq(e.mul(e.one(), v), v));
    CHECK(e.eq(e.mul(v, e.one()), v));
  }
}

TEST_CASE("sequence ring is commutative and associative") {
  Ring e = Ring::erdos();
  std::mt19937_64 rng(8);
  for (int t = 0; t < 1000; ++t) {
    Value a = random_value(e, rng);
    Value b = random_value(e, rng);
    Value c = random_value(e, rng);
    CHECK(e.eq(e.mul(a, b), e.mul(b, a)));
    CHECK(e.eq(e.mul(e.mul(a, b), c), e.mul(a, e.mul(b, c))));
    CHECK(e.eq(e.mul(a, e.add(b, c)), e.add(e.mul(a, b), e.mul(a, c))));
  }
}

TEST_CASE("sequence ring division and inversion") {
  Ring e = Ring::erdos();
  Value v = e.parse("(2; 1:-1)");  // coordinate 1 equals 1, head 2
  auto inv = e.try_invert(v);
  REQUIRE(inv.has_value());
  CHECK(e.is_one(e.mul(v, *inv)));

  // a zero coordinate kills unique division
  CHECK(!e.try_invert(e.parse("(1; 1:-1)")).has_value());
  CHECK(!e.try_invert(e.parse("(0; 1:1)")).has_value());
  CHECK_THROWS_AS(e.try_exact_divide(e.one(), e.zero()), DomainError);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    Value a = random_value(e, rng);
    Value b = random_nonzero_value(e, rng);
    auto q = e.try_exact_divide(e.mul(a, b), b);
    if (q) CHECK(e.eq(*q, a));
  }
}

TEST_CASE("values are rejected by foreign rings") {
  Ring z = Ring::integers();
  Ring q = Ring::rationals();
  CHECK_THROWS_AS(z.add(z.one(), q.one()), DomainError);
  CHECK_THROWS_AS(z.from_rational(Rat(1, 2)), DomainError);
  Rat half(1, 2);
  CHECK(q.eq(q.from_rational(half), q.parse("1/2")));
}

TEST_CASE("ring selectors round-trip") {
  for (const char* sel : {"int", "rat", "mod:7", "padic:2:16", "erdos"}) {
    Ring r = Ring::parse_selector(sel);
    CHECK(r.selector() == sel);
  }
  CHECK_THROWS_AS(Ring::parse_selector("float"), ParseError);
  CHECK_THROWS_AS(Ring::parse_selector("mod:x"), ParseError);
  CHECK_THROWS_AS(Ring::modular(Int(0)), DomainError);
}

TEST_CASE("literal round-trips on random values") {
  std::mt19937_64 rng(10);
  for (const Ring& r : {Ring::integers(), Ring::rationals(),
                        Ring::modular(Int(11)), Ring::padic(Int(3), 4),
                        Ring::erdos()}) {
    for (int t = 0; t < 200; ++t) {
      Value v = random_value(r, rng);
      CHECK(r.eq(r.parse(r.format(v)), v));
    }
  }
  CHECK_THROWS_AS(Ring::integers().parse("12a"), ParseError);
  CHECK_THROWS_AS(Ring::rationals().parse("1/0"), ParseError);
  CHECK_THROWS_AS(Ring::erdos().parse("(1; 2:1, 2:3)"), ParseError);
}

TEST_CASE("rationals are canonical: lowest terms, positive denominator") {
  Ring q = Ring::rationals();
  Value v = q.mul(q.parse("2/3"), q.parse("3/2"));
  CHECK(q.format(v) == "1");
  CHECK(q.format(q.add(q.parse("1/6"), q.parse("1/3"))) == "1/2");
}
