#include <doctest.h>

#include <stdexcept>

#include "core/errors.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"
#include "core/sexpr.hpp"

using tamp::Rational;

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("0.8") == Rational(4, 5));
  CHECK(Rational::parse("0.05") == Rational(1, 20));
  CHECK(Rational::parse(".25") == Rational(1, 4));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("4/5") == Rational(4, 5));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("1.000") == Rational(1));

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  Rational half = Rational::parse("0.5");
  Rational fourTenths = Rational::parse("0.4");
  Rational oneTenth = Rational::parse("0.1");
  CHECK(half + fourTenths != Rational(1));
  CHECK(half + fourTenths + oneTenth == Rational(1));

  // Fig.-2-style outcome sum.
  CHECK(Rational::parse("0.8") + Rational::parse("0.2") == Rational(1));

  // Deep products stay exact at any depth.
  Rational p = Rational::parse("0.123");
  Rational prod(1);
  for (int i = 0; i < 25; ++i) prod *= p;
  Rational back = prod;
  for (int i = 0; i < 25; ++i) back /= p;
  CHECK(back == Rational(1));
  CHECK(prod > Rational(0));
}

TEST_CASE("rational ordering and printing") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse(Rational(19, 20).str()) == Rational(19, 20));
  CHECK(Rational(1, 2).toDouble() == doctest::Approx(0.5));
}

TEST_CASE("sexpr reader") {
  auto forms = tamp::parseSexprs("(a (b 1 2) c) ; comment\n(d)");
  REQUIRE(forms.size() == 2);
  CHECK(forms[0].isList());
  CHECK(forms[0].items.size() == 3);
  CHECK(forms[0].items[1].items[0].text == "b");
  CHECK(forms[1].headIs("d"));

  CHECK_THROWS_AS(tamp::parseSexpr("(a (b)"), tamp::SyntaxError);
  CHECK_THROWS_AS(tamp::parseSexpr(")"), tamp::SyntaxError);
  try {
    tamp::parseSexprs("(a\n  (b ))(");
    FAIL("expected a syntax error");
  } catch (const tamp::SyntaxError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("rng determinism and forking") {
  tamp::RngStream a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    double u = a.uniform01();
    CHECK(u == b.uniform01());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  bool differs = false;
  for (int i = 0; i < 10; ++i)
    if (a.uniform01() != c.uniform01()) differs = true;
  CHECK(differs);

  tamp::RngStream f1 = tamp::RngStream(7).fork(1, 2);
  tamp::RngStream f2 = tamp::RngStream(7).fork(1, 2);
  tamp::RngStream f3 = tamp::RngStream(7).fork(1, 3);
  CHECK(f1.nextUint() == f2.nextUint());
  CHECK(f1.nextUint() != f3.nextUint());
}
