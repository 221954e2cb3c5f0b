#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winfty/rational.hpp"
#include "winfty/verify.hpp"

using namespace winfty;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(-3, 6).str() == "-1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(2, 6).den() == 3);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational parse round trip") {
  for (const char* s : {"0", "5", "-7", "1/3", "-22/7", "100000000000000000001/3"}) {
    const Rational r = Rational::parse(s);
    CHECK(r.str() == s);
  }
  CHECK(Rational::parse("2/6") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("gen_binomial examples") {
  CHECK(gen_binomial(Rational(17, 5), 0) == Rational(1));
  CHECK(gen_binomial(Rational(-3), 0) == Rational(1));
  for (unsigned k = 0; k <= 8; ++k) {
    const Rational want((k % 2 == 0) ? 1 : -1);
    CHECK(gen_binomial(Rational(-1), k) == want);
  }
  CHECK(gen_binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(gen_binomial(Rational(5), 2) == Rational(10));
  CHECK(gen_binomial(Rational(3), 7) == Rational(0));
}

TEST_CASE("gen_binomial pascal recurrence") {
  const auto r = verify::suite_scalars_pascal(31337, 60);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("falling_factorial_coeffs examples") {
  CHECK(falling_factorial_coeffs(0) == std::vector<Rational>{Rational(1)});
  CHECK(falling_factorial_coeffs(2) == std::vector<Rational>{Rational(0), Rational(-1), Rational(1)});
  CHECK(falling_factorial_coeffs(3) ==
        std::vector<Rational>{Rational(0), Rational(2), Rational(-3), Rational(1)});
}

TEST_CASE("falling_factorial_coeffs evaluation") {
  for (unsigned l = 0; l <= 10; ++l) {
    const auto c = falling_factorial_coeffs(l);
    for (long m = 0; m <= 10; ++m) {
      Rational acc(0), p(1);
      for (unsigned j = 0; j <= l; ++j) {
        acc += c[j] * p;
        p *= Rational(m);
      }
      CHECK(acc == Rational(falling_factorial(m, l)));
    }
  }
}

TEST_CASE("exact field arithmetic randomized") {
  const auto r = verify::suite_scalars_exact(99, 200);
  CHECK_MESSAGE(r.pass, r.detail);
}
