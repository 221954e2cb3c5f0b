#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winfty/series.hpp"

using namespace winfty;

TEST_CASE("exp_linear coefficients") {
  const PowerSeries e = series_exp_linear(Rational(2), 4);
  CHECK(e[0] == Rational(1));
  CHECK(e[1] == Rational(2));
  CHECK(e[2] == Rational(2));
  CHECK(e[3] == Rational(4, 3));
  CHECK(e[4] == Rational(2, 3));
}

TEST_CASE("series multiplication and division invert") {
  PowerSeries a(8);
  a[0] = Rational(1);
  a[1] = Rational(-3, 2);
  a[4] = Rational(7);
  PowerSeries b(8);
  b[0] = Rational(2);
  b[2] = Rational(1, 3);
  b[5] = Rational(-1);
  CHECK(series_divide(a * b, b) == a);
  CHECK_THROWS_AS(series_divide(a, series_em1(8)), std::invalid_argument);
}

TEST_CASE("em1_ratio special values") {
  // (e^x-1)/(e^x-1) = 1
  CHECK(series_em1_ratio(Rational(1), 6) == PowerSeries::constant(Rational(1), 6));
  // (e^{2x}-1)/(e^x-1) = e^x + 1
  PowerSeries want = series_exp_linear(Rational(1), 6);
  want[0] += Rational(1);
  CHECK(series_em1_ratio(Rational(2), 6) == want);
  // (e^{0x}-1)/(e^x-1) = 0
  CHECK(series_em1_ratio(Rational(0), 6).is_zero());
  // (e^{-x}-1)/(e^x-1) = -e^{-x}
  PowerSeries wm = series_exp_linear(Rational(-1), 6);
  wm.scale(Rational(-1));
  CHECK(series_em1_ratio(Rational(-1), 6) == wm);
}

TEST_CASE("exp of a zero-constant series") {
  // exp(log-style check): exp(x) matches the closed form
  PowerSeries x(6);
  x[1] = Rational(1);
  CHECK(x.exp() == series_exp_linear(Rational(1), 6));
  PowerSeries bad = PowerSeries::constant(Rational(1), 3);
  CHECK_THROWS_AS(bad.exp(), std::invalid_argument);
}

TEST_CASE("pow matches repeated multiplication") {
  const PowerSeries e = series_em1(7);
  PowerSeries acc = PowerSeries::constant(Rational(1), 7);
  for (unsigned k = 0; k <= 4; ++k) {
    CHECK(e.pow(k) == acc);
    acc = acc * e;
  }
}
