#include "winfty/series.hpp"

namespace winfty {

PowerSeries series_divide(const PowerSeries& num, const PowerSeries& den) {
  if (den[0].is_zero()) throw std::invalid_argument("series_divide: denominator has zero constant term");
  const int order = std::min(num.order(), den.order());
  PowerSeries q(order);
  for (int n = 0; n <= order; ++n) {
    Rational acc = n <= num.order() ? num[n] : Rational(0);
    for (int k = 0; k < n; ++k) acc -= q[k] * den[n - k];
    q[n] = acc / den[0];
  }
  return q;
}

PowerSeries series_exp_linear(const Rational& s, int order) {
  PowerSeries e(order);
  Rational t(1);
  e[0] = t;
  for (int n = 1; n <= order; ++n) {
    t = t * s / Rational(n);
    e[n] = t;
  }
  return e;
}

PowerSeries series_em1(int order) {
  PowerSeries e = series_exp_linear(Rational(1), order);
  e[0] = Rational(0);
  return e;
}

PowerSeries series_em1_ratio(const Rational& s, int order) {
  // both e^{sx}-1 and e^x-1 vanish at x=0; divide the x-shifted series
  const int M = order + 1;
  PowerSeries num = series_exp_linear(s, M);
  PowerSeries den = series_em1(M);
  PowerSeries num_shift(order), den_shift(order);
  for (int n = 0; n <= order; ++n) {
    num_shift[n] = num[n + 1];
    den_shift[n] = den[n + 1];
  }
  return series_divide(num_shift, den_shift);
}

}  // namespace winfty
