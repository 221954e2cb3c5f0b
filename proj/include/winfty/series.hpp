#pragma once

#include "winfty/rational.hpp"

#include <stdexcept>
#include <vector>

namespace winfty {

// Truncated formal power series with coefficients in R (x^0..x^order).
// R must be default-constructible to zero, constructible from Rational,
// and provide +=, *, *(Rational), is_zero().
template <class R>
class PowerSeriesT {
public:
  PowerSeriesT() : c_(1) {}
  explicit PowerSeriesT(int order) : c_(static_cast<size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("PowerSeriesT: negative order");
  }

  static PowerSeriesT constant(const R& v, int order) {
    PowerSeriesT s(order);
    s.c_[0] = v;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  R& operator[](int i) { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  PowerSeriesT truncated(int order) const {
    PowerSeriesT s(order);
    for (int i = 0; i <= std::min(order, this->order()); ++i) s.c_[i] = c_[i];
    return s;
  }

  PowerSeriesT& operator+=(const PowerSeriesT& o) {
    for (int i = 0; i <= std::min(order(), o.order()); ++i) c_[i] += o.c_[i];
    return *this;
  }
  PowerSeriesT& operator-=(const PowerSeriesT& o) {
    for (int i = 0; i <= std::min(order(), o.order()); ++i) c_[i] += o.c_[i] * Rational(-1);
    return *this;
  }
  friend PowerSeriesT operator+(PowerSeriesT a, const PowerSeriesT& b) { a += b; return a; }
  friend PowerSeriesT operator-(PowerSeriesT a, const PowerSeriesT& b) { a -= b; return a; }

  friend PowerSeriesT operator*(const PowerSeriesT& a, const PowerSeriesT& b) {
    PowerSeriesT out(std::min(a.order(), b.order()));
    for (int i = 0; i <= a.order(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= out.order() && j <= b.order(); ++j) {
        if (b.c_[j].is_zero()) continue;
        out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  PowerSeriesT& scale(const Rational& k) {
    for (auto& x : c_) x = x * k;
    return *this;
  }

  // exp of a series with zero constant term, truncated at this order.
  PowerSeriesT exp() const {
    if (!c_[0].is_zero()) throw std::invalid_argument("PowerSeriesT::exp: nonzero constant term");
    PowerSeriesT acc = constant(R(Rational(1)), order());
    PowerSeriesT pw = acc;
    for (int j = 1; j <= order(); ++j) {
      pw = pw * (*this);
      if (pw.is_zero()) break;
      PowerSeriesT term = pw;
      term.scale(Rational(1) / factorial(static_cast<unsigned>(j)));
      acc += term;
    }
    return acc;
  }

  PowerSeriesT pow(unsigned k) const {
    PowerSeriesT acc = constant(R(Rational(1)), order());
    for (unsigned i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
  }

  friend bool operator==(const PowerSeriesT& a, const PowerSeriesT& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PowerSeriesT& a, const PowerSeriesT& b) { return !(a == b); }

private:
  std::vector<R> c_;
};

using PowerSeries = PowerSeriesT<Rational>;

// num/den with den having a nonzero constant term; exact, truncated at min order.
PowerSeries series_divide(const PowerSeries& num, const PowerSeries& den);

// e^{s x} truncated at the given order.
PowerSeries series_exp_linear(const Rational& s, int order);

// e^x - 1 truncated at the given order.
PowerSeries series_em1(int order);

// (e^{s x} - 1)/(e^x - 1) via factoring one x out of both sides; exact.
PowerSeries series_em1_ratio(const Rational& s, int order);

}  // namespace winfty
