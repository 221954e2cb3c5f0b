#pragma once

#include "winfty/fock.hpp"
#include "winfty/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace winfty {

// Sparse polynomial in the variables x_1, x_2, ... with rational coefficients.
// Keys are exponent vectors (entry k-1 = exponent of x_k) with trailing zeros
// trimmed, so the representation is canonical.
class SparsePoly {
public:
  SparsePoly() = default;
  explicit SparsePoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(std::vector<unsigned>{}, c);
  }
  static SparsePoly variable(int k);  // x_k, 1-based

  const std::map<std::vector<unsigned>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<unsigned> exps, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { a += b; return a; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const Rational& k);

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  // substitute x_k -> values[k-1]
  Rational eval(const std::vector<Rational>& values) const;

  std::string str() const;

private:
  std::map<std::vector<unsigned>, Rational> terms_;
};

// p_r from exp(sum_n x_n/n y^n) = sum_r p_r y^r; every term has weighted
// degree sum k*deg(x_k) equal to r.
struct SchurPolynomial {
  unsigned r = 0;
  SparsePoly terms;
};

// Computed by the recursion r p_r = sum_{k=1..r} x_k p_{r-k}; memoized, safe
// for concurrent readers and concurrent first-writers.
const SchurPolynomial& schur_poly(unsigned r);

// p_r(h(-1), h(-2), ...) applied to an arbitrary state (the substituted
// operators are commuting creations).
State schur_apply(const HeisenbergVector& h, unsigned r, const State& w);

// p_r(h(-1), h(-2), ...) applied to the vacuum/highest-weight vector of the
// target module, here passed as the carrier state itself.
State schur_state(const HeisenbergVector& h, unsigned r, const State& target);

// p_r(x, -x, x, -x, ...); equals gen_binomial(x, r).
Rational schur_alternating_eval(const Rational& x, unsigned r);

}  // namespace winfty
