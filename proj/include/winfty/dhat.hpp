#pragma once

#include "winfty/fock.hpp"
#include "winfty/series.hpp"
#include "winfty/weylw.hpp"

#include <map>
#include <utility>
#include <vector>

namespace winfty {

// Basis operators of the differential-operator Lie algebra:
// J^l(k) = -t^{l+k} d^l and L^l(k) = -t^k D^l with D = t d/dt.
enum class OpKind { J, L };

struct OpBasisKey {
  OpKind kind;
  unsigned l;  // derivative order, >= 0
  long k;      // momentum, any integer
  friend bool operator<(const OpBasisKey& a, const OpBasisKey& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.l != b.l) return a.l < b.l;
    return a.k < b.k;
  }
  friend bool operator==(const OpBasisKey& a, const OpBasisKey& b) {
    return a.kind == b.kind && a.l == b.l && a.k == b.k;
  }
};

// Finite combination of basis operators plus a central coefficient.
class DiffOpElement {
public:
  DiffOpElement() = default;

  static DiffOpElement basis(OpKind kind, unsigned l, long k);
  static DiffOpElement central_element(Rational c);

  const std::map<OpBasisKey, Rational>& terms() const { return terms_; }
  const Rational& central() const { return central_; }
  Rational& central() { return central_; }
  bool is_zero() const { return terms_.empty() && central_.is_zero(); }

  void add_term(const OpBasisKey& key, const Rational& c);

  DiffOpElement& operator+=(const DiffOpElement& o);
  DiffOpElement& operator*=(const Rational& k);
  friend DiffOpElement operator+(DiffOpElement a, const DiffOpElement& b) { a += b; return a; }
  friend DiffOpElement operator*(const Rational& k, DiffOpElement e) { e *= k; return e; }
  friend DiffOpElement operator-(DiffOpElement e) { e *= Rational(-1); return e; }

  friend bool operator==(const DiffOpElement& a, const DiffOpElement& b) {
    return a.terms_ == b.terms_ && a.central_ == b.central_;
  }
  friend bool operator!=(const DiffOpElement& a, const DiffOpElement& b) { return !(a == b); }

  std::string str() const;

private:
  std::map<OpBasisKey, Rational> terms_;
  Rational central_;
};

// The element representing the raw monomial t^tpow d^dord (= -J^dord(tpow-dord)).
DiffOpElement raw_monomial(long tpow, unsigned dord);

// 2-cocycle on monomials: Psi(t^a d^m, t^b d^n) =
// m! n! / (m+n+1)! * Res_{t=0} (t^a)^{(n+1)} (t^b)^{(m)} dt.
Rational psi_monomial(long a, unsigned m, long b, unsigned n);

// Bilinear extension (central parts of the arguments are ignored).
Rational psi(const DiffOpElement& x, const DiffOpElement& y);

// Basis conversions: J^l(k) = sum_j c_j L^j(k) with c = falling_factorial_coeffs(l),
// and back via Stirling numbers of the second kind.
DiffOpElement j_to_l(const DiffOpElement& e);
DiffOpElement l_to_j(const DiffOpElement& e);

// [x, y] as differential operators plus Psi(x,y) * c on the central line;
// the result is normalized to all-J form.
DiffOpElement dhat_bracket(const DiffOpElement& x, const DiffOpElement& y, const Rational& c);

// Delta_lambda(x) = sum_k J^k(0)-eigenvalue * (e^x - 1)^k / k!, truncated.
PowerSeries delta_series(const Weight& lambda, int N, int order);

// Delta_lambda(x) = -sum_i [ (e^{s_i x}-1)/(e^x-1) + t_i e^{s_i x} ] with
// s_i = -<lambda, alpha_i + beta_i>, t_i = <lambda, alpha_i>.
PowerSeries delta_closed_form(const Weight& lambda, int N, int order);

// phi(x) + c written as a finite sum of p_i(x) e^{r_i x} with distinct
// exponents and nonzero (constant) multiplicities.
struct QuasifiniteDecomposition {
  Rational central_charge;  // -N
  // (exponent r_i, multiplicity polynomial coefficients p_i, constant here)
  std::vector<std::pair<Rational, std::vector<Rational>>> terms;

  Rational multiplicity_sum_at_zero() const;
};

// Collects exponents from {s_i} and {s_i + 1}, merges equal ones, prunes zero
// multiplicities; asserts sum p_i(0) = -N and that the reconstructed
// phi(x)/(e^x - 1) matches delta_closed_form through order 10
// (inconsistency_error otherwise).
QuasifiniteDecomposition quasifinite_decompose(const Weight& lambda, int N);

// Highest-weight components lambda_n = n! [x^n] Delta_lambda(x).
struct WeightSeries {
  std::vector<Rational> lambda_n;  // lambda_0..lambda_M
};

WeightSeries weight_components(const Weight& lambda, int N, int order);

// Independent path: measured J^k(0)-eigenvalues on v_lambda pushed through the
// triangular basis change of j_to_l.
WeightSeries weight_components_measured(const Weight& lambda, int N, int order);

// Compares [J^a(m), J^b(n)] as realized operators on every M(1) basis state of
// degree <= deg against the abstract bracket at central charge -N expanded back
// through j_mode.
bool realization_bracket_check(unsigned a, long m, unsigned b, long n, int N, long deg);

}  // namespace winfty
