#pragma once

#include "winfty/lattice.hpp"
#include "winfty/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace winfty {

// Element of h = Q tensor L in the (alpha_1..alpha_N, beta_1..beta_N) basis.
class HeisenbergVector {
public:
  HeisenbergVector() = default;
  explicit HeisenbergVector(const LatticeConfig& cfg) : c_(cfg.dim()) {}
  explicit HeisenbergVector(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  static HeisenbergVector from_lattice(const LatticeVector& v);
  static HeisenbergVector basis(const LatticeConfig& cfg, int b);  // 0-based
  static HeisenbergVector alpha(const LatticeConfig& cfg, int i);  // 1-based
  static HeisenbergVector beta(const LatticeConfig& cfg, int i);
  static HeisenbergVector gamma(const LatticeConfig& cfg, int i);

  int dim() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int b) const { return c_[b]; }
  Rational& operator[](int b) { return c_[b]; }
  bool is_zero() const;

  friend HeisenbergVector operator-(HeisenbergVector h);
  friend HeisenbergVector operator+(HeisenbergVector a, const HeisenbergVector& b);
  friend HeisenbergVector operator*(const Rational& k, HeisenbergVector h);
  friend bool operator==(const HeisenbergVector& a, const HeisenbergVector& b) { return a.c_ == b.c_; }
  friend bool operator<(const HeisenbergVector& a, const HeisenbergVector& b) { return a.c_ < b.c_; }

  // Gram pairing <h, h'> with the (N,N) signature form.
  Rational pair(const HeisenbergVector& o) const;
  Rational pair(const LatticeVector& o) const;

private:
  std::vector<Rational> c_;
};

// lambda given by its pairings (<lambda,alpha_i>, <lambda,beta_i>); defines M(1,lambda).
struct Weight {
  std::vector<Rational> alpha_pair;  // length N
  std::vector<Rational> beta_pair;   // length N

  Weight() = default;
  Weight(std::vector<Rational> a, std::vector<Rational> b);
  static Weight zero(int n) { return Weight(std::vector<Rational>(n), std::vector<Rational>(n)); }

  int N() const { return static_cast<int>(alpha_pair.size()); }
  bool is_zero() const;
  // <h, lambda> for h in coefficient form (pairings already carry the form)
  Rational pair(const HeisenbergVector& h) const;
  Rational pair_gamma(int i) const { return alpha_pair[i - 1] + beta_pair[i - 1]; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.alpha_pair == b.alpha_pair && a.beta_pair == b.beta_pair;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
};

// One creation generator h_basis(-mode), mode >= 1.
struct Creation {
  int basis;
  long mode;
  friend bool operator==(const Creation& a, const Creation& b) { return a.basis == b.basis && a.mode == b.mode; }
  friend bool operator<(const Creation& a, const Creation& b) {
    return a.basis != b.basis ? a.basis < b.basis : a.mode < b.mode;
  }
};

// iota(a) tensor h_1(-n_1)...h_k(-n_k); creations kept sorted by (basis, mode).
struct FockMonomial {
  LatticeVector label;
  std::vector<Creation> creations;

  long hdeg() const;             // n_1 + ... + n_k
  long deg2() const;             // <label,label> + 2*hdeg (twice the conformal degree)
  void insert_creation(const Creation& c);  // keeps sorted order
  std::string str() const;

  friend bool operator==(const FockMonomial& a, const FockMonomial& b) {
    return a.label == b.label && a.creations == b.creations;
  }
  friend bool operator<(const FockMonomial& a, const FockMonomial& b) {
    if (a.label != b.label) return a.label < b.label;
    return a.creations < b.creations;
  }
};

// Finite rational linear combination of Fock monomials. The universal carrier:
// V_L when module_weight is absent (labels range over L), M(1,lambda) when
// present (all labels zero). Zero coefficients are never stored.
class State {
public:
  State() : N_(0) {}
  explicit State(const LatticeConfig& cfg) : N_(cfg.N) {}
  State(const LatticeConfig& cfg, Weight lambda);

  static State vacuum(const LatticeConfig& cfg);                         // the state 1 = iota(e_0)
  static State highest_weight(const LatticeConfig& cfg, const Weight& lambda);  // v_lambda
  static State monomial(const LatticeConfig& cfg, FockMonomial m, Rational c = Rational(1));
  // zero state of the same module (config + weight) without copying any terms
  static State empty_like(const State& other);

  int N() const { return N_; }
  LatticeConfig config() const { return LatticeConfig(N_); }
  const std::optional<Weight>& module_weight() const { return weight_; }
  const std::map<FockMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const FockMonomial& m, const Rational& c);
  void add_term(FockMonomial&& m, const Rational& c);

  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(const Rational& k);
  friend State operator+(State a, const State& b) { a += b; return a; }
  friend State operator-(State a, const State& b) { a -= b; return a; }
  friend State operator*(const Rational& k, State s) { s *= k; return s; }
  friend State operator-(State s) { s *= Rational(-1); return s; }

  friend bool operator==(const State& a, const State& b);
  friend bool operator!=(const State& a, const State& b) { return !(a == b); }

  long max_hdeg() const;  // 0 for the zero state
  long max_deg2() const;  // most negative = 0 fallback for the zero state

  // Coefficient of the bare vacuum/highest-weight monomial.
  Rational vacuum_coefficient() const;
  // True when the state equals c * (empty monomial); c may be zero.
  bool is_scalar_multiple_of_vacuum(Rational* c = nullptr) const;

  std::string str() const;

private:
  void check_compatible(const State& o) const;
  int N_;
  std::optional<Weight> weight_;
  std::map<FockMonomial, Rational> terms_;
};

// Action of h(n) with c = 1: creation for n < 0, <h, lambda + label> for n = 0,
// derivation by the bracket [h(n), h'(-n)] = n<h,h'> for n > 0.
State apply_mode(const HeisenbergVector& h, long n, const State& w);

// Conformal degree of a monomial: <label,label>/2 + sum of modes. For
// module-weight states labels are zero, so this is the relative grading.
Rational l0_degree(const FockMonomial& m);

// e_a action: label b -> a+b with coefficient eps(a,b). Rejects module-weight states.
State lattice_multiply(const LatticeVector& a, const State& w);

// All zero-label monomials with hdeg <= maxdeg (the M(1) basis slice), in
// canonical order.
std::vector<FockMonomial> heisenberg_monomials(const LatticeConfig& cfg, long maxdeg);

}  // namespace winfty
