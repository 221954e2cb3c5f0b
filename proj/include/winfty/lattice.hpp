#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace winfty {

// Rank-2N lattice with ordered basis (alpha_1..alpha_N, beta_1..beta_N) and
// Gram form <alpha_i,alpha_j> = delta_ij, <beta_i,beta_j> = -delta_ij,
// <alpha_i,beta_j> = 0. Basis indices 0..N-1 are the alpha_i, N..2N-1 the beta_i.
struct LatticeConfig {
  int N = 1;
  explicit LatticeConfig(int n) : N(n) {
    if (n < 1) throw std::invalid_argument("LatticeConfig: N must be >= 1");
  }
  int dim() const { return 2 * N; }
  // +1 for alpha directions, -1 for beta directions
  int gram_sign(int basis) const { return basis < N ? 1 : -1; }
};

class LatticeVector {
public:
  LatticeVector() = default;
  explicit LatticeVector(const LatticeConfig& cfg) : c_(cfg.dim(), 0) {}
  explicit LatticeVector(std::vector<long> coords) : c_(std::move(coords)) {}

  static LatticeVector zero(const LatticeConfig& cfg) { return LatticeVector(cfg); }
  static LatticeVector alpha(const LatticeConfig& cfg, int i);      // 1-based i
  static LatticeVector beta(const LatticeConfig& cfg, int i);       // 1-based i
  static LatticeVector gamma(const LatticeConfig& cfg, int i);      // alpha_i + beta_i
  static LatticeVector basis(const LatticeConfig& cfg, int b);      // 0-based basis index

  int dim() const { return static_cast<int>(c_.size()); }
  long operator[](int b) const { return c_[b]; }
  long& operator[](int b) { return c_[b]; }
  const std::vector<long>& coords() const { return c_; }
  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { a += b; return a; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { a -= b; return a; }
  friend LatticeVector operator-(const LatticeVector& a);
  friend LatticeVector operator*(long k, LatticeVector a);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return a.c_ != b.c_; }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.c_ < b.c_; }

  std::string str() const;

private:
  std::vector<long> c_;
};

// Gram pairing sum_alpha x_i y_i - sum_beta x_i y_i. Throws on dimension mismatch.
long pairing(const LatticeVector& x, const LatticeVector& y);

// Integer-valued bilinear form B inducing the 2-cocycle eps(x,y) = (-1)^{B(x,y)}.
// B is strictly upper triangular with ones inside the alpha block and inside the
// beta block, zeros across blocks. This choice is bilinear (so Eq.-style cocycle
// identities hold automatically), gives eps(x,y)eps(y,x) = (-1)^{<x,y>} whenever
// x and y both have even norm, makes eps identically 1 on the isotropic
// gamma-sublattice, and keeps eps(alpha_i,beta_j)eps(beta_j,alpha_i) = +1.
struct CocycleTable {
  int N;
  std::vector<long> B;  // row-major dim x dim

  static CocycleTable standard(const LatticeConfig& cfg);
  long bform(const LatticeVector& x, const LatticeVector& y) const;
};

// eps(x,y) = (-1)^{B(x,y)} with B the standard cocycle table.
int epsilon(const LatticeVector& x, const LatticeVector& y);

}  // namespace winfty
