#include "winfty/lattice.hpp"

#include <sstream>

namespace winfty {

LatticeVector LatticeVector::alpha(const LatticeConfig& cfg, int i) {
  if (i < 1 || i > cfg.N) throw std::invalid_argument("alpha: index out of range");
  LatticeVector v(cfg);
  v.c_[i - 1] = 1;
  return v;
}

LatticeVector LatticeVector::beta(const LatticeConfig& cfg, int i) {
  if (i < 1 || i > cfg.N) throw std::invalid_argument("beta: index out of range");
  LatticeVector v(cfg);
  v.c_[cfg.N + i - 1] = 1;
  return v;
}

LatticeVector LatticeVector::gamma(const LatticeConfig& cfg, int i) {
  LatticeVector v = alpha(cfg, i);
  v.c_[cfg.N + i - 1] = 1;
  return v;
}

LatticeVector LatticeVector::basis(const LatticeConfig& cfg, int b) {
  if (b < 0 || b >= cfg.dim()) throw std::invalid_argument("basis: index out of range");
  LatticeVector v(cfg);
  v.c_[b] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  for (long x : c_)
    if (x != 0) return false;
  return true;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("LatticeVector: dimension mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (c_.size() != o.c_.size()) throw std::invalid_argument("LatticeVector: dimension mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

LatticeVector operator-(const LatticeVector& a) {
  LatticeVector r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

LatticeVector operator*(long k, LatticeVector a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << ")";
  return os.str();
}

long pairing(const LatticeVector& x, const LatticeVector& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("pairing: dimension mismatch");
  const int n = x.dim() / 2;
  long s = 0;
  for (int i = 0; i < n; ++i) s += x[i] * y[i];
  for (int i = n; i < 2 * n; ++i) s -= x[i] * y[i];
  return s;
}

CocycleTable CocycleTable::standard(const LatticeConfig& cfg) {
  CocycleTable t;
  t.N = cfg.N;
  const int d = cfg.dim();
  t.B.assign(static_cast<size_t>(d) * d, 0);
  auto same_block = [&](int i, int j) { return (i < cfg.N) == (j < cfg.N); };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (same_block(i, j)) t.B[static_cast<size_t>(i) * d + j] = 1;
  return t;
}

long CocycleTable::bform(const LatticeVector& x, const LatticeVector& y) const {
  const int d = 2 * N;
  if (x.dim() != d || y.dim() != d) throw std::invalid_argument("CocycleTable: dimension mismatch");
  long s = 0;
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      const long b = B[static_cast<size_t>(i) * d + j];
      if (b != 0 && y[j] != 0) s += x[i] * b * y[j];
    }
  }
  return s;
}

int epsilon(const LatticeVector& x, const LatticeVector& y) {
  if (x.dim() != y.dim() || x.dim() % 2 != 0)
    throw std::invalid_argument("epsilon: dimension mismatch");
  // inline the standard table: ones strictly above the diagonal inside each block
  const int n = x.dim() / 2;
  long s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += x[i] * y[j] + x[n + i] * y[n + j];
  return (s % 2 == 0) ? 1 : -1;
}

}  // namespace winfty
