#include "winfty/fock.hpp"

#include <algorithm>
#include <sstream>

namespace winfty {

HeisenbergVector HeisenbergVector::from_lattice(const LatticeVector& v) {
  std::vector<Rational> c(v.dim());
  for (int i = 0; i < v.dim(); ++i) c[i] = Rational(v[i]);
  return HeisenbergVector(std::move(c));
}

HeisenbergVector HeisenbergVector::basis(const LatticeConfig& cfg, int b) {
  HeisenbergVector h(cfg);
  h.c_[b] = Rational(1);
  return h;
}

HeisenbergVector HeisenbergVector::alpha(const LatticeConfig& cfg, int i) { return basis(cfg, i - 1); }
HeisenbergVector HeisenbergVector::beta(const LatticeConfig& cfg, int i) { return basis(cfg, cfg.N + i - 1); }

HeisenbergVector HeisenbergVector::gamma(const LatticeConfig& cfg, int i) {
  HeisenbergVector h(cfg);
  h.c_[i - 1] = Rational(1);
  h.c_[cfg.N + i - 1] = Rational(1);
  return h;
}

bool HeisenbergVector::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

HeisenbergVector operator-(HeisenbergVector h) {
  for (auto& x : h.c_) x = -x;
  return h;
}

HeisenbergVector operator+(HeisenbergVector a, const HeisenbergVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("HeisenbergVector: dimension mismatch");
  for (int i = 0; i < a.dim(); ++i) a.c_[i] += b.c_[i];
  return a;
}

HeisenbergVector operator*(const Rational& k, HeisenbergVector h) {
  for (auto& x : h.c_) x *= k;
  return h;
}

Rational HeisenbergVector::pair(const HeisenbergVector& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("HeisenbergVector::pair: dimension mismatch");
  const int n = dim() / 2;
  Rational s(0);
  for (int i = 0; i < n; ++i) s += c_[i] * o.c_[i];
  for (int i = n; i < 2 * n; ++i) s -= c_[i] * o.c_[i];
  return s;
}

Rational HeisenbergVector::pair(const LatticeVector& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("HeisenbergVector::pair: dimension mismatch");
  const int n = dim() / 2;
  Rational s(0);
  for (int i = 0; i < n; ++i) s += c_[i] * Rational(o[i]);
  for (int i = n; i < 2 * n; ++i) s -= c_[i] * Rational(o[i]);
  return s;
}

Weight::Weight(std::vector<Rational> a, std::vector<Rational> b)
    : alpha_pair(std::move(a)), beta_pair(std::move(b)) {
  if (alpha_pair.size() != beta_pair.size())
    throw std::invalid_argument("Weight: pairing lists must have equal length");
}

bool Weight::is_zero() const {
  for (const auto& x : alpha_pair)
    if (!x.is_zero()) return false;
  for (const auto& x : beta_pair)
    if (!x.is_zero()) return false;
  return true;
}

Rational Weight::pair(const HeisenbergVector& h) const {
  const int n = N();
  if (h.dim() != 2 * n) throw std::invalid_argument("Weight::pair: dimension mismatch");
  Rational s(0);
  for (int i = 0; i < n; ++i) {
    s += h[i] * alpha_pair[i];
    s += h[n + i] * beta_pair[i];
  }
  return s;
}

long FockMonomial::hdeg() const {
  long d = 0;
  for (const auto& c : creations) d += c.mode;
  return d;
}

long FockMonomial::deg2() const { return pairing(label, label) + 2 * hdeg(); }

void FockMonomial::insert_creation(const Creation& c) {
  creations.insert(std::upper_bound(creations.begin(), creations.end(), c), c);
}

std::string FockMonomial::str() const {
  std::ostringstream os;
  os << label.str();
  for (const auto& c : creations) os << " h" << c.basis << "(-" << c.mode << ")";
  return os.str();
}

State::State(const LatticeConfig& cfg, Weight lambda) : N_(cfg.N) {
  if (lambda.N() != cfg.N) throw std::invalid_argument("State: weight length must equal N");
  if (!lambda.is_zero()) weight_ = std::move(lambda);
}

State State::vacuum(const LatticeConfig& cfg) {
  State s(cfg);
  s.terms_.emplace(FockMonomial{LatticeVector::zero(cfg), {}}, Rational(1));
  return s;
}

State State::highest_weight(const LatticeConfig& cfg, const Weight& lambda) {
  State s(cfg, lambda);
  s.terms_.emplace(FockMonomial{LatticeVector::zero(cfg), {}}, Rational(1));
  return s;
}

State State::monomial(const LatticeConfig& cfg, FockMonomial m, Rational c) {
  if (m.label.dim() != cfg.dim()) throw std::invalid_argument("State::monomial: dimension mismatch");
  State s(cfg);
  if (!c.is_zero()) s.terms_.emplace(std::move(m), std::move(c));
  return s;
}

State State::empty_like(const State& other) {
  State s;
  s.N_ = other.N_;
  s.weight_ = other.weight_;
  return s;
}

void State::add_term(const FockMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void State::add_term(FockMonomial&& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void State::check_compatible(const State& o) const {
  if (N_ != o.N_) throw std::invalid_argument("State: config mismatch");
  if (weight_.has_value() != o.weight_.has_value() ||
      (weight_ && *weight_ != *o.weight_))
    throw std::invalid_argument("State: module mismatch");
}

State& State::operator+=(const State& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

State& State::operator-=(const State& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

State& State::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

bool operator==(const State& a, const State& b) {
  if (a.N_ != b.N_) return false;
  if (a.weight_.has_value() != b.weight_.has_value()) return false;
  if (a.weight_ && *a.weight_ != *b.weight_) return false;
  return a.terms_ == b.terms_;
}

long State::max_hdeg() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.hdeg());
  return d;
}

long State::max_deg2() const {
  long d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const long v = m.deg2();
    d = first ? v : std::max(d, v);
    first = false;
  }
  return d;
}

Rational State::vacuum_coefficient() const {
  FockMonomial empty{LatticeVector::zero(LatticeConfig(N_)), {}};
  auto it = terms_.find(empty);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool State::is_scalar_multiple_of_vacuum(Rational* c) const {
  if (terms_.empty()) {
    if (c) *c = Rational(0);
    return true;
  }
  if (terms_.size() != 1) return false;
  const auto& [m, coeff] = *terms_.begin();
  if (!m.label.is_zero() || !m.creations.empty()) return false;
  if (c) *c = coeff;
  return true;
}

std::string State::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << c.str() << " * " << m.str();
    first = false;
  }
  return os.str();
}

State apply_mode(const HeisenbergVector& h, long n, const State& w) {
  const LatticeConfig cfg = w.config();
  if (h.dim() != cfg.dim()) throw std::invalid_argument("apply_mode: dimension mismatch");
  State out = State::empty_like(w);

  if (n < 0) {
    for (const auto& [m, c] : w.terms()) {
      for (int b = 0; b < cfg.dim(); ++b) {
        if (h[b].is_zero()) continue;
        FockMonomial nm = m;
        nm.insert_creation(Creation{b, -n});
        out.add_term(std::move(nm), c * h[b]);
      }
    }
    return out;
  }

  if (n == 0) {
    for (const auto& [m, c] : w.terms()) {
      Rational eig = h.pair(m.label);
      if (w.module_weight()) eig += w.module_weight()->pair(h);
      out.add_term(m, c * eig);
    }
    return out;
  }

  // n > 0: derivation across the creation multiset; kills the group-algebra part
  for (const auto& [m, c] : w.terms()) {
    for (size_t i = 0; i < m.creations.size(); ++i) {
      const Creation& cr = m.creations[i];
      if (cr.mode != n) continue;
      if (i > 0 && m.creations[i - 1] == cr) continue;  // handle repeats once, with multiplicity
      const Rational hp = h[cr.basis] * Rational(cfg.gram_sign(cr.basis));
      if (hp.is_zero()) continue;
      long mult = 1;
      for (size_t j = i + 1; j < m.creations.size() && m.creations[j] == cr; ++j) ++mult;
      FockMonomial nm = m;
      nm.creations.erase(nm.creations.begin() + static_cast<long>(i));
      out.add_term(std::move(nm), c * hp * Rational(n * mult));
    }
  }
  return out;
}

Rational l0_degree(const FockMonomial& m) {
  return Rational(pairing(m.label, m.label), 2) + Rational(m.hdeg());
}

State lattice_multiply(const LatticeVector& a, const State& w) {
  if (w.module_weight())
    throw std::invalid_argument("lattice_multiply: module-weight states admit no lattice shift");
  if (a.dim() != w.config().dim()) throw std::invalid_argument("lattice_multiply: dimension mismatch");
  State out(w.config());
  for (const auto& [m, c] : w.terms()) {
    FockMonomial nm = m;
    nm.label = a + m.label;
    out.add_term(std::move(nm), c * Rational(epsilon(a, m.label)));
  }
  return out;
}

namespace {

void enumerate_creations(const LatticeConfig& cfg, long budget, int basis, long minmode,
                         std::vector<Creation>& cur, std::vector<FockMonomial>& out) {
  out.push_back(FockMonomial{LatticeVector::zero(cfg), cur});
  for (int b = basis; b < cfg.dim(); ++b) {
    const long start = (b == basis) ? minmode : 1;
    for (long n = start; n <= budget; ++n) {
      cur.push_back(Creation{b, n});
      enumerate_creations(cfg, budget - n, b, n, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<FockMonomial> heisenberg_monomials(const LatticeConfig& cfg, long maxdeg) {
  std::vector<FockMonomial> out;
  std::vector<Creation> cur;
  enumerate_creations(cfg, maxdeg, 0, 1, cur, out);
  return out;
}

}  // namespace winfty
