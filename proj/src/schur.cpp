#include "winfty/schur.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace winfty {

SparsePoly SparsePoly::variable(int k) {
  if (k < 1) throw std::invalid_argument("SparsePoly::variable: 1-based index");
  SparsePoly p;
  std::vector<unsigned> e(static_cast<size_t>(k), 0);
  e[static_cast<size_t>(k) - 1] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

void SparsePoly::add_term(std::vector<unsigned> exps, const Rational& c) {
  if (c.is_zero()) return;
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
  auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<unsigned> e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

SparsePoly operator*(const SparsePoly& a, const Rational& k) {
  SparsePoly out;
  if (k.is_zero()) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, c * k);
  return out;
}

Rational SparsePoly::eval(const std::vector<Rational>& values) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= values.size()) throw std::invalid_argument("SparsePoly::eval: missing value");
      for (unsigned j = 0; j < e[i]; ++j) t *= values[i];
    }
    acc += t;
  }
  return acc;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << c.str();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
    first = false;
  }
  return os.str();
}

namespace {

std::shared_mutex g_schur_mutex;
std::vector<SchurPolynomial> g_schur_cache;  // index r

}  // namespace

const SchurPolynomial& schur_poly(unsigned r) {
  {
    std::shared_lock lk(g_schur_mutex);
    if (r < g_schur_cache.size()) return g_schur_cache[r];
  }
  std::unique_lock lk(g_schur_mutex);
  if (g_schur_cache.empty()) {
    SchurPolynomial p0;
    p0.r = 0;
    p0.terms = SparsePoly(Rational(1));
    g_schur_cache.push_back(std::move(p0));
  }
  while (g_schur_cache.size() <= r) {
    const unsigned n = static_cast<unsigned>(g_schur_cache.size());
    SparsePoly acc;
    for (unsigned k = 1; k <= n; ++k)
      acc += SparsePoly::variable(static_cast<int>(k)) * g_schur_cache[n - k].terms;
    SchurPolynomial pn;
    pn.r = n;
    pn.terms = acc * Rational(1, static_cast<long>(n));
    g_schur_cache.push_back(std::move(pn));
  }
  return g_schur_cache[r];
}

State schur_apply(const HeisenbergVector& h, unsigned r, const State& w) {
  // same recursion as schur_poly, carried out on states; the substituted
  // operators h(-k) all commute
  std::vector<State> s;
  s.reserve(r + 1);
  s.push_back(w);
  for (unsigned n = 1; n <= r; ++n) {
    State acc = State::empty_like(w);
    for (unsigned k = 1; k <= n; ++k) acc += apply_mode(h, -static_cast<long>(k), s[n - k]);
    acc *= Rational(1, static_cast<long>(n));
    s.push_back(std::move(acc));
  }
  return s[r];
}

State schur_state(const HeisenbergVector& h, unsigned r, const State& target) {
  return schur_apply(h, r, target);
}

Rational schur_alternating_eval(const Rational& x, unsigned r) {
  std::vector<Rational> s;
  s.reserve(r + 1);
  s.push_back(Rational(1));
  for (unsigned n = 1; n <= r; ++n) {
    Rational acc(0);
    for (unsigned k = 1; k <= n; ++k) {
      const Rational xk = (k % 2 == 1) ? x : -x;
      acc += xk * s[n - k];
    }
    s.push_back(acc / Rational(static_cast<long>(n)));
  }
  return s[r];
}

}  // namespace winfty
