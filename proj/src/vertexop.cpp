#include "winfty/vertexop.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <shared_mutex>

namespace winfty {

namespace {

constexpr long kNoModes = LONG_MIN / 4;

// Creation-monomial expansion of p_r(a(-1), a(-2), ...) applied to the vacuum,
// cached per (a, r): Schur states against integer lattice directions recur
// constantly in lattice_field.
struct SchurKey {
  std::vector<long> coords;
  unsigned r;
  bool operator<(const SchurKey& o) const {
    if (coords != o.coords) return coords < o.coords;
    return r < o.r;
  }
};

using CreationExpansion = std::vector<std::pair<std::vector<Creation>, Rational>>;

std::shared_mutex g_schur_exp_mutex;
std::map<SchurKey, CreationExpansion> g_schur_exp_cache;

const CreationExpansion& schur_expansion(const LatticeVector& a, unsigned r) {
  SchurKey key{a.coords(), r};
  {
    std::shared_lock lk(g_schur_exp_mutex);
    auto it = g_schur_exp_cache.find(key);
    if (it != g_schur_exp_cache.end()) return it->second;
  }
  const LatticeConfig cfg(a.dim() / 2);
  State s = schur_apply(HeisenbergVector::from_lattice(a), r, State::vacuum(cfg));
  CreationExpansion exp;
  exp.reserve(s.size());
  for (const auto& [m, c] : s.terms()) exp.emplace_back(m.creations, c);
  std::unique_lock lk(g_schur_exp_mutex);
  return g_schur_exp_cache.emplace(std::move(key), std::move(exp)).first->second;
}

std::vector<Creation> merge_creations(const std::vector<Creation>& a, const std::vector<Creation>& b) {
  std::vector<Creation> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

State zero_like(const State& w) { return State::empty_like(w); }

void map_add(ModeMap& acc, long m, State s) {
  if (s.is_zero()) return;
  auto it = acc.find(m);
  if (it == acc.end())
    acc.emplace(m, std::move(s));
  else {
    it->second += s;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// the structural recursion works monomial-by-monomial on v
void field_monomial(const FockMonomial& vm, const Rational& coeff, const State& w,
                    long lo, long hi, ModeMap& out);

}  // namespace

long mode_upper_bound(const State& v, const State& w) {
  if (v.is_zero() || w.is_zero()) return kNoModes;
  long best = kNoModes;
  for (const auto& [vm, vc] : v.terms()) {
    for (const auto& [wm, wc] : w.terms()) {
      const LatticeVector lbl = vm.label + wm.label;
      const long norm = w.module_weight() ? 0 : pairing(lbl, lbl);
      // v_m w = 0 once deg2(v) + deg2(w) - 2m - 2 < <label,label>
      const long num = vm.deg2() + wm.deg2() - 2 - norm;
      const long bound = (num >= 0) ? num / 2 : (num - 1) / 2;  // floor
      best = std::max(best, bound);
    }
  }
  return best;
}

ModeMap lattice_field(const LatticeVector& a, const State& w, long lo, long hi) {
  ModeMap out;
  if (w.is_zero() || lo > hi) return out;
  const LatticeConfig cfg = w.config();
  if (a.dim() != cfg.dim()) throw std::invalid_argument("lattice_field: dimension mismatch");
  if (w.module_weight() && !a.is_zero())
    throw std::invalid_argument("lattice_field: module-weight states admit no lattice operator");

  // bucket by the z^a exponent <a, label>, applying e_a and the cocycle sign
  std::map<long, State> buckets;
  for (const auto& [wm, wc] : w.terms()) {
    const long s0 = pairing(a, wm.label);
    FockMonomial shifted = wm;
    shifted.label = a + wm.label;
    auto [it, inserted] = buckets.try_emplace(s0, zero_like(w));
    it->second.add_term(std::move(shifted), wc * Rational(epsilon(a, wm.label)));
  }

  const HeisenbergVector ah = HeisenbergVector::from_lattice(a);
  for (auto& [s0, bucket] : buckets) {
    // annihilation exponential exp(-sum_n a(n)/n z^{-n}): powers of the
    // operator T keyed by the total annihilation weight d
    std::map<long, State> acc{{0, bucket}};
    std::map<long, State> cur = acc;
    for (long j = 1; !cur.empty(); ++j) {
      std::map<long, State> next;
      for (const auto& [d, st] : cur) {
        const long maxn = st.max_hdeg();
        for (long n = 1; n <= maxn; ++n) {
          State t = apply_mode(ah, n, st);
          if (t.is_zero()) continue;
          t *= Rational(-1, n * j);  // the extra 1/j builds T^j / j!
          auto [it, inserted] = next.try_emplace(d + n, t);
          if (!inserted) it->second += t;
        }
      }
      for (auto& [d, st] : next) {
        if (st.is_zero()) continue;
        auto [it, inserted] = acc.try_emplace(d, st);
        if (!inserted) it->second += st;
      }
      cur = std::move(next);
    }

    // creation exponential: coefficient of z^r is p_r(a(-1), a(-2), ...)
    for (const auto& [d, st] : acc) {
      if (st.is_zero()) continue;
      const long zexp = s0 - d;
      const long mhigh = std::min(hi, -1 - zexp);
      for (long m = lo; m <= mhigh; ++m) {
        const long r = -m - 1 - zexp;
        const auto& exp = schur_expansion(a, static_cast<unsigned>(r));
        State contrib = zero_like(w);
        for (const auto& [crs, c] : exp)
          for (const auto& [sm, sc] : st.terms()) {
            FockMonomial nm{sm.label, merge_creations(sm.creations, crs)};
            contrib.add_term(std::move(nm), sc * c);
          }
        map_add(out, m, std::move(contrib));
      }
    }
  }
  return out;
}

State lattice_mode(const LatticeVector& a, long m, const State& w) {
  ModeMap f = lattice_field(a, w, m, m);
  auto it = f.find(m);
  return it == f.end() ? zero_like(w) : std::move(it->second);
}

namespace {

void field_monomial(const FockMonomial& vm, const Rational& coeff, const State& w,
                    long lo, long hi, ModeMap& out) {
  if (lo > hi || w.is_zero()) return;
  if (vm.creations.empty()) {
    ModeMap lf = lattice_field(vm.label, w, lo, hi);
    for (auto& [m, st] : lf) {
      st *= coeff;
      map_add(out, m, std::move(st));
    }
    return;
  }

  // peel one creation h_b(-n); its field is sum_j (-1)^{n-1} C(j,n-1) h_b(j-n+1) z^{-j-1}
  const Creation cr = vm.creations.front();
  const long n = cr.mode;
  FockMonomial rest = vm;
  rest.creations.erase(rest.creations.begin());
  const LatticeConfig vcfg(vm.label.dim() / 2);
  const State rest_state = State::monomial(vcfg, rest);
  const HeisenbergVector hb = HeisenbergVector::basis(w.config(), cr.basis);
  const Rational sign((n - 1) % 2 == 0 ? 1 : -1);

  // annihilation part: j >= n-1 places h_b(j-n+1) next to w first
  const long jhigh = n - 1 + w.max_hdeg();
  for (long j = n - 1; j <= jhigh; ++j) {
    const Rational cj = sign * int_binomial(j, static_cast<unsigned>(n - 1));
    State wj = apply_mode(hb, j - n + 1, w);
    if (wj.is_zero()) continue;
    ModeMap inner;
    field_monomial(rest, coeff * cj, wj, lo - j - 1, hi - j - 1, inner);
    for (auto& [mi, st] : inner) map_add(out, mi + j + 1, std::move(st));
  }

  // creation part: j < 0, i.e. inner mode index m' = m-j-1 ranges up to the
  // grading bound of (rest, w)
  const long bound = mode_upper_bound(rest_state, w);
  if (bound < lo) return;
  ModeMap inner;
  field_monomial(rest, coeff, w, lo, bound, inner);
  for (const auto& [mp, st] : inner) {
    for (long m = lo; m <= std::min(hi, mp); ++m) {
      const long j = m - mp - 1;
      const Rational cj = sign * gen_binomial(Rational(j), static_cast<unsigned>(n - 1));
      if (cj.is_zero()) continue;
      State t = apply_mode(hb, j - n + 1, st);
      t *= cj;
      map_add(out, m, std::move(t));
    }
  }
}

}  // namespace

ModeMap field(const State& v, const State& w, long lo, long hi) {
  if (v.module_weight())
    throw std::invalid_argument("field: v must lie in a vacuum module");
  if (v.N() != w.N()) throw std::invalid_argument("field: config mismatch");
  ModeMap out;
  for (const auto& [vm, vc] : v.terms()) field_monomial(vm, vc, w, lo, hi, out);
  return out;
}

State mode(const State& v, long m, const State& w) {
  ModeMap f = field(v, w, m, m);
  auto it = f.find(m);
  return it == f.end() ? State::empty_like(w) : std::move(it->second);
}

State nop(const State& a, const State& b) {
  if (a.module_weight() || b.module_weight())
    throw std::invalid_argument("nop: both factors must lie in a vacuum module");
  return mode(a, -1, b);
}

State commutator_residual(const State& a, long m, const State& b, long n, const State& w) {
  State res = mode(a, m, mode(b, n, w)) - mode(b, n, mode(a, m, w));
  const long jmax = mode_upper_bound(a, b);
  if (jmax >= 0) {
    ModeMap ab = field(a, b, 0, jmax);
    for (const auto& [j, s] : ab) {
      const Rational c = int_binomial(m, static_cast<unsigned>(j));
      if (c.is_zero()) continue;
      State t = mode(s, m + n - j, w);
      t *= c;
      res -= t;
    }
  }
  return res;
}

VirasoroConfig VirasoroConfig::standard(const LatticeConfig& cfg) {
  VirasoroConfig vc;
  for (int i = 1; i <= cfg.N; ++i) {
    vc.basis.push_back(HeisenbergVector::alpha(cfg, i));
    vc.norms.push_back(1);
  }
  for (int i = 1; i <= cfg.N; ++i) {
    vc.basis.push_back(HeisenbergVector::beta(cfg, i));
    vc.norms.push_back(-1);
  }
  return vc;
}

void VirasoroConfig::validate() const {
  if (basis.size() != norms.size())
    throw std::invalid_argument("VirasoroConfig: basis/norm size mismatch");
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      const Rational p = basis[i].pair(basis[j]);
      const Rational expect = (i == j) ? Rational(norms[i]) : Rational(0);
      if (p != expect) throw std::invalid_argument("VirasoroConfig: Gram matrix is not diagonal +-1");
    }
  }
}

State VirasoroConfig::omega(const LatticeConfig& cfg) const {
  State acc(cfg);
  const State vac = State::vacuum(cfg);
  for (size_t i = 0; i < basis.size(); ++i) {
    State t = apply_mode(basis[i], -1, apply_mode(basis[i], -1, vac));
    t *= Rational(norms[i], 2);
    acc += t;
  }
  return acc;
}

State virasoro_mode(long n, const State& w) {
  return virasoro_mode(VirasoroConfig::standard(w.config()), n, w);
}

State virasoro_mode(const VirasoroConfig& vc, long n, const State& w) {
  return mode(vc.omega(w.config()), n + 1, w);
}

}  // namespace winfty
