#include "winfty/weylw.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

namespace winfty {

State e_state(const LatticeConfig& cfg, int i) {
  return State::monomial(cfg, FockMonomial{LatticeVector::gamma(cfg, i), {}});
}

State f_state(const LatticeConfig& cfg, int i) {
  return State::monomial(cfg, FockMonomial{-LatticeVector::gamma(cfg, i), {}});
}

State a_generator_state(const LatticeConfig& cfg, int i) {
  return State::monomial(cfg, FockMonomial{LatticeVector::gamma(cfg, i), {Creation{i - 1, 1}}});
}

State weyl_mode(const WeylIndex& idx, const State& w) {
  const LatticeConfig cfg = w.config();
  if (idx.i < 1 || idx.i > cfg.N) throw std::invalid_argument("weyl_mode: pair index out of range");
  if (w.module_weight())
    throw std::invalid_argument("weyl_mode: the Weyl fields act on V_L only");
  if (idx.starred) return mode(f_state(cfg, idx.i), idx.n - 1, w);
  return mode(a_generator_state(cfg, idx.i), idx.n, w);
}

namespace {

// cached per-monomial Weyl action in the surrogate N=1 system: the field sees
// only the color-i creations, <gamma_i,label>, <alpha_i,label> and the window
struct WeylCacheKey {
  bool starred;
  long g;  // <gamma_i, label>
  long a;  // <alpha_i, label>
  long lo, hi;
  std::vector<Creation> color;  // color-i part in surrogate basis {0,1}
  bool operator<(const WeylCacheKey& o) const {
    if (starred != o.starred) return starred < o.starred;
    if (g != o.g) return g < o.g;
    if (a != o.a) return a < o.a;
    if (lo != o.lo) return lo < o.lo;
    if (hi != o.hi) return hi < o.hi;
    return color < o.color;
  }
};

struct WeylCacheRow {
  long mode;  // internal field index
  std::vector<Creation> creations;  // surrogate basis {0,1}
  Rational coeff;
};

std::shared_mutex g_weyl_cache_mutex;
std::map<WeylCacheKey, std::vector<WeylCacheRow>> g_weyl_cache;

const std::vector<WeylCacheRow>& weyl_surrogate(const WeylCacheKey& key) {
  {
    std::shared_lock lk(g_weyl_cache_mutex);
    auto it = g_weyl_cache.find(key);
    if (it != g_weyl_cache.end()) return it->second;
  }
  const LatticeConfig scfg(1);
  // surrogate label (a, a-g) reproduces both pairing scalars; eps is trivial at N=1
  LatticeVector slabel({key.a, key.a - key.g});
  const State sw = State::monomial(scfg, FockMonomial{std::move(slabel), key.color});
  const State v = key.starred ? f_state(scfg, 1) : a_generator_state(scfg, 1);
  ModeMap mm = field(v, sw, key.lo, key.hi);
  std::vector<WeylCacheRow> rows;
  for (const auto& [k, st] : mm)
    for (const auto& [m, c] : st.terms()) rows.push_back(WeylCacheRow{k, m.creations, c});
  std::unique_lock lk(g_weyl_cache_mutex);
  return g_weyl_cache.emplace(key, std::move(rows)).first->second;
}

}  // namespace

ModeMap weyl_field(int i, bool starred, const State& w, long lo, long hi) {
  const LatticeConfig cfg = w.config();
  if (i < 1 || i > cfg.N) throw std::invalid_argument("weyl_field: pair index out of range");
  if (w.module_weight())
    throw std::invalid_argument("weyl_field: the Weyl fields act on V_L only");
  const long ilo = starred ? lo - 1 : lo;  // Abar^i(n) = (f^i)_{n-1}
  const long ihi = starred ? hi - 1 : hi;
  const int ba = i - 1, bb = cfg.N + i - 1;
  const LatticeVector shift = starred ? -LatticeVector::gamma(cfg, i) : LatticeVector::gamma(cfg, i);

  ModeMap out;
  for (const auto& [mono, c] : w.terms()) {
    WeylCacheKey key;
    key.starred = starred;
    key.g = mono.label[ba] - mono.label[bb];
    key.a = mono.label[ba];
    key.lo = ilo;
    key.hi = ihi;
    std::vector<Creation> spectators;
    for (const auto& cr : mono.creations) {
      if (cr.basis == ba)
        key.color.push_back(Creation{0, cr.mode});
      else if (cr.basis == bb)
        key.color.push_back(Creation{1, cr.mode});
      else
        spectators.push_back(cr);
    }
    const Rational sign = c * Rational(epsilon(shift, mono.label));
    const LatticeVector new_label = shift + mono.label;
    for (const auto& row : weyl_surrogate(key)) {
      FockMonomial nm;
      nm.label = new_label;
      nm.creations.reserve(row.creations.size() + spectators.size());
      for (const auto& cr : row.creations)
        nm.creations.push_back(Creation{cr.basis == 0 ? ba : bb, cr.mode});
      std::vector<Creation> merged;
      merged.reserve(nm.creations.size() + spectators.size());
      std::merge(nm.creations.begin(), nm.creations.end(), spectators.begin(), spectators.end(),
                 std::back_inserter(merged));
      nm.creations = std::move(merged);
      const long physics_mode = starred ? row.mode + 1 : row.mode;
      auto [it, inserted] = out.try_emplace(physics_mode, State::empty_like(w));
      it->second.add_term(std::move(nm), sign * row.coeff);
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) it = out.erase(it);
    else ++it;
  }
  return out;
}

State build_U(const LatticeConfig& cfg, int i, unsigned k) {
  // via the Weyl modes
  State via_modes = weyl_mode(WeylIndex{i, false, -1},
                              weyl_mode(WeylIndex{i, true, -static_cast<long>(k)}, State::vacuum(cfg)));
  // via the Schur closed form
  const HeisenbergVector mgamma = -HeisenbergVector::gamma(cfg, i);
  State closed = apply_mode(HeisenbergVector::alpha(cfg, i), -1,
                            schur_apply(mgamma, k, State::vacuum(cfg)));
  closed += schur_apply(mgamma, k + 1, State::vacuum(cfg));
  if (via_modes != closed)
    throw inconsistency_error("build_U: Weyl-mode and Schur computations disagree (i=" +
                              std::to_string(i) + ", k=" + std::to_string(k) + ")");
  return closed;
}

namespace {

std::shared_mutex g_wgen_mutex;
std::map<std::pair<int, unsigned>, WGenerator> g_wgen_cache;

}  // namespace

const WGenerator& w_generator(const LatticeConfig& cfg, unsigned k) {
  const std::pair<int, unsigned> key{cfg.N, k};
  {
    std::shared_lock lk(g_wgen_mutex);
    auto it = g_wgen_cache.find(key);
    if (it != g_wgen_cache.end()) return it->second;
  }
  WGenerator g;
  g.k = k;
  g.state = State(cfg);
  for (int i = 1; i <= cfg.N; ++i) {
    g.per_pair.push_back(build_U(cfg, i, k));
    g.state += g.per_pair.back();
  }
  std::unique_lock lk(g_wgen_mutex);
  return g_wgen_cache.try_emplace(key, std::move(g)).first->second;
}

State j_mode(unsigned k, long m, const State& w) {
  const WGenerator& g = w_generator(w.config(), k);
  State out = mode(g.state, m + static_cast<long>(k), w);
  out *= -factorial(k);
  return out;
}

Rational hw_eigenvalue(unsigned k, const Weight& lambda, int N) {
  if (lambda.N() != N) throw std::invalid_argument("hw_eigenvalue: weight length mismatch");
  Rational acc(0);
  for (int i = 1; i <= N; ++i) {
    const Rational mg = -lambda.pair_gamma(i);
    acc += gen_binomial(mg, k + 1) + lambda.alpha_pair[i - 1] * gen_binomial(mg, k);
  }
  return -factorial(k) * acc;
}

}  // namespace winfty
