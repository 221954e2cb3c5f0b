#include "winfty/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace winfty::verify {

namespace {

std::string show(const State& s) {
  std::string t = s.str();
  if (t.size() > 160) t = t.substr(0, 157) + "...";
  return t;
}

CheckResult pass(std::string id) { return CheckResult{std::move(id), true, ""}; }
CheckResult fail(std::string id, std::string detail) { return CheckResult{std::move(id), false, std::move(detail)}; }

// deterministic parallel sweep: inputs are pregenerated, slot i records the
// failure message for work item i (empty = pass)
void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const size_t nt = std::min<size_t>(hw ? hw : 1, n);
  if (nt <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(nt);
  for (size_t t = 0; t < nt; ++t)
    threads.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : threads) t.join();
}

CheckResult collect(std::string id, const std::vector<std::string>& slots) {
  for (const auto& s : slots)
    if (!s.empty()) return fail(std::move(id), s);
  return pass(std::move(id));
}

}  // namespace

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  return lo + static_cast<long>(eng() % static_cast<unsigned long>(hi - lo + 1));
}

Rational Rng::rational(long max_num, long max_den) {
  return Rational(uniform(-max_num, max_num), uniform(1, max_den));
}

Weight Rng::weight(int N) {
  std::vector<Rational> a, b;
  for (int i = 0; i < N; ++i) a.push_back(rational());
  for (int i = 0; i < N; ++i) b.push_back(rational());
  return Weight(std::move(a), std::move(b));
}

HeisenbergVector Rng::heis(const LatticeConfig& cfg) {
  HeisenbergVector h(cfg);
  bool nonzero = false;
  for (int b = 0; b < cfg.dim(); ++b) {
    if (uniform(0, 2) == 0) continue;
    h[b] = rational(3, 2);
    if (!h[b].is_zero()) nonzero = true;
  }
  if (!nonzero) h[0] = Rational(1);
  return h;
}

LatticeVector Rng::label(const LatticeConfig& cfg, long box, bool even_norm) {
  LatticeVector v(cfg);
  long sum = 0;
  for (int b = 0; b < cfg.dim(); ++b) {
    v[b] = uniform(-box, box);
    sum += v[b];
  }
  if (even_norm && (sum % 2 != 0)) {
    // <x,x> is congruent to the coordinate sum mod 2; nudge one coordinate
    v[0] += (v[0] > 0) ? -1 : 1;
  }
  return v;
}

FockMonomial Rng::monomial(const LatticeConfig& cfg, long maxdeg, long label_box, bool even_label) {
  FockMonomial m;
  m.label = label_box > 0 ? label(cfg, label_box, even_label) : LatticeVector::zero(cfg);
  long budget = uniform(0, maxdeg);
  while (budget > 0) {
    const long n = uniform(1, budget);
    m.insert_creation(Creation{static_cast<int>(uniform(0, cfg.dim() - 1)), n});
    budget -= n;
  }
  return m;
}

State Rng::state(const LatticeConfig& cfg, int nterms, long maxdeg, long label_box, bool even_label) {
  State s(cfg);
  for (int t = 0; t < nterms; ++t) {
    Rational c = rational(4, 3);
    if (c.is_zero()) c = Rational(1);
    s.add_term(monomial(cfg, maxdeg, label_box, even_label), c);
  }
  return s;
}

CheckResult suite_scalars_exact(unsigned long seed, int trials) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Rational a = rng.rational(50, 20), b = rng.rational(50, 20);
    if ((a + b) - b != a) return fail("scalars.exact", "(a+b)-b != a for a=" + a.str() + " b=" + b.str());
    if (!b.is_zero() && (a * b) / b != a)
      return fail("scalars.exact", "(a*b)/b != a for a=" + a.str() + " b=" + b.str());
    const Rational r = Rational::parse((a - b).str());
    if (r != a - b) return fail("scalars.exact", "parse/str round trip failed for " + (a - b).str());
  }
  return pass("scalars.exact");
}

CheckResult suite_scalars_pascal(unsigned long seed, int trials) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Rational x = rng.rational(8, 5);
    const unsigned r = static_cast<unsigned>(rng.uniform(1, 12));
    if (gen_binomial(x, r) != gen_binomial(x - Rational(1), r) + gen_binomial(x - Rational(1), r - 1))
      return fail("scalars.pascal", "Pascal recurrence failed at x=" + x.str() + " r=" + std::to_string(r));
  }
  return pass("scalars.pascal");
}

CheckResult suite_veza(unsigned maxl) {
  for (unsigned l = 0; l <= maxl; ++l) {
    const auto coeffs = falling_factorial_coeffs(l);
    if (coeffs.size() != l + 1) return fail("veza", "coefficient list has wrong length");
    for (long m = 0; m <= static_cast<long>(maxl); ++m) {
      Rational acc(0), p(1);
      for (unsigned j = 0; j <= l; ++j) {
        acc += coeffs[j] * p;
        p *= Rational(m);
      }
      if (acc != Rational(falling_factorial(m, l)))
        return fail("veza", "falling-factorial evaluation failed at l=" + std::to_string(l) +
                                " m=" + std::to_string(m));
    }
    // basis conversion round trip J -> L -> J
    const DiffOpElement j = DiffOpElement::basis(OpKind::J, l, 2 - static_cast<long>(l));
    if (l_to_j(j_to_l(j)) != j) return fail("veza", "J->L->J round trip failed at l=" + std::to_string(l));
  }
  return pass("veza");
}

CheckResult suite_2c(int N, unsigned long seed, int trials) {
  const LatticeConfig cfg(N);
  std::vector<LatticeVector> basis;
  for (int b = 0; b < cfg.dim(); ++b) basis.push_back(LatticeVector::basis(cfg, b));
  auto identity = [](const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
    return epsilon(a, b) * epsilon(a + b, c) == epsilon(b, c) * epsilon(a, b + c);
  };
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis)
        if (!identity(a, b, c)) return fail("2c", "cocycle identity failed on basis triple");
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const LatticeVector a = rng.label(cfg, 3, false), b = rng.label(cfg, 3, false), c = rng.label(cfg, 3, false);
    if (!identity(a, b, c))
      return fail("2c", "cocycle identity failed at " + a.str() + ", " + b.str() + ", " + c.str());
  }
  return pass("2c");
}

CheckResult suite_epsilon_comm(int N, unsigned long seed, int trials) {
  const LatticeConfig cfg(N);
  // pinned even-pairing case
  const LatticeVector a1 = LatticeVector::alpha(cfg, 1), b1 = LatticeVector::beta(cfg, 1);
  if (epsilon(a1, b1) * epsilon(b1, a1) != 1)
    return fail("eps.comm", "eps(alpha_1,beta_1)eps(beta_1,alpha_1) != 1");
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const LatticeVector x = rng.label(cfg, 3, true), y = rng.label(cfg, 3, true);
    const int want = (pairing(x, y) % 2 == 0) ? 1 : -1;
    if (epsilon(x, y) * epsilon(y, x) != want)
      return fail("eps.comm", "commutator sign failed at x=" + x.str() + " y=" + y.str());
  }
  return pass("eps.comm");
}

CheckResult suite_epsilon_gamma(int maxN) {
  for (int N = 1; N <= maxN; ++N) {
    const LatticeConfig cfg(N);
    std::vector<LatticeVector> gens;
    for (int i = 1; i <= N; ++i) {
      gens.push_back(LatticeVector::gamma(cfg, i));
      gens.push_back(-LatticeVector::gamma(cfg, i));
    }
    for (const auto& x : gens)
      for (const auto& y : gens) {
        if (epsilon(x, y) != 1) return fail("eps.gamma", "eps not 1 on gamma sublattice generators");
        if (epsilon(x + y, x) != 1) return fail("eps.gamma", "eps not 1 on gamma sublattice sums");
      }
  }
  return pass("eps.gamma");
}

CheckResult suite_signature(int maxN) {
  for (int N = 1; N <= maxN; ++N) {
    const LatticeConfig cfg(N);
    const int d = cfg.dim();
    // symmetric congruent diagonalization over Q
    std::vector<std::vector<Rational>> g(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        g[i][j] = Rational(pairing(LatticeVector::basis(cfg, i), LatticeVector::basis(cfg, j)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (g[i][j] != g[j][i]) return fail("signature", "pairing not symmetric");
    int pos = 0, neg = 0;
    for (int k = 0; k < d; ++k) {
      if (g[k][k].is_zero()) {
        int swap = -1;
        for (int j = k + 1; j < d; ++j)
          if (!g[k][j].is_zero()) swap = j;
        if (swap < 0) continue;
        // row/column addition to create a pivot
        for (int j = 0; j < d; ++j) g[k][j] += g[swap][j];
        for (int i = 0; i < d; ++i) g[i][k] += g[i][swap];
      }
      if (g[k][k].sign() > 0) ++pos;
      else if (g[k][k].sign() < 0) ++neg;
      for (int i = k + 1; i < d; ++i) {
        if (g[i][k].is_zero()) continue;
        const Rational f = g[i][k] / g[k][k];
        for (int j = 0; j < d; ++j) g[i][j] -= f * g[k][j];
        for (int j = 0; j < d; ++j) g[j][i] -= f * g[j][k];
      }
    }
    if (pos != N || neg != N)
      return fail("signature", "signature (" + std::to_string(pos) + "," + std::to_string(neg) +
                                   ") != (N,N) at N=" + std::to_string(N));
  }
  return pass("signature");
}

CheckResult suite_heis(int N, unsigned long seed, int trials, long deg) {
  const LatticeConfig cfg(N);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const HeisenbergVector h = rng.heis(cfg), hp = rng.heis(cfg);
    const State w = rng.state(cfg, 2, deg, 1, false);
    const long m = rng.uniform(1, 5), n = rng.uniform(1, 5);
    State lhs = apply_mode(h, m, apply_mode(hp, -n, w)) - apply_mode(hp, -n, apply_mode(h, m, w));
    State rhs = (m == n ? Rational(m) * h.pair(hp) : Rational(0)) * w;
    if (lhs != rhs)
      return fail("heis", "[h(m), h'(-n)] failed at m=" + std::to_string(m) + " n=" + std::to_string(n));
    // linearity spot check
    const Rational k = rng.rational();
    if (apply_mode(h, m, k * w) != k * apply_mode(h, m, w)) return fail("heis", "linearity in w failed");
    // finiteness on the zero-label sector: modes above the degree annihilate
    State m1 = rng.state(cfg, 2, deg, 0, false);
    if (!apply_mode(h, m1.max_hdeg() + rng.uniform(1, 3), m1).is_zero())
      return fail("heis", "annihilation above the degree failed");
  }
  return pass("heis");
}

CheckResult suite_eschurd(unsigned rmax) {
  // exp(sum_n x_n/n y^n) expanded with polynomial coefficients
  PowerSeriesT<SparsePoly> arg(static_cast<int>(rmax));
  for (unsigned n = 1; n <= rmax; ++n)
    arg[static_cast<int>(n)] = SparsePoly::variable(static_cast<int>(n)) * Rational(1, static_cast<long>(n));
  const PowerSeriesT<SparsePoly> e = arg.exp();
  for (unsigned r = 0; r <= rmax; ++r) {
    if (e[static_cast<int>(r)] != schur_poly(r).terms)
      return fail("eschurd", "generating function mismatch at r=" + std::to_string(r));
    // weighted-degree homogeneity
    for (const auto& [exps, c] : schur_poly(r).terms.terms()) {
      unsigned wdeg = 0;
      for (size_t k = 0; k < exps.size(); ++k) wdeg += static_cast<unsigned>(k + 1) * exps[k];
      if (wdeg != r) return fail("eschurd", "weighted degree violated at r=" + std::to_string(r));
    }
  }
  return pass("eschurd");
}

CheckResult suite_schur_binom(unsigned long seed, int trials, unsigned rmax) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Rational x = rng.rational(8, 5);
    const unsigned r = static_cast<unsigned>(rng.uniform(0, static_cast<long>(rmax)));
    if (schur_alternating_eval(x, r) != gen_binomial(x, r))
      return fail("schur1.binom", "p_r(x,-x,...) != C(x,r) at x=" + x.str() + " r=" + std::to_string(r));
  }
  return pass("schur1.binom");
}

CheckResult suite_vacuum_axioms(int N, unsigned long seed, int trials, long deg) {
  const LatticeConfig cfg(N);
  const State vac = State::vacuum(cfg);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const State v = rng.state(cfg, 2, deg, 1, false);
    if (mode(v, -1, vac) != v) return fail("vacuum", "v_{-1} 1 != v for v=" + show(v));
    for (long m = 0; m <= 2; ++m)
      if (!mode(v, m, vac).is_zero()) return fail("vacuum", "v_m 1 != 0 for m >= 0");
    const State w = rng.state(cfg, 2, deg, 1, false);
    if (mode(vac, -1, w) != w) return fail("vacuum", "1_{-1} w != w");
    if (!mode(vac, rng.uniform(0, 3), w).is_zero() || !mode(vac, -rng.uniform(2, 4), w).is_zero())
      return fail("vacuum", "1_m w != 0 for m != -1");
  }
  return pass("vacuum");
}

CheckResult suite_standard(int N, unsigned long seed, int trials) {
  const LatticeConfig cfg(N);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const HeisenbergVector h = rng.heis(cfg);
    const Weight lambda = rng.weight(N);
    const State vl = State::highest_weight(cfg, lambda);
    const int r = static_cast<int>(rng.uniform(1, 4));
    long k = 0;
    State u = State::vacuum(cfg);
    int parity = r;
    for (int i = 0; i < r; ++i) {
      const long n = rng.uniform(1, 4);
      k += n;
      parity += static_cast<int>(n);
      u = apply_mode(h, -n, u);
    }
    Rational want = (parity % 2 == 0) ? Rational(1) : Rational(-1);
    const Rational lh = lambda.pair(h);
    for (int i = 0; i < r; ++i) want *= lh;
    if (mode(u, k - 1, vl) != want * vl)
      return fail("standard", "u_{k-1} v_lambda mismatch at trial " + std::to_string(t));
    for (long m = k; m <= k + 2; ++m)
      if (!mode(u, m, vl).is_zero()) return fail("standard", "u_m v_lambda != 0 above k-1");
  }
  return pass("standard");
}

CheckResult suite_schur1(int N, unsigned long seed, int trials, unsigned rmax) {
  const LatticeConfig cfg(N);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const HeisenbergVector h = rng.heis(cfg);
    const Weight lambda = rng.weight(N);
    const State vl = State::highest_weight(cfg, lambda);
    const unsigned r = static_cast<unsigned>(rng.uniform(0, static_cast<long>(rmax)));
    const State u = schur_state(h, r, State::vacuum(cfg));
    // homogeneity: u sits in degree r
    for (const auto& [m, c] : u.terms())
      if (l0_degree(m) != Rational(static_cast<long>(r)))
        return fail("schur1", "p_r state not homogeneous of degree r");
    if (mode(u, static_cast<long>(r) - 1, vl) != gen_binomial(lambda.pair(h), r) * vl)
      return fail("schur1", "u_{r-1} v_lambda != C(<lambda,h>, r) v_lambda at r=" + std::to_string(r));
    for (long m = static_cast<long>(r); m <= static_cast<long>(r) + 2; ++m)
      if (!mode(u, m, vl).is_zero()) return fail("schur1", "u_n v_lambda != 0 for n > r-1");
  }
  return pass("schur1");
}

CheckResult suite_eab(int N, unsigned long seed, int trials) {
  const LatticeConfig cfg(N);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const LatticeVector a = rng.label(cfg, 2, false), b = rng.label(cfg, 2, false);
    const State ib = State::monomial(cfg, FockMonomial{b, {}});
    const long p = pairing(a, b);
    for (long i = -p; i <= -p + 3; ++i)
      if (!lattice_mode(a, i, ib).is_zero())
        return fail("eab", "iota(a)_i iota(b) != 0 at i=" + std::to_string(i));
    if (p < 0) {
      const long n = -p;
      const State iab = lattice_multiply(a, ib);
      for (long i = 0; i <= n; ++i) {
        if (lattice_mode(a, i - 1, ib) !=
            schur_apply(HeisenbergVector::from_lattice(a), static_cast<unsigned>(n - i), iab))
          return fail("eab", "Schur product formula failed at i=" + std::to_string(i));
      }
    }
  }
  return pass("eab");
}

CheckResult suite_comut(int N, unsigned long seed, int trials, long deg) {
  const LatticeConfig cfg(N);
  Rng rng(seed);
  std::vector<std::tuple<State, long, State, long, State>> inputs;
  for (int t = 0; t < trials; ++t)
    inputs.emplace_back(rng.state(cfg, 1, deg, 1, true), rng.uniform(-3, 3),
                        rng.state(cfg, 1, deg, 1, true), rng.uniform(-3, 3),
                        rng.state(cfg, 2, deg, 1, false));
  std::vector<std::string> slots(inputs.size());
  parallel_for(inputs.size(), [&](size_t i) {
    const auto& [a, m, b, n, w] = inputs[i];
    const State res = commutator_residual(a, m, b, n, w);
    if (!res.is_zero())
      slots[i] = "nonzero residual at trial " + std::to_string(i) + ": " + show(res);
  });
  return collect("comut", slots);
}

CheckResult suite_translation(int N, unsigned long seed, int trials, long deg) {
  const LatticeConfig cfg(N);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const State v = rng.state(cfg, 1, deg, 1, false);
    const State w = rng.state(cfg, 1, deg, 1, false);
    const long m = rng.uniform(-3, 3);
    const State dv = virasoro_mode(-1, v);
    if (mode(dv, m, w) != Rational(-m) * mode(v, m - 1, w))
      return fail("translation", "(L_{-1}v)_m != -m v_{m-1} at m=" + std::to_string(m));
  }
  return pass("translation");
}

CheckResult suite_virasoro(int N, unsigned long seed, int trials, long deg) {
  const LatticeConfig cfg(N);
  Rng rng(seed);
  const State vac = State::vacuum(cfg);
  if (!virasoro_mode(1, vac).is_zero() || !virasoro_mode(0, vac).is_zero())
    return fail("vir.rel", "L_n 1 != 0 for n = 0, 1");
  for (int t = 0; t < trials; ++t) {
    // L_0 is diagonal with the conformal degree
    const FockMonomial mo = rng.monomial(cfg, deg, 1, false);
    const State ms = State::monomial(cfg, mo);
    if (virasoro_mode(0, ms) != l0_degree(mo) * ms)
      return fail("vir.rel", "L_0 eigenvalue mismatch on " + mo.str());
    // bracket with central charge 2N
    const State w = rng.state(cfg, 1, deg, 1, false);
    const long m = rng.uniform(-2, 2), n = rng.uniform(-2, 2);
    State lhs = virasoro_mode(m, virasoro_mode(n, w)) - virasoro_mode(n, virasoro_mode(m, w));
    State rhs = Rational(m - n) * virasoro_mode(m + n, w);
    if (m + n == 0) rhs += Rational((m * m * m - m) * 2 * N, 12) * w;
    if (lhs != rhs)
      return fail("vir.rel", "[L_m, L_n] failed at m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  return pass("vir.rel");
}

std::vector<CheckResult> suite_fms1(int maxN, unsigned maxl, long mode_range) {
  std::vector<std::string> bad(4);
  for (int N = 1; N <= maxN && bad[0].empty(); ++N) {
    const LatticeConfig cfg(N);
    const State vac = State::vacuum(cfg);
    for (int i = 1; i <= N; ++i) {
      const LatticeVector gi = LatticeVector::gamma(cfg, i);
      for (int j = 1; j <= N; ++j) {
        const LatticeVector gj = LatticeVector::gamma(cfg, j);
        const State ej = State::monomial(cfg, FockMonomial{gj, {}});
        const State fj = State::monomial(cfg, FockMonomial{-gj, {}});
        // (1) e^i_n e^j = f^i_n f^j = 0 for n >= 0
        for (long n = 0; n <= mode_range && bad[0].empty(); ++n) {
          if (!lattice_mode(gi, n, ej).is_zero() || !lattice_mode(-gi, n, fj).is_zero())
            bad[0] = "clause (1) failed at N=" + std::to_string(N) + " i=" + std::to_string(i) +
                     " j=" + std::to_string(j) + " n=" + std::to_string(n);
        }
        // (2) e^i_{-1} f^i = 1 and f^i_{-1} e^i = 1 on the diagonal; off the
        // diagonal the -1 mode is the lattice translate iota(gamma_i - gamma_j)
        // and the delta law lives in the singular modes: e^i_n f^j = 0, n >= 0
        if (bad[1].empty()) {
          const State want_ef = (i == j) ? vac : lattice_multiply(gi, fj);
          const State want_fe = (i == j) ? vac : lattice_multiply(-gi, ej);
          bool ok = lattice_mode(gi, -1, fj) == want_ef && lattice_mode(-gi, -1, ej) == want_fe;
          for (long n = 0; n <= mode_range && ok; ++n)
            ok = lattice_mode(gi, n, fj).is_zero() && lattice_mode(-gi, n, ej).is_zero();
          if (!ok)
            bad[1] = "clause (2) failed at N=" + std::to_string(N) + " i=" + std::to_string(i) +
                     " j=" + std::to_string(j);
        }
      }
      // (3) e^i_{-l-1} f^i = p_l(gamma_i) 1, f^i_{-l-1} e^i = p_l(-gamma_i) 1
      const State ei = State::monomial(cfg, FockMonomial{gi, {}});
      const State fi = State::monomial(cfg, FockMonomial{-gi, {}});
      const HeisenbergVector gih = HeisenbergVector::gamma(cfg, i);
      for (unsigned l = 0; l <= maxl && bad[2].empty(); ++l) {
        if (lattice_mode(gi, -static_cast<long>(l) - 1, fi) != schur_apply(gih, l, vac) ||
            lattice_mode(-gi, -static_cast<long>(l) - 1, ei) != schur_apply(-gih, l, vac))
          bad[2] = "clause (3) failed at N=" + std::to_string(N) + " i=" + std::to_string(i) +
                   " l=" + std::to_string(l);
      }
      // (4) [alpha_i(k), e^j_n] = delta_ij e^j_{n+k}, [alpha_i(k), f^j_n] = -delta_ij f^j_{n+k}
      if (bad[3].empty()) {
        Rng rng(91 + static_cast<unsigned long>(N));
        std::vector<State> probes{vac, ei, fi, State::monomial(cfg, FockMonomial{gi, {Creation{i - 1, 1}}})};
        for (int p = 0; p < 2; ++p) probes.push_back(rng.state(cfg, 1, 2, 1, true));
        const HeisenbergVector ai = HeisenbergVector::alpha(cfg, i);
        for (int j = 1; j <= N && bad[3].empty(); ++j) {
          const LatticeVector gj = LatticeVector::gamma(cfg, j);
          const Rational d(i == j ? 1 : 0);
          for (long k = -mode_range; k <= mode_range && bad[3].empty(); ++k)
            for (long n = -mode_range; n <= mode_range && bad[3].empty(); ++n)
              for (const State& w : probes) {
                State lhs_e = apply_mode(ai, k, lattice_mode(gj, n, w)) -
                              lattice_mode(gj, n, apply_mode(ai, k, w));
                State lhs_f = apply_mode(ai, k, lattice_mode(-gj, n, w)) -
                              lattice_mode(-gj, n, apply_mode(ai, k, w));
                if (lhs_e != d * lattice_mode(gj, n + k, w) || lhs_f != -d * lattice_mode(-gj, n + k, w)) {
                  bad[3] = "clause (4) failed at N=" + std::to_string(N) + " i=" + std::to_string(i) +
                           " j=" + std::to_string(j) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
                  break;
                }
              }
        }
      }
    }
  }
  std::vector<CheckResult> out;
  for (int c = 0; c < 4; ++c) {
    const std::string id = "fms1." + std::to_string(c + 1);
    out.push_back(bad[c].empty() ? pass(id) : fail(id, bad[c]));
  }
  return out;
}

CheckResult suite_fms2(int N, long deg, long mode_range) {
  const LatticeConfig cfg(N);
  // finite slice of V_L basis states: the full zero-label sector (where the
  // W-generators live) up to the degree cap, plus gamma- and alpha-labeled
  // states at low degree to exercise z^a powers, shifts and cocycle signs
  std::vector<LatticeVector> labels{LatticeVector::zero(cfg)};
  std::vector<long> caps{deg};
  for (int k = 1; k <= N; ++k) {
    for (const LatticeVector& v : {LatticeVector::gamma(cfg, k), -LatticeVector::gamma(cfg, k)}) {
      labels.push_back(v);
      caps.push_back(std::min<long>(deg, 2));
    }
  }
  labels.push_back(LatticeVector::alpha(cfg, 1));
  caps.push_back(std::min<long>(deg, 2));
  labels.push_back(-LatticeVector::alpha(cfg, 1));
  caps.push_back(std::min<long>(deg, 2));
  std::vector<State> states;
  for (size_t li = 0; li < labels.size(); ++li)
    for (const auto& mono : heisenberg_monomials(cfg, caps[li])) {
      FockMonomial m = mono;
      m.label = labels[li];
      states.push_back(State::monomial(cfg, std::move(m)));
    }

  const long R = mode_range;
  std::vector<std::string> slots(states.size());
  parallel_for(states.size(), [&](size_t si) {
    const State& w = states[si];
    std::ostringstream bad;
    // level 1: all A^j(m) w and Abar^i(n) w across the mode window
    std::vector<ModeMap> Aw(static_cast<size_t>(N) + 1), Fw(static_cast<size_t>(N) + 1);
    for (int i = 1; i <= N; ++i) {
      Aw[static_cast<size_t>(i)] = weyl_field(i, false, w, -R, R);
      Fw[static_cast<size_t>(i)] = weyl_field(i, true, w, -R, R);
    }
    auto check = [&](const char* kind, int i, int j, long n, long m, const State& lhs, const State& rhs) {
      if (lhs != rhs && bad.tellp() == 0)
        bad << "[" << kind << "] failed at N=" << N << " i=" << i << " j=" << j << " n=" << n
            << " m=" << m << " on state " << show(w);
    };
    const State zero = State::empty_like(w);
    // second-level compositions, each an all-modes map: key = inner mode
    auto compose = [&](int outer, bool starred, const ModeMap& inner) {
      std::map<long, ModeMap> out;
      for (const auto& [k, st] : inner) out[k] = weyl_field(outer, starred, st, -R, R);
      return out;
    };
    auto get2 = [&](const std::map<long, ModeMap>& mm, long inner, long outer) -> const State* {
      auto it = mm.find(inner);
      if (it == mm.end()) return nullptr;
      auto jt = it->second.find(outer);
      return jt == it->second.end() ? nullptr : &jt->second;
    };
    for (int i = 1; i <= N && bad.tellp() == 0; ++i) {
      for (int j = i; j <= N && bad.tellp() == 0; ++j) {
        // [A^i(n), A^j(m)] = 0 and [Abar^i(n), Abar^j(m)] = 0
        const auto ai_aj = compose(i, false, Aw[static_cast<size_t>(j)]);
        const auto aj_ai = (i == j) ? ai_aj : compose(j, false, Aw[static_cast<size_t>(i)]);
        const auto fi_fj = compose(i, true, Fw[static_cast<size_t>(j)]);
        const auto fj_fi = (i == j) ? fi_fj : compose(j, true, Fw[static_cast<size_t>(i)]);
        for (long n = -R; n <= R && bad.tellp() == 0; ++n)
          for (long m = -R; m <= R; ++m) {
            State lhs = zero;
            if (const State* s = get2(ai_aj, m, n)) lhs += *s;
            if (const State* s = get2(aj_ai, n, m)) lhs -= *s;
            check("A,A", i, j, n, m, lhs, zero);
            State lhsf = zero;
            if (const State* s = get2(fi_fj, m, n)) lhsf += *s;
            if (const State* s = get2(fj_fi, n, m)) lhsf -= *s;
            check("Abar,Abar", i, j, n, m, lhsf, zero);
          }
      }
    }
    for (int i = 1; i <= N && bad.tellp() == 0; ++i) {
      for (int j = 1; j <= N && bad.tellp() == 0; ++j) {
        // [Abar^i(n), A^j(m)] = delta_ij delta_{m+n,0}
        const auto fi_aj = compose(i, true, Aw[static_cast<size_t>(j)]);
        const auto aj_fi = compose(j, false, Fw[static_cast<size_t>(i)]);
        for (long n = -R; n <= R && bad.tellp() == 0; ++n)
          for (long m = -R; m <= R; ++m) {
            State lhs = zero;
            if (const State* s = get2(fi_aj, m, n)) lhs += *s;
            if (const State* s = get2(aj_fi, n, m)) lhs -= *s;
            const State rhs = (i == j && m + n == 0) ? w : zero;
            check("Abar,A", i, j, n, m, lhs, rhs);
          }
      }
    }
    slots[si] = bad.str();
  });
  return collect("fms2", slots);
}

CheckResult suite_ul1(int maxN, unsigned kmax) {
  for (int N = 1; N <= maxN; ++N) {
    const LatticeConfig cfg(N);
    const State vac = State::vacuum(cfg);
    for (int i = 1; i <= N; ++i) {
      for (unsigned k = 0; k <= kmax; ++k) {
        State u;
        try {
          u = build_U(cfg, i, k);
        } catch (const inconsistency_error& e) {
          return fail("ul1", e.what());
        }
        const HeisenbergVector mg = -HeisenbergVector::gamma(cfg, i);
        State closed = apply_mode(HeisenbergVector::alpha(cfg, i), -1, schur_apply(mg, k, vac));
        closed += schur_apply(mg, k + 1, vac);
        if (u != closed) return fail("ul1", "returned state differs from the Schur form");
        for (const auto& [m, c] : u.terms()) {
          if (!m.label.is_zero()) return fail("ul1", "U^i_k has a nonzero lattice label");
          if (l0_degree(m) != Rational(static_cast<long>(k) + 1))
            return fail("ul1", "U^i_k not homogeneous of degree k+1");
        }
      }
    }
  }
  return pass("ul1");
}

CheckResult suite_hw(int N, unsigned long seed, int trials, unsigned kmax) {
  const LatticeConfig cfg(N);
  Rng rng(seed);
  std::vector<Weight> lambdas;
  for (int t = 0; t < trials; ++t) lambdas.push_back(rng.weight(N));
  std::vector<std::string> slots(lambdas.size());
  parallel_for(lambdas.size(), [&](size_t t) {
    const Weight& lambda = lambdas[t];
    const State vl = State::highest_weight(cfg, lambda);
    for (unsigned k = 0; k <= kmax; ++k) {
      if (j_mode(k, 0, vl) != hw_eigenvalue(k, lambda, N) * vl) {
        slots[t] = "J^k(0) eigenvalue mismatch at k=" + std::to_string(k);
        return;
      }
      for (long m = 1; m <= 2; ++m)
        if (!j_mode(k, m, vl).is_zero()) {
          slots[t] = "J^k(m) v_lambda != 0 at k=" + std::to_string(k) + " m=" + std::to_string(m);
          return;
        }
    }
  });
  return collect("hw", slots);
}

namespace {

// PBW words in the Weyl creation tokens a_i(-n) (n >= 1) and a*_i(-m)
// (m >= 0, per-pair zero-mode count <= zcap), of total degree <= deg
struct WeylToken {
  int i;
  bool starred;
  long mode;  // the n of a(-n) / a*(-n)
};

void enumerate_words(const LatticeConfig& cfg, long deg_left, int zcap, size_t from,
                     const std::vector<WeylToken>& alphabet, std::vector<int>& counts,
                     std::vector<std::vector<int>>& out) {
  out.push_back(counts);
  for (size_t t = from; t < alphabet.size(); ++t) {
    const WeylToken& tok = alphabet[t];
    if (tok.mode > deg_left) continue;
    if (tok.starred && tok.mode == 0) {
      int zc = 0;
      for (size_t u = 0; u < alphabet.size(); ++u)
        if (alphabet[u].starred && alphabet[u].mode == 0 && alphabet[u].i == tok.i) zc += counts[u];
      if (zc >= zcap) continue;
    }
    ++counts[t];
    enumerate_words(cfg, deg_left - tok.mode, zcap, t, alphabet, counts, out);
    --counts[t];
  }
}

}  // namespace

CheckResult suite_wizom(int N, long deg) {
  const LatticeConfig cfg(N);
  const int zcap = 2;
  std::vector<WeylToken> alphabet;
  for (int i = 1; i <= N; ++i) {
    for (long n = 1; n <= deg; ++n) alphabet.push_back(WeylToken{i, false, n});
    for (long m = 0; m <= deg; ++m) alphabet.push_back(WeylToken{i, true, m});
  }
  std::vector<std::vector<int>> words;
  std::vector<int> counts(alphabet.size(), 0);
  enumerate_words(cfg, deg, zcap, 0, alphabet, counts, words);

  // independent count: coefficient extraction from the product of geometric
  // factors, tracked by (degree, charge vector)
  using Key = std::pair<long, std::vector<long>>;
  std::map<Key, long> oracle;
  oracle[{0, std::vector<long>(static_cast<size_t>(N), 0)}] = 1;
  for (const auto& tok : alphabet) {
    std::map<Key, long> next = oracle;
    const int cap = (tok.starred && tok.mode == 0) ? zcap : static_cast<int>(deg / std::max<long>(tok.mode, 1));
    for (const auto& [key, cnt] : oracle) {
      Key k = key;
      for (int rep = 1; rep <= cap; ++rep) {
        k.first += tok.mode;
        if (k.first > deg) break;
        k.second[static_cast<size_t>(tok.i - 1)] += tok.starred ? -1 : 1;
        next[k] += cnt;
      }
    }
    oracle = std::move(next);
  }

  // realized span: apply each word to the vacuum, bucket by (degree, charge),
  // and check exact rank == count == oracle in every bucket
  std::map<Key, std::vector<State>> buckets;
  for (const auto& wcounts : words) {
    State s = State::vacuum(cfg);
    long d = 0;
    std::vector<long> charge(static_cast<size_t>(N), 0);
    for (size_t t = 0; t < wcounts.size(); ++t) {
      for (int rep = 0; rep < wcounts[t]; ++rep) {
        const WeylToken& tok = alphabet[t];
        s = weyl_mode(WeylIndex{tok.i, tok.starred, -tok.mode}, s);
        d += tok.mode;
        charge[static_cast<size_t>(tok.i - 1)] += tok.starred ? -1 : 1;
      }
    }
    if (s.is_zero()) return fail("wizom", "a PBW word annihilated the vacuum");
    buckets[{d, charge}].push_back(std::move(s));
  }
  for (auto& [key, vecs] : buckets) {
    const auto it = oracle.find(key);
    const long want = it == oracle.end() ? 0 : it->second;
    if (static_cast<long>(vecs.size()) != want)
      return fail("wizom", "PBW word count disagrees with the generating-function count");
    // exact rank by elimination against leading monomials
    std::map<FockMonomial, State> echelon;
    long rank = 0;
    for (State s : vecs) {
      while (!s.is_zero()) {
        const auto& [lead, c] = *s.terms().begin();
        auto e = echelon.find(lead);
        if (e == echelon.end()) {
          s *= Rational(1) / c;
          echelon.emplace(lead, std::move(s));
          ++rank;
          break;
        }
        s -= c * e->second;
      }
    }
    if (rank != want)
      return fail("wizom", "graded rank " + std::to_string(rank) + " != " + std::to_string(want) +
                               " at degree " + std::to_string(key.first));
  }
  return pass("wizom");
}

CheckResult suite_embedding(int N, unsigned kmax) {
  const LatticeConfig cfg(N);
  Rng rng(7001);
  for (unsigned k = 0; k <= kmax; ++k) {
    const WGenerator& g = w_generator(cfg, k);
    for (const auto& [m, c] : g.state.terms())
      if (!m.label.is_zero()) return fail("embedding", "U_k has a nonzero lattice label at k=" + std::to_string(k));
    // modes of U_k preserve the zero-label subspace
    const State w = rng.state(cfg, 2, 3, 0, false);
    for (long m = -2; m <= 2; ++m) {
      const State out = mode(g.state, m, w);
      for (const auto& [mo, c] : out.terms())
        if (!mo.label.is_zero())
          return fail("embedding", "mode(U_k, m, .) left M(1) at k=" + std::to_string(k) +
                                       " m=" + std::to_string(m));
    }
  }
  return pass("embedding");
}

CheckResult suite_psi_cocycle(unsigned long seed, int trials) {
  Rng rng(seed);
  // pinned antisymmetric pair
  const DiffOpElement td = raw_monomial(1, 1), t1d = raw_monomial(-1, 1);
  if (psi(td, t1d) != -psi(t1d, td)) return fail("psi", "antisymmetry failed on (t d, t^{-1} d)");
  for (int t = 0; t < trials; ++t) {
    auto rnd = [&] {
      return raw_monomial(rng.uniform(-3, 3), static_cast<unsigned>(rng.uniform(0, 3)));
    };
    const DiffOpElement x = rnd(), y = rnd(), z = rnd();
    if (!psi(x, x).is_zero()) return fail("psi", "Psi(x,x) != 0");
    const DiffOpElement xy = dhat_bracket(x, y, Rational(0));
    const DiffOpElement yz = dhat_bracket(y, z, Rational(0));
    const DiffOpElement zx = dhat_bracket(z, x, Rational(0));
    if (!(psi(xy, z) + psi(yz, x) + psi(zx, y)).is_zero())
      return fail("psi", "2-cocycle identity failed");
  }
  return pass("psi");
}

CheckResult suite_dhat_jacobi(unsigned long seed, int trials) {
  Rng rng(seed);
  const Rational c(-2);
  for (int t = 0; t < trials; ++t) {
    auto rnd = [&] {
      return raw_monomial(rng.uniform(-3, 3), static_cast<unsigned>(rng.uniform(0, 3)));
    };
    const DiffOpElement x = rnd(), y = rnd(), z = rnd();
    DiffOpElement acc = dhat_bracket(dhat_bracket(x, y, c), z, c);
    acc += dhat_bracket(dhat_bracket(y, z, c), x, c);
    acc += dhat_bracket(dhat_bracket(z, x, c), y, c);
    if (!acc.is_zero()) return fail("dhat.jacobi", "Jacobi identity failed");
    if (!dhat_bracket(x, x, c).is_zero()) return fail("dhat.jacobi", "[x,x] != 0");
  }
  return pass("dhat.jacobi");
}

CheckResult suite_main_gener(unsigned long seed, int trials, int maxN, int order) {
  Rng rng(seed);
  for (int N = 1; N <= maxN; ++N) {
    for (int t = 0; t < trials; ++t) {
      const Weight lambda = rng.weight(N);
      if (delta_series(lambda, N, order) != delta_closed_form(lambda, N, order))
        return fail("main.gener", "series paths disagree at N=" + std::to_string(N) +
                                      " trial " + std::to_string(t));
    }
  }
  return pass("main.gener");
}

CheckResult suite_quasifinite(unsigned long seed, int trials, int maxN) {
  Rng rng(seed);
  for (int N = 1; N <= maxN; ++N) {
    for (int t = 0; t < trials; ++t) {
      const Weight lambda = rng.weight(N);
      try {
        const QuasifiniteDecomposition dec = quasifinite_decompose(lambda, N);
        if (dec.multiplicity_sum_at_zero() != Rational(-N))
          return fail("main.quasifinite", "multiplicity sum != -N");
        for (size_t a = 0; a < dec.terms.size(); ++a)
          for (size_t b = a + 1; b < dec.terms.size(); ++b)
            if (dec.terms[a].first == dec.terms[b].first)
              return fail("main.quasifinite", "duplicate exponent in decomposition");
      } catch (const inconsistency_error& e) {
        return fail("main.quasifinite", e.what());
      }
    }
  }
  return pass("main.quasifinite");
}

CheckResult suite_weights_cross(int N, unsigned long seed, int trials, int order) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Weight lambda = rng.weight(N);
    const WeightSeries a = weight_components(lambda, N, order);
    const WeightSeries b = weight_components_measured(lambda, N, order);
    if (a.lambda_n != b.lambda_n)
      return fail("veza.weights", "closed-form and measured weight components disagree");
  }
  return pass("veza.weights");
}

std::map<std::tuple<unsigned, long, unsigned, long>, bool>
realization_agreement_table(int N, unsigned ab_max, long mode_range, long deg) {
  const LatticeConfig cfg(N);
  const long R = mode_range;
  std::map<std::tuple<unsigned, long, unsigned, long>, DiffOpElement> abstract;
  std::map<std::tuple<unsigned, long, unsigned, long>, bool> agree;
  for (unsigned a = 0; a <= ab_max; ++a)
    for (unsigned b = 0; b <= ab_max; ++b)
      for (long m = -R; m <= R; ++m)
        for (long n = -R; n <= R; ++n) {
          abstract.emplace(std::make_tuple(a, m, b, n),
                           dhat_bracket(DiffOpElement::basis(OpKind::J, a, m),
                                        DiffOpElement::basis(OpKind::J, b, n), Rational(-N)));
          agree.emplace(std::make_tuple(a, m, b, n), true);
        }
  unsigned lmax = 0;
  for (const auto& [key, e] : abstract)
    for (const auto& [k, c] : e.terms()) lmax = std::max(lmax, k.l);

  const auto monos = heisenberg_monomials(cfg, deg);
  std::mutex merge_mutex;
  parallel_for(monos.size(), [&](size_t vi) {
    const State v = State::monomial(cfg, monos[vi]);
    const State zero = State::empty_like(v);
    // J^l(k) w for all k in the window at once; J^l(k) = -l! (U_l)_{k+l}
    auto jmap = [&](unsigned l, const State& w) {
      const WGenerator& g = w_generator(cfg, l);
      ModeMap f = field(g.state, w, -2 * R + static_cast<long>(l) - 1,
                        2 * R + static_cast<long>(l) + 1);
      ModeMap out;
      for (auto& [mm, st] : f) {
        st *= -factorial(l);
        out.emplace(mm - static_cast<long>(l), std::move(st));
      }
      return out;
    };
    std::vector<ModeMap> level1;
    for (unsigned l = 0; l <= std::max(ab_max, lmax); ++l) level1.push_back(jmap(l, v));
    // second level J^a(m) J^b(n) v
    std::map<std::pair<unsigned, long>, std::vector<ModeMap>> level2;
    for (unsigned b = 0; b <= ab_max; ++b)
      for (long n = -R; n <= R; ++n) {
        auto it = level1[b].find(n);
        if (it == level1[b].end()) continue;
        std::vector<ModeMap> maps;
        for (unsigned a = 0; a <= ab_max; ++a) maps.push_back(jmap(a, it->second));
        level2.emplace(std::make_pair(b, n), std::move(maps));
      }
    auto second = [&](unsigned a, long m, unsigned b, long n) -> State {
      auto it = level2.find({b, n});
      if (it == level2.end()) return zero;
      auto jt = it->second[a].find(m);
      return jt == it->second[a].end() ? zero : jt->second;
    };
    std::vector<std::tuple<unsigned, long, unsigned, long>> bad;
    for (unsigned a = 0; a <= ab_max; ++a)
      for (unsigned b = 0; b <= ab_max; ++b)
        for (long m = -R; m <= R; ++m)
          for (long n = -R; n <= R; ++n) {
            State concrete = second(a, m, b, n) - second(b, n, a, m);
            const DiffOpElement& br = abstract.at({a, m, b, n});
            State want = br.central() * v;
            for (const auto& [key, c] : br.terms()) {
              auto jt = level1[key.l].find(key.k);
              if (jt != level1[key.l].end()) want += c * jt->second;
            }
            if (concrete != want) bad.emplace_back(a, m, b, n);
          }
    if (!bad.empty()) {
      std::lock_guard lk(merge_mutex);
      for (const auto& key : bad) agree[key] = false;
    }
  });
  return agree;
}

CheckResult suite_prop63(int N, unsigned ab_max, long mode_range, long deg) {
  // the central value pinned by the isomorphism
  const DiffOpElement pinned = dhat_bracket(DiffOpElement::basis(OpKind::J, 0, 1),
                                            DiffOpElement::basis(OpKind::J, 0, -1), Rational(-N));
  if (pinned.central() != Rational(-N) || !pinned.terms().empty())
    return fail("prop6.3", "[J^0(1), J^0(-1)] != -N C");
  const auto table = realization_agreement_table(N, ab_max, mode_range, deg);
  for (const auto& [key, ok] : table)
    if (!ok)
      return fail("prop6.3", "bracket mismatch at a=" + std::to_string(std::get<0>(key)) +
                                 " m=" + std::to_string(std::get<1>(key)) +
                                 " b=" + std::to_string(std::get<2>(key)) +
                                 " n=" + std::to_string(std::get<3>(key)));
  return pass("prop6.3");
}

CheckResult suite_cor_n1(unsigned long seed, int trials, int order) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Weight lambda = rng.weight(1);
    const Rational la = lambda.alpha_pair[0], lb = lambda.beta_pair[0];
    // -(e^{-(la+lb)x} - 1)/(e^x - 1) - la e^{-(la+lb)x}
    PowerSeries want = series_em1_ratio(-(la + lb), order);
    want.scale(Rational(-1));
    PowerSeries e = series_exp_linear(-(la + lb), order);
    e.scale(la);
    want -= e;
    if (want != delta_closed_form(lambda, 1, order))
      return fail("sec6.cor3", "N=1 closed form disagrees with the specialization");
  }
  return pass("sec6.cor3");
}

std::vector<CheckResult> run_all(const Scales& s) {
  std::vector<CheckResult> out;
  out.push_back(suite_scalars_exact(s.seed, std::max(s.n_random, 50)));
  out.push_back(suite_scalars_pascal(s.seed + 1, std::max(s.n_random / 2, 20)));
  out.push_back(suite_veza(10));
  out.push_back(suite_2c(s.N, s.seed + 2, std::max(s.n_random * 4, 200)));
  out.push_back(suite_epsilon_comm(s.N, s.seed + 3, std::max(s.n_random * 2, 100)));
  out.push_back(suite_epsilon_gamma(std::max(s.N, 3)));
  out.push_back(suite_signature(std::max(s.N, 3)));
  out.push_back(suite_heis(s.N, s.seed + 4, std::max(s.n_random / 2, 25), s.trunc_degree + 2));
  out.push_back(suite_eschurd(10));
  out.push_back(suite_schur_binom(s.seed + 5, std::max(s.n_random, 50), 10));
  out.push_back(suite_vacuum_axioms(s.N, s.seed + 6, std::max(s.n_random / 3, 15), s.trunc_degree));
  out.push_back(suite_standard(s.N, s.seed + 7, std::max(s.n_random / 2, 25)));
  out.push_back(suite_schur1(s.N, s.seed + 8, std::max(s.n_random / 3, 15), 6));
  out.push_back(suite_eab(s.N, s.seed + 9, std::max(s.n_random / 2, 25)));
  out.push_back(suite_comut(s.N, s.seed + 10, std::max(s.n_random / 3, 12), s.trunc_degree));
  out.push_back(suite_translation(s.N, s.seed + 11, std::max(s.n_random / 3, 12), s.trunc_degree));
  out.push_back(suite_virasoro(s.N, s.seed + 12, std::max(s.n_random / 3, 12), s.trunc_degree));
  for (auto& r : suite_fms1(s.N, 5, 4)) out.push_back(std::move(r));
  out.push_back(suite_fms2(s.N, std::min<long>(s.trunc_degree, 4), 4));
  out.push_back(suite_ul1(s.N, 6));
  out.push_back(suite_hw(s.N, s.seed + 13, std::max(s.n_random / 2, 25), s.max_k));
  out.push_back(suite_wizom(std::min(s.N, 2), 4));
  out.push_back(suite_embedding(s.N, s.max_k));
  out.push_back(suite_psi_cocycle(s.seed + 14, std::max(s.n_random, 50)));
  out.push_back(suite_dhat_jacobi(s.seed + 15, std::max(s.n_random, 50)));
  out.push_back(suite_main_gener(s.seed + 16, std::max(s.n_random / 2, 25), std::max(s.N, 3), s.series_order));
  out.push_back(suite_quasifinite(s.seed + 17, std::max(s.n_random / 2, 25), std::max(s.N, 3)));
  out.push_back(suite_weights_cross(s.N, s.seed + 18, std::max(s.n_random / 6, 6), 6));
  out.push_back(suite_prop63(s.N, 2, 2, std::min<long>(s.trunc_degree, 3)));
  out.push_back(suite_cor_n1(s.seed + 19, std::max(s.n_random, 50), s.series_order));
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return out;
}

}  // namespace winfty::verify
