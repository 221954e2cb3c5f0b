#pragma once

#include "winfty/dhat.hpp"

#include <random>
#include <string>
#include <vector>

namespace winfty::verify {

struct CheckResult {
  std::string id;      // paper label of the lemma/equation
  bool pass = false;
  std::string detail;  // counterexample description when failing
};

// Deterministic input generator; avoids std distributions so fixed seeds give
// identical sweeps on every platform.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long seed) : eng(seed) {}

  long uniform(long lo, long hi);  // inclusive
  Rational rational(long max_num = 6, long max_den = 4);
  Weight weight(int N);
  HeisenbergVector heis(const LatticeConfig& cfg);
  LatticeVector label(const LatticeConfig& cfg, long box, bool even_norm);
  FockMonomial monomial(const LatticeConfig& cfg, long maxdeg, long label_box, bool even_label);
  State state(const LatticeConfig& cfg, int nterms, long maxdeg, long label_box, bool even_label);
};

// scalars
CheckResult suite_scalars_exact(unsigned long seed, int trials);
CheckResult suite_scalars_pascal(unsigned long seed, int trials);
CheckResult suite_veza(unsigned maxl);

// lattice
CheckResult suite_2c(int N, unsigned long seed, int trials);
CheckResult suite_epsilon_comm(int N, unsigned long seed, int trials);
CheckResult suite_epsilon_gamma(int maxN);
CheckResult suite_signature(int maxN);

// fock
CheckResult suite_heis(int N, unsigned long seed, int trials, long deg);

// schur
CheckResult suite_eschurd(unsigned rmax);
CheckResult suite_schur_binom(unsigned long seed, int trials, unsigned rmax);

// vertexop
CheckResult suite_vacuum_axioms(int N, unsigned long seed, int trials, long deg);
CheckResult suite_standard(int N, unsigned long seed, int trials);
CheckResult suite_schur1(int N, unsigned long seed, int trials, unsigned rmax);
CheckResult suite_eab(int N, unsigned long seed, int trials);
CheckResult suite_comut(int N, unsigned long seed, int trials, long deg);
CheckResult suite_translation(int N, unsigned long seed, int trials, long deg);
CheckResult suite_virasoro(int N, unsigned long seed, int trials, long deg);

// weylw
std::vector<CheckResult> suite_fms1(int maxN, unsigned maxl, long mode_range);
CheckResult suite_fms2(int N, long deg, long mode_range);
CheckResult suite_ul1(int maxN, unsigned kmax);
CheckResult suite_hw(int N, unsigned long seed, int trials, unsigned kmax);
CheckResult suite_wizom(int N, long deg);
CheckResult suite_embedding(int N, unsigned kmax);

// dhat
CheckResult suite_psi_cocycle(unsigned long seed, int trials);
CheckResult suite_dhat_jacobi(unsigned long seed, int trials);
CheckResult suite_main_gener(unsigned long seed, int trials, int maxN, int order);
CheckResult suite_quasifinite(unsigned long seed, int trials, int maxN);
CheckResult suite_weights_cross(int N, unsigned long seed, int trials, int order);
CheckResult suite_prop63(int N, unsigned ab_max, long mode_range, long deg);
CheckResult suite_cor_n1(unsigned long seed, int trials, int order);

// Realization agreement of [J^a(m), J^b(n)] per index tuple over the M(1)
// basis slice of degree <= deg, sharing mode maps across the whole sweep.
std::map<std::tuple<unsigned, long, unsigned, long>, bool>
realization_agreement_table(int N, unsigned ab_max, long mode_range, long deg);

struct Scales {
  int N = 1;
  unsigned long seed = 20240801;
  long trunc_degree = 4;
  int series_order = 10;
  unsigned max_k = 8;
  int n_random = 50;
};

// Every suite at the given scales, sorted by id (the cmd_verify payload).
std::vector<CheckResult> run_all(const Scales& s);

}  // namespace winfty::verify
