#pragma once

#include "winfty/vertexop.hpp"

namespace winfty {

// Mode address of a Weyl generator in the V_L realization:
// unstarred = A^i(n) with A^i(z) = sum A^i(n) z^{-n-1} = Y(iota(gamma_i) (x) alpha_i(-1), z),
// starred   = Abar^i(n) with Abar^i(z) = sum Abar^i(n) z^{-n} = Y(iota(-gamma_i), z).
// The weight-shifted starred expansion means Abar^i(n) = (f^i)_{n-1}; that
// translation lives only here.
struct WeylIndex {
  int i = 1;  // 1..N
  bool starred = false;
  long n = 0;
};

// e^i = iota(gamma_i) and f^i = iota(-gamma_i).
State e_state(const LatticeConfig& cfg, int i);
State f_state(const LatticeConfig& cfg, int i);
// iota(gamma_i) (x) alpha_i(-1), the state underlying A^i(z).
State a_generator_state(const LatticeConfig& cfg, int i);

// Action of one Weyl mode; rejects module-weight states (the fields live on V_L).
State weyl_mode(const WeylIndex& idx, const State& w);

// All modes X^i(n) w for n in [lo, hi] (physics indexing: unstarred keys are
// the m of A^i(m), starred keys the n of Abar^i(n)). Same values as weyl_mode;
// the fields only touch the color-i creations and the label scalars, so the
// per-monomial action is computed once in a surrogate N=1 system and cached,
// with spectator colors carried through. Equivalence against weyl_mode is
// covered by tests.
ModeMap weyl_field(int i, bool starred, const State& w, long lo, long hi);

// U^i_k = A^i(-1) Abar^i(-k) 1, computed both through the Weyl modes and
// through the Schur closed form alpha_i(-1) p_k(-gamma_i) 1 + p_{k+1}(-gamma_i) 1;
// the two paths are cross-asserted (inconsistency_error on mismatch) and the
// Schur form is returned.
State build_U(const LatticeConfig& cfg, int i, unsigned k);

struct WGenerator {
  unsigned k = 0;
  State state;                  // U_k = sum_i U^i_k
  std::vector<State> per_pair;  // U^i_k, i = 1..N
};

// Cached per (N, k); the cross-assertion runs on first construction.
const WGenerator& w_generator(const LatticeConfig& cfg, unsigned k);

// J^k(m) w = -k! (U_k)_{m+k} w; valid on V_L, M(1) and M(1,lambda).
State j_mode(unsigned k, long m, const State& w);

// Closed-form J^k(0)-eigenvalue on v_lambda:
// -k! sum_i [ C(-<lambda,gamma_i>, k+1) + <lambda,alpha_i> C(-<lambda,gamma_i>, k) ].
Rational hw_eigenvalue(unsigned k, const Weight& lambda, int N);

}  // namespace winfty
