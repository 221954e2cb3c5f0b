#pragma once

#include "winfty/fock.hpp"
#include "winfty/schur.hpp"

#include <map>

namespace winfty {

// Sparse family of modes: only nonzero v_m w entries are stored.
using ModeMap = std::map<long, State>;

// Largest m for which v_m w can be nonzero, by the conformal grading
// (deg(v_m w) = deg v + deg w - m - 1 and degree is bounded below per label).
// Returns a very negative sentinel when either state is zero.
long mode_upper_bound(const State& v, const State& w);

// Modes of Y(iota(a), z) = E^-(a,z) E^+(a,z) e_a z^a on w, for m in [lo, hi].
// Rejects module-weight w unless a = 0.
ModeMap lattice_field(const LatticeVector& a, const State& w, long lo, long hi);
State lattice_mode(const LatticeVector& a, long m, const State& w);

// Modes of Y(v, z) w for v in a vacuum module (V_L or M(1)), by structural
// recursion on the creation generators of v; all sums are finite.
ModeMap field(const State& v, const State& w, long lo, long hi);
State mode(const State& v, long m, const State& w);

struct ModeRequest {
  State v;
  long m = 0;
  State w;
  State run() const { return mode(v, m, w); }
};

// Normal-ordered product a_{-1} b; both states must be in a vacuum module.
State nop(const State& a, const State& b);

// [a_m, b_n] w - sum_j C(m,j) (a_j b)_{m+n-j} w; identically zero when the
// commutator formula holds (verification primitive).
State commutator_residual(const State& a, long m, const State& b, long n, const State& w);

// Orthogonal basis of h with diagonal Gram signs; the conformal vector folds
// the signs into the quadratic summands.
struct VirasoroConfig {
  std::vector<HeisenbergVector> basis;
  std::vector<int> norms;  // +1 or -1 per basis vector

  static VirasoroConfig standard(const LatticeConfig& cfg);  // alpha_i (+1), beta_i (-1)
  void validate() const;  // Gram matrix of the stored basis must be diagonal +-1
  State omega(const LatticeConfig& cfg) const;
};

// L_n w = mode(omega, n+1, w) with the standard basis for w's config.
State virasoro_mode(long n, const State& w);
State virasoro_mode(const VirasoroConfig& vc, long n, const State& w);

}  // namespace winfty
