#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winfty/verify.hpp"
#include "winfty/weylw.hpp"

using namespace winfty;

TEST_CASE("weyl vacuum relations") {
  const LatticeConfig cfg(2);
  const State vac = State::vacuum(cfg);
  for (int i = 1; i <= 2; ++i) {
    for (long n = 1; n <= 3; ++n)
      CHECK(weyl_mode(WeylIndex{i, true, n}, vac).is_zero());
    CHECK_FALSE(weyl_mode(WeylIndex{i, true, 0}, vac).is_zero());  // a*(0) creates
    for (long m = 0; m <= 3; ++m)
      CHECK(weyl_mode(WeylIndex{i, false, m}, vac).is_zero());
  }
}

TEST_CASE("A^i(0) f^j = -delta_ij vacuum") {
  // matches the abstract Weyl side: a_i(0) a*_j(0) 1 = -delta_ij C 1
  const LatticeConfig cfg(2);
  const State vac = State::vacuum(cfg);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const State fj = f_state(cfg, j);
      const State want = (i == j) ? Rational(-1) * vac : Rational(0) * vac;
      CHECK(weyl_mode(WeylIndex{i, false, 0}, fj) == want);
      for (long m = 1; m <= 3; ++m) CHECK(weyl_mode(WeylIndex{i, false, m}, fj).is_zero());
    }
}

TEST_CASE("weyl bracket spot checks") {
  const LatticeConfig cfg(2);
  verify::Rng rng(66);
  for (int t = 0; t < 8; ++t) {
    const State w = rng.state(cfg, 1, 3, 0, false);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        const long n = rng.uniform(-2, 2), m = rng.uniform(-2, 2);
        State lhs = weyl_mode(WeylIndex{i, true, n}, weyl_mode(WeylIndex{j, false, m}, w)) -
                    weyl_mode(WeylIndex{j, false, m}, weyl_mode(WeylIndex{i, true, n}, w));
        const State want = (i == j && m + n == 0) ? w : Rational(0) * w;
        CHECK(lhs == want);
      }
  }
}

TEST_CASE("weyl_field agrees with the generic mode engine") {
  for (int N = 1; N <= 2; ++N) {
    const LatticeConfig cfg(N);
    verify::Rng rng(2024 + static_cast<unsigned long>(N));
    for (int t = 0; t < 12; ++t) {
      const State w = rng.state(cfg, 2, 4, 1, false);
      for (int i = 1; i <= N; ++i)
        for (bool starred : {false, true}) {
          const ModeMap fast = weyl_field(i, starred, w, -3, 3);
          for (long n = -3; n <= 3; ++n) {
            const State slow = weyl_mode(WeylIndex{i, starred, n}, w);
            auto it = fast.find(n);
            if (it == fast.end())
              CHECK(slow.is_zero());
            else
              CHECK(it->second == slow);
          }
        }
    }
  }
}

TEST_CASE("weyl fields reject module-weight states") {
  const LatticeConfig cfg(1);
  const Weight lambda({Rational(1)}, {Rational(2)});
  const State vl = State::highest_weight(cfg, lambda);
  CHECK_THROWS_AS(weyl_mode(WeylIndex{1, false, 0}, vl), std::invalid_argument);
}

TEST_CASE("build_U at k=0") {
  const LatticeConfig cfg(2);
  for (int i = 1; i <= 2; ++i) {
    // alpha_i(-1) 1 - gamma_i(-1) 1 = -beta_i(-1) 1
    const State want = apply_mode(-HeisenbergVector::beta(cfg, i), -1, State::vacuum(cfg));
    CHECK(build_U(cfg, i, 0) == want);
  }
}

TEST_CASE("build_U degree and membership") {
  const LatticeConfig cfg(2);
  for (int i = 1; i <= 2; ++i)
    for (unsigned k = 0; k <= 4; ++k) {
      const State u = build_U(cfg, i, k);
      CHECK_FALSE(u.is_zero());
      for (const auto& [m, c] : u.terms()) {
        CHECK(m.label.is_zero());
        CHECK(l0_degree(m) == Rational(static_cast<long>(k) + 1));
      }
    }
}

TEST_CASE("generator identity across N and k") {
  const auto r = verify::suite_ul1(3, 6);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("fms1 exhaustive at reduced scale") {
  for (const auto& r : verify::suite_fms1(2, 4, 3)) CHECK_MESSAGE(r.pass, r.id << ": " << r.detail);
}

TEST_CASE("fms2 at reduced scale") {
  const auto r = verify::suite_fms2(1, 3, 3);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("hw eigenvalue examples") {
  const int N = 2;
  const Weight zero = Weight::zero(N);
  for (unsigned k = 0; k <= 6; ++k) CHECK(hw_eigenvalue(k, zero, N) == Rational(0));

  verify::Rng rng(77);
  for (int t = 0; t < 10; ++t) {
    const Weight lambda = rng.weight(N);
    Rational want(0);
    for (int i = 1; i <= N; ++i)
      want -= -lambda.pair_gamma(i) + lambda.alpha_pair[static_cast<size_t>(i - 1)];
    CHECK(hw_eigenvalue(0, lambda, N) == want);
  }

  // N=1, <lambda,alpha> = 1, <lambda,beta> = 0: all eigenvalues vanish
  const Weight l10({Rational(1)}, {Rational(0)});
  for (unsigned k = 0; k <= 8; ++k) CHECK(hw_eigenvalue(k, l10, 1) == Rational(0));
}

TEST_CASE("j_mode on the highest weight vector") {
  const LatticeConfig cfg(1);
  const Weight lambda({Rational(0)}, {Rational(-1)});
  const State vl = State::highest_weight(cfg, lambda);
  CHECK(j_mode(0, 0, vl) == Rational(-1) * vl);
  for (unsigned k = 1; k <= 4; ++k) CHECK(j_mode(k, 0, vl).is_zero());
  for (long m = 1; m <= 3; ++m) CHECK(j_mode(0, m, vl).is_zero());
}

TEST_CASE("hw lemma randomized") {
  for (int N = 1; N <= 2; ++N) {
    const auto r = verify::suite_hw(N, 888 + static_cast<unsigned long>(N), 12, 6);
    CHECK_MESSAGE(r.pass, r.detail);
  }
}

TEST_CASE("weyl span has the vacuum-module graded dimensions") {
  const auto r = verify::suite_wizom(1, 4);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("embedding evidence") {
  const auto r = verify::suite_embedding(1, 6);
  CHECK_MESSAGE(r.pass, r.detail);
}
