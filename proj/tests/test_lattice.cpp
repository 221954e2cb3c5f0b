#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winfty/lattice.hpp"
#include "winfty/verify.hpp"

using namespace winfty;

TEST_CASE("gram pairing") {
  const LatticeConfig cfg(2);
  const auto a1 = LatticeVector::alpha(cfg, 1), a2 = LatticeVector::alpha(cfg, 2);
  const auto b1 = LatticeVector::beta(cfg, 1), b2 = LatticeVector::beta(cfg, 2);
  const auto g1 = LatticeVector::gamma(cfg, 1);
  CHECK(pairing(a1, a1) == 1);
  CHECK(pairing(a1, a2) == 0);
  CHECK(pairing(b1, b1) == -1);
  CHECK(pairing(b1, b2) == 0);
  CHECK(pairing(a1, b2) == 0);
  CHECK(pairing(a1, b1) == 0);
  CHECK(pairing(g1, g1) == 0);
  CHECK(pairing(g1, a1) == 1);
  CHECK(pairing(g1, b1) == -1);

  const LatticeConfig cfg1(1);
  CHECK_THROWS_AS(pairing(LatticeVector::alpha(cfg1, 1), a1), std::invalid_argument);
}

TEST_CASE("pairing symmetry on random vectors") {
  verify::Rng rng(7);
  const LatticeConfig cfg(3);
  for (int t = 0; t < 50; ++t) {
    const auto x = rng.label(cfg, 4, false), y = rng.label(cfg, 4, false);
    CHECK(pairing(x, y) == pairing(y, x));
  }
}

TEST_CASE("signature is (N,N)") {
  const auto r = verify::suite_signature(3);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("epsilon basics") {
  const LatticeConfig cfg(2);
  verify::Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto y = rng.label(cfg, 3, false);
    CHECK(epsilon(LatticeVector::zero(cfg), y) == 1);
    CHECK(epsilon(y, LatticeVector::zero(cfg)) == 1);
  }
  // eps(gamma_i, -gamma_j) = 1 for all i, j, N <= 3
  for (int N = 1; N <= 3; ++N) {
    const LatticeConfig c(N);
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        CHECK(epsilon(LatticeVector::gamma(c, i), -LatticeVector::gamma(c, j)) == 1);
  }
  // the even-pairing commutator case pinned by the commutator map
  const auto a1 = LatticeVector::alpha(cfg, 1), b1 = LatticeVector::beta(cfg, 1);
  CHECK(epsilon(a1, b1) * epsilon(b1, a1) == 1);
}

TEST_CASE("cocycle identity") {
  for (int N = 1; N <= 3; ++N) {
    const auto r = verify::suite_2c(N, 555, 1000);
    CHECK_MESSAGE(r.pass, r.detail);
  }
}

TEST_CASE("epsilon commutator on even-norm pairs") {
  for (int N = 1; N <= 3; ++N) {
    const auto r = verify::suite_epsilon_comm(N, 556, 400);
    CHECK_MESSAGE(r.pass, r.detail);
  }
}

TEST_CASE("epsilon trivial on the gamma sublattice") {
  const auto r = verify::suite_epsilon_gamma(3);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("cocycle table matches epsilon") {
  for (int N = 1; N <= 3; ++N) {
    const LatticeConfig cfg(N);
    const CocycleTable t = CocycleTable::standard(cfg);
    verify::Rng rng(60 + static_cast<unsigned long>(N));
    for (int k = 0; k < 100; ++k) {
      const auto x = rng.label(cfg, 3, false), y = rng.label(cfg, 3, false);
      const int want = (t.bform(x, y) % 2 == 0) ? 1 : -1;
      CHECK(epsilon(x, y) == want);
    }
  }
}
