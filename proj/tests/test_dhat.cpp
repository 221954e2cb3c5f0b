#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winfty/dhat.hpp"
#include "winfty/verify.hpp"

using namespace winfty;

TEST_CASE("psi on pure powers of t") {
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      const Rational want = (m + n == 0) ? Rational(m) : Rational(0);
      CHECK(psi(raw_monomial(m, 0), raw_monomial(n, 0)) == want);
    }
}

TEST_CASE("psi alternating and antisymmetry") {
  for (long a = -2; a <= 2; ++a)
    for (unsigned d = 0; d <= 3; ++d) CHECK(psi(raw_monomial(a, d), raw_monomial(a, d)).is_zero());
  // (t d, t^{-1} d) balances neither t-degree, so both orders vanish
  CHECK(psi(raw_monomial(1, 1), raw_monomial(-1, 1)) == -psi(raw_monomial(-1, 1), raw_monomial(1, 1)));
  CHECK(psi(raw_monomial(1, 1), raw_monomial(-1, 1)).is_zero());
  // a genuinely nonzero antisymmetric pair
  const Rational p1 = psi(raw_monomial(3, 1), raw_monomial(-1, 1));
  CHECK(p1 == Rational(-1));
  CHECK(psi(raw_monomial(-1, 1), raw_monomial(3, 1)) == Rational(1));
}

TEST_CASE("psi cocycle identity") {
  const auto r = verify::suite_psi_cocycle(1001, 100);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("basis conversion examples") {
  for (long k = -3; k <= 3; ++k) {
    CHECK(j_to_l(DiffOpElement::basis(OpKind::J, 0, k)) == DiffOpElement::basis(OpKind::L, 0, k));
    CHECK(j_to_l(DiffOpElement::basis(OpKind::J, 1, k)) == DiffOpElement::basis(OpKind::L, 1, k));
    DiffOpElement want = DiffOpElement::basis(OpKind::L, 2, k);
    want += Rational(-1) * DiffOpElement::basis(OpKind::L, 1, k);
    CHECK(j_to_l(DiffOpElement::basis(OpKind::J, 2, k)) == want);
    // round trips both ways
    for (unsigned l = 0; l <= 5; ++l) {
      CHECK(l_to_j(j_to_l(DiffOpElement::basis(OpKind::J, l, k))) == DiffOpElement::basis(OpKind::J, l, k));
      CHECK(j_to_l(l_to_j(DiffOpElement::basis(OpKind::L, l, k))) == DiffOpElement::basis(OpKind::L, l, k));
    }
  }
}

TEST_CASE("dhat bracket central term") {
  const Rational c(-2);
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      const DiffOpElement br =
          dhat_bracket(DiffOpElement::basis(OpKind::J, 0, m), DiffOpElement::basis(OpKind::J, 0, n), c);
      CHECK(br.terms().empty());
      const Rational want = (m + n == 0) ? Rational(m) * c : Rational(0);
      CHECK(br.central() == want);
    }
}

TEST_CASE("dhat bracket alternating and jacobi") {
  verify::Rng rng(2002);
  for (int t = 0; t < 30; ++t) {
    const DiffOpElement x = raw_monomial(rng.uniform(-3, 3), static_cast<unsigned>(rng.uniform(0, 3)));
    CHECK(dhat_bracket(x, x, Rational(-1)).is_zero());
  }
  const auto r = verify::suite_dhat_jacobi(2003, 100);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("delta series examples") {
  // lambda = 0: zero series
  CHECK(delta_series(Weight::zero(2), 2, 10).is_zero());
  CHECK(delta_closed_form(Weight::zero(2), 2, 10).is_zero());

  // N=1, <l,a>=0, <l,b>=-1 (s=1, t=0): constant -1
  const Weight l01({Rational(0)}, {Rational(-1)});
  CHECK(delta_closed_form(l01, 1, 10) == PowerSeries::constant(Rational(-1), 10));
  CHECK(delta_series(l01, 1, 10) == PowerSeries::constant(Rational(-1), 10));

  // N=1, <l,a>=1, <l,b>=0: zero series
  const Weight l10({Rational(1)}, {Rational(0)});
  CHECK(delta_closed_form(l10, 1, 10).is_zero());
  CHECK(delta_series(l10, 1, 10).is_zero());
}

TEST_CASE("theorem main: the two delta paths agree") {
  const auto r = verify::suite_main_gener(3003, 40, 3, 10);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("quasifinite decomposition examples") {
  // lambda = 0: the single constant term (0, -N)
  for (int N = 1; N <= 3; ++N) {
    const auto dec = quasifinite_decompose(Weight::zero(N), N);
    REQUIRE(dec.terms.size() == 1);
    CHECK(dec.terms[0].first == Rational(0));
    CHECK(dec.terms[0].second == std::vector<Rational>{Rational(-N)});
    CHECK(dec.multiplicity_sum_at_zero() == Rational(-N));
  }

  // N=1, s=1, t=0: exponent 2 pruned, {(1, -1)} remains
  const Weight l01({Rational(0)}, {Rational(-1)});
  const auto dec = quasifinite_decompose(l01, 1);
  REQUIRE(dec.terms.size() == 1);
  CHECK(dec.terms[0].first == Rational(1));
  CHECK(dec.terms[0].second == std::vector<Rational>{Rational(-1)});

  // N=2, s=(1,1), t=(0,0): merged exponent 1 with multiplicity -2
  const Weight l2({Rational(0), Rational(0)}, {Rational(-1), Rational(-1)});
  const auto dec2 = quasifinite_decompose(l2, 2);
  REQUIRE(dec2.terms.size() == 1);
  CHECK(dec2.terms[0].first == Rational(1));
  CHECK(dec2.terms[0].second == std::vector<Rational>{Rational(-2)});
}

TEST_CASE("quasifinite decomposition randomized") {
  const auto r = verify::suite_quasifinite(4004, 40, 3);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("weight components") {
  const Weight zero = Weight::zero(1);
  for (const auto& x : weight_components(zero, 1, 8).lambda_n) CHECK(x.is_zero());

  const Weight l01({Rational(0)}, {Rational(-1)});
  const auto ws = weight_components(l01, 1, 8);
  CHECK(ws.lambda_n[0] == Rational(-1));
  for (size_t n = 1; n < ws.lambda_n.size(); ++n) CHECK(ws.lambda_n[n].is_zero());
}

TEST_CASE("weight components cross-check against measured eigenvalues") {
  for (int N = 1; N <= 2; ++N) {
    const auto r = verify::suite_weights_cross(N, 5005 + static_cast<unsigned long>(N), 4, 6);
    CHECK_MESSAGE(r.pass, r.detail);
  }
}

TEST_CASE("realization bracket pinned examples") {
  CHECK(realization_bracket_check(0, 1, 0, -1, 1, 3));
  CHECK(realization_bracket_check(0, 1, 0, -1, 2, 2));
  CHECK(realization_bracket_check(0, 0, 1, -1, 1, 3));
  CHECK(realization_bracket_check(1, 1, 1, -1, 1, 3));
}

TEST_CASE("N=1 corollary specialization") {
  const auto r = verify::suite_cor_n1(6006, 60, 10);
  CHECK_MESSAGE(r.pass, r.detail);
}
