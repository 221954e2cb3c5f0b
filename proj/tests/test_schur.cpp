#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winfty/schur.hpp"
#include "winfty/verify.hpp"

using namespace winfty;

TEST_CASE("schur_poly small cases") {
  CHECK(schur_poly(0).terms == SparsePoly(Rational(1)));
  CHECK(schur_poly(1).terms == SparsePoly::variable(1));
  SparsePoly p2;
  p2.add_term({2}, Rational(1, 2));     // x_1^2 / 2
  p2.add_term({0, 1}, Rational(1, 2));  // x_2 / 2
  CHECK(schur_poly(2).terms == p2);
}

TEST_CASE("generating function identity") {
  const auto r = verify::suite_eschurd(10);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("alternating evaluation equals gen_binomial") {
  CHECK(schur_alternating_eval(Rational(9, 7), 0) == Rational(1));
  CHECK(schur_alternating_eval(Rational(-5, 3), 1) == Rational(-5, 3));
  CHECK(schur_alternating_eval(Rational(3), 2) == Rational(3));
  const auto r = verify::suite_schur_binom(4242, 200, 10);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("schur_state small cases") {
  const LatticeConfig cfg(1);
  const State vac = State::vacuum(cfg);
  const auto g = HeisenbergVector::gamma(cfg, 1);
  CHECK(schur_state(g, 0, vac) == vac);
  CHECK(schur_state(g, 1, vac) == apply_mode(g, -1, vac));

  // p_2(-gamma) 1 = 1/2 gamma(-1)^2 1 - 1/2 gamma(-2) 1
  State want = Rational(1, 2) * apply_mode(g, -1, apply_mode(g, -1, vac));
  want -= Rational(1, 2) * apply_mode(g, -2, vac);
  CHECK(schur_state(-g, 2, vac) == want);
}

TEST_CASE("schur_state homogeneity") {
  const LatticeConfig cfg(2);
  verify::Rng rng(5150);
  for (int t = 0; t < 10; ++t) {
    const auto h = rng.heis(cfg);
    const unsigned r = static_cast<unsigned>(rng.uniform(0, 7));
    const State s = schur_state(h, r, State::vacuum(cfg));
    for (const auto& [m, c] : s.terms()) CHECK(l0_degree(m) == Rational(static_cast<long>(r)));
  }
}

TEST_CASE("schur_state matches substitution into schur_poly") {
  const LatticeConfig cfg(1);
  const State vac = State::vacuum(cfg);
  verify::Rng rng(90210);
  for (int t = 0; t < 5; ++t) {
    const auto h = rng.heis(cfg);
    for (unsigned r = 0; r <= 5; ++r) {
      State direct(cfg);
      for (const auto& [exps, c] : schur_poly(r).terms.terms()) {
        State term = c * vac;
        for (size_t k = 0; k < exps.size(); ++k)
          for (unsigned rep = 0; rep < exps[k]; ++rep)
            term = apply_mode(h, -static_cast<long>(k + 1), term);
        direct += term;
      }
      CHECK(schur_state(h, r, vac) == direct);
    }
  }
}

TEST_CASE("schur_state on a highest weight vector") {
  const LatticeConfig cfg(1);
  const Weight lambda({Rational(1, 2)}, {Rational(-2)});
  const State vl = State::highest_weight(cfg, lambda);
  const State s = schur_state(HeisenbergVector::alpha(cfg, 1), 3, vl);
  CHECK(s.module_weight().has_value());
  CHECK(s.size() == 3);  // partitions of 3
}
