// Acceptance gate: every check is exact (rational arithmetic, zero tolerance)
// at desk scale, with a wall-clock budget per criterion. Prints one line per
// criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "winfty/verify.hpp"

using namespace winfty;
using verify::CheckResult;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, const std::vector<CheckResult>& results,
            double elapsed_s, double budget_s) {
  std::string why;
  bool ok = true;
  for (const auto& r : results) {
    if (!r.pass) {
      ok = false;
      why = r.id + ": " + r.detail;
      break;
    }
  }
  if (ok && elapsed_s > budget_s) {
    ok = false;
    why = "runtime budget exceeded";
  }
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s)%s%s\n", ok ? "PASS" : "FAIL", index,
              name.c_str(), elapsed_s, budget_s, why.empty() ? "" : " -- ", why.c_str());
  std::fflush(stdout);
}

template <typename Fn>
void criterion(int index, const std::string& name, double budget_s, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckResult> results;
  try {
    results = fn();
  } catch (const std::exception& e) {
    results.push_back(CheckResult{"exception", false, e.what()});
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(index, name, results, elapsed, budget_s);
}

}  // namespace

int main() {
  criterion(1, "engine calibration against the standard Heisenberg lemma", 10.0, [] {
    return std::vector<CheckResult>{verify::suite_standard(1, 11, 50), verify::suite_standard(2, 12, 50)};
  });

  criterion(2, "Schur-state eigenvalue C(<lambda,h>, r) on v_lambda", 30.0, [] {
    return std::vector<CheckResult>{verify::suite_schur1(1, 21, 25, 8), verify::suite_schur1(2, 22, 25, 8)};
  });

  criterion(3, "lattice operator laws for the e^i/f^i family", 60.0, [] {
    return verify::suite_fms1(3, 5, 4);
  });

  criterion(4, "Weyl commutation relations as operator identities", 120.0, [] {
    return std::vector<CheckResult>{verify::suite_fms2(1, 5, 4), verify::suite_fms2(2, 5, 4)};
  });

  criterion(5, "generator identity U^i_k in Schur form", 30.0, [] {
    return std::vector<CheckResult>{verify::suite_ul1(3, 6)};
  });

  criterion(6, "highest weights: measured J^k(0) equals the closed form", 60.0, [] {
    return std::vector<CheckResult>{verify::suite_hw(1, 61, 50, 8), verify::suite_hw(2, 62, 50, 8)};
  });

  criterion(7, "main theorem: Delta series identity and quasifiniteness", 30.0, [] {
    return std::vector<CheckResult>{verify::suite_main_gener(71, 100, 3, 10),
                                    verify::suite_quasifinite(72, 100, 3)};
  });

  criterion(8, "bracket isomorphism evidence on M(1) at desk scale", 120.0, [] {
    return std::vector<CheckResult>{verify::suite_prop63(1, 2, 2, 3), verify::suite_prop63(2, 2, 2, 3)};
  });

  criterion(9, "structural axioms: commutator formula, Virasoro, cocycles", 120.0, [] {
    return std::vector<CheckResult>{
        verify::suite_comut(1, 91, 40, 4),    verify::suite_comut(2, 92, 40, 4),
        verify::suite_virasoro(1, 93, 30, 4), verify::suite_virasoro(2, 94, 30, 4),
        verify::suite_2c(2, 95, 1000),        verify::suite_2c(3, 96, 1000),
        verify::suite_psi_cocycle(97, 200)};
  });

  criterion(10, "closed form at N=1 matches the general series", 10.0, [] {
    return std::vector<CheckResult>{verify::suite_cor_n1(101, 50, 10)};
  });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
