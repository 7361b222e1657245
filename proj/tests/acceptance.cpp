// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <string>

#include "bchresum/suites.hpp"

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, double worst,
            double secs) {
  std::printf("%2d. %-28s %s  (max residual %.2e, %.2fs)\n", idx, what.c_str(),
              ok ? "pass" : "FAIL", worst, secs);
  if (!ok) ++failures;
}

void run(int idx, const std::string& what, const std::string& suite,
         int trials) {
  bch::RunConfig cfg = bch::RunConfig::defaults();
  cfg.trials = trials;
  auto start = std::chrono::steady_clock::now();
  bch::SuiteResult res = bch::run_suite(suite, cfg);
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  report(idx, what, res.pass, res.max_residual, secs);
}

}  // namespace

int main() {
  run(1, "coefficient exactness", "coeffs", 1);
  run(2, "h closed forms r<=6", "hclosed", 100);
  run(3, "edge inversion r,m<=8", "edge", 50);
  run(4, "identity 5.2 N<=10", "52", 50);
  run(5, "representation equivalence", "equivalence", 50);
  run(6, "marching identities N<=7", "marching", 20);
  run(7, "permutation cancellation", "permcancel", 1);
  run(8, "J/K/W relation N<=6", "jk", 50);
  run(9, "X_N checks", "x", 50);
  run(10, "denominator analogue N<=8", "denominator", 50);
  run(11, "BCH convergence slopes", "bch", 1);
  run(12, "perturbation slope >= 3.5", "perturb", 1);
  if (failures) std::printf("%d criteria FAILED\n", failures);
  return failures ? 1 : 0;
}
