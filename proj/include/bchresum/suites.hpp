#pragma once

#include <random>
#include <string>
#include <vector>

#include "bchresum/config.hpp"
#include "bchresum/gseries.hpp"

namespace bch {

struct SuiteResult {
  std::string name;
  std::vector<IdentityReport> reports;
  double max_residual = 0;
  bool pass = true;

  void add(IdentityReport r);
};

// Uniform draws in [-2,2], rejecting tuples with a contiguous sum below
// the regularity threshold.
std::vector<double> random_regular_tuple(std::mt19937_64& rng, std::size_t n,
                                         double delta = kRegularDelta);

// Least-squares slope of log|err| against log(eps).
double loglog_slope(const std::vector<double>& eps,
                    const std::vector<double>& err);

// name in {coeffs, identities, equivalence, marching, denominator,
// bch, perturb, all} plus the finer-grained suites the CLI exposes
// (52, jk, x, permcancel, hclosed, edge).
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

const std::vector<std::string>& suite_names();

}  // namespace bch
