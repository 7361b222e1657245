#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bch {

/// Run configuration for the verification suites.  Defaults are the
/// shipped values; a flat key=value file (path from BCH_RESUM_CONFIG or
/// --config) and command-line flags override them.
struct RunConfig {
  std::uint64_t seed = 20240817;
  int trials = 50;
  int jobs = 1;
  std::string output = "json";  // json|csv
  std::map<std::string, double> tolerances;
  std::map<std::string, int> n_caps;
  std::vector<double> bch_epsilons = {0.2, 0.1, 0.05};
  std::vector<double> perturb_epsilons = {0.1, 0.05, 0.025};

  static RunConfig defaults();

  double tol(const std::string& suite) const;
  int cap(const std::string& suite) const;

  // Parses "key=value" lines; '#' starts a comment.  Unknown keys throw.
  void load_file(const std::string& path);
  void set_kv(const std::string& key, const std::string& value);
};

}  // namespace bch
