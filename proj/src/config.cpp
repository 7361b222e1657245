#include "bchresum/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bch {

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.tolerances = {
      {"coeffs", 0.0},        {"hclosed", 1e-12},    {"edge", 1e-12},
      {"52", 1e-11},          {"equivalence", 1e-10}, {"marching", 1e-10},
      {"jk", 1e-11},          {"x", 1e-11},           {"denominator", 1e-11},
      {"bch", 0.0},           {"perturb", 0.0},       {"permcancel", 0.0},
  };
  c.n_caps = {
      {"hclosed", 6},  {"edge", 8}, {"52", 10},          {"equivalence", 8},
      {"marching", 7}, {"jk", 6},   {"x", 6},            {"denominator", 8},
      {"permcancel", 8}, {"bch", 4}, {"perturb", 4},
  };
  return c;
}

double RunConfig::tol(const std::string& suite) const {
  auto it = tolerances.find(suite);
  if (it == tolerances.end())
    throw std::invalid_argument("no tolerance for suite " + suite);
  return it->second;
}

int RunConfig::cap(const std::string& suite) const {
  auto it = n_caps.find(suite);
  if (it == n_caps.end())
    throw std::invalid_argument("no cap for suite " + suite);
  return it->second;
}

void RunConfig::set_kv(const std::string& key, const std::string& value) {
  auto as_double = [&] { return std::stod(value); };
  if (key == "seed") {
    seed = std::stoull(value);
  } else if (key == "trials") {
    trials = std::stoi(value);
  } else if (key == "jobs") {
    jobs = std::stoi(value);
  } else if (key == "output") {
    if (value != "json" && value != "csv")
      throw std::invalid_argument("output must be json or csv");
    output = value;
  } else if (key.rfind("tol.", 0) == 0) {
    tolerances[key.substr(4)] = as_double();
  } else if (key.rfind("cap.", 0) == 0) {
    n_caps[key.substr(4)] = std::stoi(value);
  } else {
    throw std::invalid_argument("unknown config key: " + key);
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kv;
    if (!(ls >> kv)) continue;
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("malformed config line: " + line);
    set_kv(kv.substr(0, eq), kv.substr(eq + 1));
  }
}

}  // namespace bch
