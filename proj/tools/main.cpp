#include <cstdlib>
#include <fstream>
#include <map>
#include <tuple>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bchresum/gseries.hpp"
#include "bchresum/matrix.hpp"
#include "bchresum/perm.hpp"
#include "bchresum/perturb.hpp"
#include "bchresum/series.hpp"
#include "bchresum/suites.hpp"

namespace {

std::vector<double> parse_args_csv(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::string perm_to_string(const bch::SignedPerm& p) {
  std::ostringstream os;
  os << (p.sign >= 0 ? "+" : "-");
  if (std::abs(p.sign) != 1) os << std::abs(p.sign);
  os << "(";
  for (int i = 0; i < p.arity(); ++i) {
    if (i) os << " ";
    os << p.map[static_cast<std::size_t>(i)];
  }
  os << ")";
  return os.str();
}

void print_suite(const bch::SuiteResult& res, const std::string& out_path,
                 bool json) {
  std::ostringstream os;
  if (json) {
    os << "{\"suite\":\"" << res.name << "\",\"checks\":" << res.reports.size()
       << ",\"max_residual\":" << std::setprecision(17) << res.max_residual
       << ",\"pass\":" << (res.pass ? "true" : "false") << ",\"reports\":[";
    for (std::size_t i = 0; i < res.reports.size(); ++i) {
      if (i) os << ",";
      os << res.reports[i].to_json();
    }
    os << "]}\n";
  } else {
    // summary rows grouped by identity label ("name N=k")
    os << "identity,n,trials,max_residual,pass\n";
    std::map<std::string, std::tuple<int, double, bool>> groups;
    std::vector<std::string> order;
    for (const auto& r : res.reports) {
      auto [it, fresh] = groups.try_emplace(r.identity, 0, 0.0, true);
      if (fresh) order.push_back(r.identity);
      auto& [trials, worst, ok] = it->second;
      ++trials;
      worst = std::max(worst, std::abs(r.residual));
      ok = ok && r.pass;
    }
    for (const auto& key : order) {
      const auto& [trials, worst, ok] = groups[key];
      std::string name = key, n = "0";
      if (auto pos = key.find(" N="); pos != std::string::npos) {
        name = key.substr(0, pos);
        n = key.substr(pos + 3);
      }
      os << name << "," << n << "," << trials << ","
         << std::setprecision(17) << worst << "," << (ok ? "true" : "false")
         << "\n";
    }
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << os.str();
  } else {
    std::cout << os.str();
  }
  std::cerr << res.name << ": " << res.reports.size() << " checks, max residual "
            << std::setprecision(3) << res.max_residual << ", "
            << (res.pass ? "pass" : "FAIL") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resummed BCH coefficients: evaluators and verification suites"};
  app.require_subcommand(1);

  bch::RunConfig cfg = bch::RunConfig::defaults();
  std::string config_path;
  if (const char* env = std::getenv("BCH_RESUM_CONFIG")) config_path = env;
  app.add_option("--config", config_path, "key=value config file");

  // coeffs <name> <order>
  std::string series_name = "t";
  int series_order = 10;
  bool coeffs_json = false;
  auto* c_coeffs = app.add_subcommand("coeffs", "Exact series coefficients");
  c_coeffs->add_option("name", series_name, "t|T|s|W")->required();
  c_coeffs->add_option("order", series_order)->required();
  c_coeffs->add_flag("--json", coeffs_json);

  // perm expand-p N | perm marching N m
  auto* c_perm = app.add_subcommand("perm", "Signed permutation sums");
  int perm_n = 3, perm_m = 1;
  auto* c_pp = c_perm->add_subcommand("expand-p", "Expanded P_N");
  c_pp->add_option("N", perm_n)->required();
  auto* c_pm = c_perm->add_subcommand("marching", "Marching operator M_{N,m}");
  c_pm->add_option("N", perm_n)->required();
  c_pm->add_option("m", perm_m)->required();
  c_perm->require_subcommand(1);

  // eval h|f|u|bracket --args a,b,c [--r k]
  std::string eval_what = "h", eval_args;
  int eval_r = 0;
  auto* c_eval = app.add_subcommand("eval", "Hyperbolic evaluators");
  c_eval->add_option("what", eval_what, "h|f|u|bracket")->required();
  c_eval->add_option("--args", eval_args, "comma-separated arguments")
      ->required();
  c_eval->add_option("--r", eval_r, "index for u");

  // g eval --rep perm|orig|over --args ...
  std::string g_rep = "perm", g_args;
  auto* c_g = app.add_subcommand("g", "G_N evaluation");
  auto* c_ge = c_g->add_subcommand("eval");
  c_ge->add_option("--rep", g_rep, "perm|orig|over");
  c_ge->add_option("--args", g_args)->required();
  c_g->require_subcommand(1);

  // verify <suite> ...
  std::string v_suite = "all", v_out;
  bool v_json = false, v_csv = false;
  int v_n = -1;
  auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
  c_verify->add_option("suite", v_suite)->required();
  c_verify->add_option("--n", v_n, "cap override for this suite");
  c_verify->add_option("--trials", cfg.trials);
  c_verify->add_option("--seed", cfg.seed);
  c_verify->add_option("--jobs", cfg.jobs);
  c_verify->add_option("--out", v_out, "write report to file");
  double v_tol = -1;
  c_verify->add_option("--tol", v_tol, "tolerance override");
  c_verify->add_flag("--json", v_json);
  c_verify->add_flag("--csv", v_csv);

  // run <suite|all> — verify with defaults
  std::string r_suite = "all";
  auto* c_run = app.add_subcommand("run", "Run a suite with defaults");
  c_run->add_option("suite", r_suite);

  // bch approx
  int b_dim = 4, b_order = 3;
  double b_bnorm = 1.0;
  std::uint64_t b_seed = 1;
  auto* c_bch = app.add_subcommand("bch", "Matrix BCH series vs oracle");
  auto* c_ba = c_bch->add_subcommand("approx");
  c_ba->add_option("--dim", b_dim);
  c_ba->add_option("--order", b_order);
  c_ba->add_option("--bnorm", b_bnorm);
  c_ba->add_option("--seed", b_seed);
  c_bch->require_subcommand(1);

  // perturb
  int p_dim = 4;
  std::uint64_t p_seed = 1;
  std::string p_eps;
  auto* c_pert = app.add_subcommand("perturb", "Eigenvalue corrections sweep");
  c_pert->add_option("--dim", p_dim);
  c_pert->add_option("--seed", p_seed);
  c_pert->add_option("--eps", p_eps, "comma-separated epsilons");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) cfg.load_file(config_path);

    if (*c_coeffs) {
      bch::RationalSeries s = bch::series_by_name(
          series_name, static_cast<std::size_t>(series_order));
      if (coeffs_json) {
        std::cout << "{\"series\":\"" << s.name << "\",\"coeffs\":[";
        for (std::size_t k = 0; k < s.coeffs.size(); ++k)
          std::cout << (k ? "," : "") << "\"" << s.coeffs[k] << "\"";
        std::cout << "]}\n";
      } else {
        for (const auto& c : s.coeffs) std::cout << c << "\n";
      }
      return 0;
    }

    if (*c_perm) {
      bch::PermSum p = *c_pp ? bch::expand_P(perm_n)
                             : bch::marching(perm_n, perm_m);
      for (const auto& t : p) std::cout << perm_to_string(t) << "\n";
      std::cout << "# terms: " << p.size() << "\n";
      return 0;
    }

    if (*c_eval) {
      bch::ArgTuple t{parse_args_csv(eval_args)};
      double v = 0;
      if (eval_what == "h")
        v = bch::h_eval(t.args);  // raw arguments, not prefix sums
      else if (eval_what == "f")
        v = bch::f_eval(t);
      else if (eval_what == "u")
        v = bch::u_eval(t, static_cast<std::size_t>(eval_r));
      else if (eval_what == "bracket")
        v = bch::bracket(t);
      else
        throw CLI::ValidationError("eval", "unknown evaluator " + eval_what);
      std::cout << std::setprecision(17) << v << "\n";
      return 0;
    }

    if (*c_g) {
      double v = 0;
      std::vector<double> a = parse_args_csv(g_args);
      if (g_rep == "perm")
        v = bch::g_perm(bch::ArgTuple{a});
      else if (g_rep == "orig")
        v = bch::g_original(bch::ArgTuple{a});
      else if (g_rep == "over")
        v = bch::g_overcomplete(a);
      else
        throw CLI::ValidationError("g", "unknown representation " + g_rep);
      std::cout << std::setprecision(17) << v << "\n";
      return 0;
    }

    if (*c_verify || *c_run) {
      std::string name = *c_verify ? v_suite : r_suite;
      if (*c_verify) {
        if (v_n >= 0) cfg.n_caps[name] = v_n;
        if (v_tol >= 0) cfg.tolerances[name] = v_tol;
        if (v_csv) cfg.output = "csv";
      }
      bch::SuiteResult res = bch::run_suite(name, cfg);
      print_suite(res, *c_verify ? v_out : "",
                  cfg.output == "json" && !(*c_verify && v_csv));
      return res.pass ? 0 : 1;
    }

    if (*c_bch) {
      std::mt19937_64 rng(b_seed);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      auto rand_sym = [&](double scale) {
        bch::DenseMatrix m(static_cast<std::size_t>(b_dim));
        for (std::size_t i = 0; i < m.dim(); ++i)
          for (std::size_t j = i; j < m.dim(); ++j)
            m.at(i, j) = m.at(j, i) = scale * u(rng);
        return m;
      };
      bch::DenseMatrix a = rand_sym(1.0);
      // Spread the diagonal so the eigenvalues are well separated.
      for (std::size_t i = 0; i < a.dim(); ++i)
        a.at(i, i) += 2.0 * static_cast<double>(i);
      bch::DenseMatrix b = rand_sym(1.0);
      b *= b_bnorm / b.frobenius_norm();
      std::cout << "eps,order,error,slope\n";
      for (int order = 1; order <= b_order; ++order) {
        double prev_err = 0, prev_eps = 0;
        for (double eps : cfg.bch_epsilons) {
          bch::DenseMatrix be = b;
          be *= eps;
          double err = (bch::series_C(a, be, order).c - bch::bch_oracle(a, be))
                           .frobenius_norm();
          double slope = prev_err > 0
                             ? std::log(err / prev_err) / std::log(eps / prev_eps)
                             : 0.0;
          std::cout << eps << "," << order << "," << std::setprecision(10)
                    << err << "," << slope << "\n";
          prev_err = err;
          prev_eps = eps;
        }
      }
      return 0;
    }

    if (*c_pert) {
      std::vector<double> eps = p_eps.empty() ? cfg.perturb_epsilons
                                              : parse_args_csv(p_eps);
      std::mt19937_64 rng(p_seed);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      auto rand_sym = [&](double scale) {
        bch::DenseMatrix m(static_cast<std::size_t>(p_dim));
        for (std::size_t i = 0; i < m.dim(); ++i)
          for (std::size_t j = i; j < m.dim(); ++j)
            m.at(i, j) = m.at(j, i) = scale * u(rng);
        return m;
      };
      bch::DenseMatrix a = rand_sym(1.0);
      for (std::size_t i = 0; i < a.dim(); ++i)
        a.at(i, i) += 2.0 * static_cast<double>(i);
      bch::DenseMatrix b = rand_sym(0.5);
      std::cout << "n,eps,exact,partial_sum,residual,slope\n";
      for (std::size_t n = 0; n < static_cast<std::size_t>(p_dim); ++n) {
        bch::PerturbationResult pr = bch::epsilon_sweep(a, b, n, eps);
        double prev_res = 0, prev_eps = 0;
        for (const auto& pt : pr.epsilon_sweep) {
          double slope =
              prev_res > 0 ? std::log(pt.residual / prev_res) /
                                 std::log(pt.epsilon / prev_eps)
                           : 0.0;
          std::cout << n << "," << pt.epsilon << "," << std::setprecision(12)
                    << pt.exact << "," << pt.partial_sum << "," << pt.residual
                    << "," << slope << "\n";
          prev_res = pt.residual;
          prev_eps = pt.epsilon;
        }
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
