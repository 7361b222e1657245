#include "bchresum/suites.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "bchresum/matrix.hpp"
#include "bchresum/perm.hpp"
#include "bchresum/perturb.hpp"
#include "bchresum/series.hpp"

namespace bch {
namespace {

std::string tag(const std::string& base, int n, int extra = -1) {
  std::ostringstream os;
  os << base << " N=" << n;
  if (extra >= 0) os << " m=" << extra;
  return os.str();
}

// Runs fn(i) for i in [0,count) on cfg.jobs threads; each index owns its
// output slot, so the merge is deterministic.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

DenseMatrix random_symmetric(std::mt19937_64& rng, std::size_t n,
                             double scale) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double v = scale * u(rng);
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

// Random symmetric A with well-separated eigenvalues.
DenseMatrix random_gapped_a(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.15, 0.6);
  std::vector<double> d(n);
  double acc = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += u(rng);
    d[i] = acc;
  }
  DenseMatrix diag = DenseMatrix::diagonal(d);
  // Conjugate by a random rotation built from the eigenvectors of a
  // random symmetric matrix.
  SpectralData sd = sym_eig(random_symmetric(rng, n, 1.0));
  return (sd.eigenvectors * diag * sd.eigenvectors.transpose()).symmetrized();
}

SuiteResult suite_coeffs(const RunConfig&) {
  SuiteResult out{"coeffs"};
  struct Printed {
    char series;
    std::size_t n;
    long num, den;
  };
  // Values printed in the series displays, through order 10.
  const Printed printed[] = {
      {'t', 0, 1, 1},    {'t', 2, -1, 3},     {'t', 4, 2, 15},
      {'t', 6, -17, 315}, {'t', 8, 62, 2835}, {'t', 10, -1382, 155925},
      {'T', 0, 1, 1},    {'T', 2, 1, 3},      {'T', 4, -1, 45},
      {'T', 6, 2, 945},  {'T', 8, -1, 4725},  {'T', 10, 2, 93555},
      {'s', 0, 1, 1},    {'s', 2, 2, 3},      {'s', 4, 2, 15},
      {'s', 6, 4, 315},  {'s', 8, 2, 2835},
  };
  for (const auto& p : printed) {
    RationalSeries s = series_by_name(std::string(1, p.series), 10);
    bool odd_zero = true;
    for (std::size_t k = 1; k <= 10; k += 2) odd_zero &= (s.coeffs[k] == 0);
    bool ok = odd_zero && s.coeffs[p.n] == Rational(p.num, p.den);
    std::ostringstream in;
    in << p.series << "_" << p.n << "=" << p.num << "/" << p.den;
    out.add(IdentityReport::make("coeffs", in.str(), ok ? 0.0 : 1.0, 0.0));
  }
  return out;
}

SuiteResult suite_52(const RunConfig& cfg) {
  SuiteResult out{"52"};
  std::mt19937_64 rng(cfg.seed);
  double tol = cfg.tol("52");
  for (int n = 1; n <= cfg.cap("52"); ++n)
    for (int trial = 0; trial < cfg.trials; ++trial) {
      ArgTuple t{random_regular_tuple(rng, static_cast<std::size_t>(n))};
      auto r = check_identity_52(t);
      r.identity = tag("52", n);
      r.tolerance = tol;
      r.pass = std::abs(r.residual) <= tol;
      out.add(std::move(r));
    }
  return out;
}

SuiteResult suite_equivalence(const RunConfig& cfg) {
  SuiteResult out{"equivalence"};
  double tol = cfg.tol("equivalence");
  int cap = cfg.cap("equivalence");
  std::vector<std::vector<IdentityReport>> slots(
      static_cast<std::size_t>(cap));
  parallel_for(cap, cfg.jobs, [&](int idx) {
    int n = idx + 1;
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < cfg.trials; ++trial) {
      ArgTuple t{random_regular_tuple(rng, static_cast<std::size_t>(n))};
      double gp = g_perm(t);
      double go = g_original(t);
      // x_0 random; the rest follow from the increments.
      std::vector<double> xs(static_cast<std::size_t>(n) + 1);
      xs[0] = u(rng);
      for (int i = 0; i < n; ++i) xs[i + 1] = xs[i] + t.args[i];
      double gv = g_overcomplete(xs);
      // The representations cancel internally; scale residuals by the
      // magnitude of the un-cancelled P_N sum.
      double gross = 0;
      for (const auto& term : expand_P(n)) {
        auto w = term.apply_window(t.args, n - 1);
        double first = (n > 1) ? w[0] : t.args[0];
        gross += std::abs(f_eval(std::span<const double>(w)) * first);
      }
      double scale = std::max(1.0, gross / std::abs(std::sinh(t.total())));
      slots[idx].push_back(IdentityReport::make(
          tag("equiv perm-orig", n), "trial=" + std::to_string(trial),
          (gp - go) / scale, tol));
      slots[idx].push_back(IdentityReport::make(
          tag("equiv perm-over", n), "trial=" + std::to_string(trial),
          (gp - gv) / scale, tol));
    }
  });
  for (auto& s : slots)
    for (auto& r : s) out.add(std::move(r));
  return out;
}

SuiteResult suite_marching(const RunConfig& cfg) {
  SuiteResult out{"marching"};
  double tol = cfg.tol("marching");
  std::mt19937_64 rng(cfg.seed);
  for (int n = 2; n <= cfg.cap("marching"); ++n)
    for (int m = 1; m <= n - 1; ++m)
      for (int trial = 0; trial < cfg.trials; ++trial) {
        // Draw until every interleaving is regular.
        std::vector<double> al, be;
        IdentityReport r;
        for (int attempt = 0;; ++attempt) {
          al = random_regular_tuple(rng, static_cast<std::size_t>(m));
          be = random_regular_tuple(rng, static_cast<std::size_t>(n - m));
          try {
            r = marching_residual(al, be);
            break;
          } catch (const NearSingular&) {
            if (attempt > 500) throw;
          }
        }
        r.identity = tag("marching", n, m);
        r.tolerance = tol;
        r.pass = std::abs(r.residual) <= tol;
        out.add(std::move(r));
      }
  return out;
}

SuiteResult suite_permcancel(const RunConfig& cfg) {
  SuiteResult out{"permcancel"};
  for (int n = 2; n <= cfg.cap("permcancel"); ++n) {
    PermSum p = expand_P(n);
    for (int m = 1; m <= n - 1; ++m) {
      PermSum prod = algebra_mul(marching(n, m), p);
      out.add(IdentityReport::make(tag("M*P=0", n, m), "exact",
                                   static_cast<double>(prod.size()), 0.0));
    }
    // R_N P_N = (-1)^{N+1} P_N and the alternating S_{N,r} resummation.
    PermSum rp;
    rp.terms.push_back(reversal(n));
    PermSum lhs = algebra_mul(rp, p);
    PermSum rhs = p;
    int sgn = (n % 2 == 0) ? -1 : 1;
    for (auto& t : rhs.terms) t.sign *= -sgn;
    for (auto& t : rhs.terms) lhs.terms.push_back(t);
    lhs.canonicalize();
    out.add(IdentityReport::make(tag("R*P-(-1)^{N+1}P", n), "exact",
                                 static_cast<double>(lhs.size()), 0.0));
    PermSum alt;
    for (int r = 1; r <= n; ++r) {
      PermSum s = s_perms(n, r);
      int rs = (r % 2 == 1) ? 1 : -1;
      for (auto& t : s.terms) {
        t.sign *= rs;
        alt.terms.push_back(t);
      }
    }
    for (auto t : p.terms) {
      t.sign = -t.sign;
      alt.terms.push_back(t);
    }
    alt.canonicalize();
    out.add(IdentityReport::make(tag("sum S_{N,r}-P", n), "exact",
                                 static_cast<double>(alt.size()), 0.0));
  }
  return out;
}

SuiteResult suite_jk(const RunConfig& cfg) {
  SuiteResult out{"jk"};
  double tol = cfg.tol("jk");
  std::mt19937_64 rng(cfg.seed);
  for (int n = 1; n <= cfg.cap("jk"); ++n)
    for (int trial = 0; trial < cfg.trials; ++trial) {
      ArgTuple t{random_regular_tuple(rng, static_cast<std::size_t>(n))};
      auto r = jk_relation(t);
      r.identity = tag("jk", n);
      r.tolerance = tol;
      r.pass = std::abs(r.residual) <= tol;
      out.add(std::move(r));
    }
  return out;
}

SuiteResult suite_x(const RunConfig& cfg) {
  SuiteResult out{"x"};
  std::mt19937_64 rng(cfg.seed);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    ArgTuple t1{random_regular_tuple(rng, 1)};
    out.add(IdentityReport::make("x1-zero", "trial=" + std::to_string(trial),
                                 x_extra(t1), 1e-13));
    ArgTuple t2{random_regular_tuple(rng, 2)};
    out.add(IdentityReport::make("x2-zero", "trial=" + std::to_string(trial),
                                 x_extra(t2), 1e-13));
    ArgTuple t3{random_regular_tuple(rng, 3)};
    double closed = (t3.args[1] * coth_x(t3.args[1]) +
                     t3.args[2] * coth_x(t3.args[2])) / 3.0;
    out.add(IdentityReport::make("x3-closed", "trial=" + std::to_string(trial),
                                 x_extra(t3) - closed, 1e-12));
  }
  double tol = cfg.tol("x");
  for (int n = 1; n <= cfg.cap("x"); ++n)
    for (int trial = 0; trial < cfg.trials; ++trial) {
      auto tuple = random_regular_tuple(rng, static_cast<std::size_t>(n) + 1);
      auto r = x_reversal(tuple);
      r.identity = tag("x-reversal", n);
      r.tolerance = tol;
      r.pass = std::abs(r.residual) <= tol;
      out.add(std::move(r));
    }
  return out;
}

SuiteResult suite_denominator(const RunConfig& cfg) {
  SuiteResult out{"denominator"};
  double tol = cfg.tol("denominator");
  std::mt19937_64 rng(cfg.seed);
  for (int n = 1; n <= cfg.cap("denominator"); ++n)
    for (int trial = 0; trial < cfg.trials; ++trial) {
      auto xs = random_regular_tuple(rng, static_cast<std::size_t>(n));
      auto r = denominator_check(xs);
      r.identity = tag("denominator", n);
      r.tolerance = tol;
      r.pass = std::abs(r.residual) <= tol;
      out.add(std::move(r));
    }
  return out;
}

// Closed forms of h_0..h_6 as explicit coth products with the gap
// coefficients filled in.
double h_closed(std::span<const double> x) {
  std::vector<double> c(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) c[i] = coth_x(x[i]);
  switch (x.size()) {
    case 0:
      return 1.0;
    case 1:
      return c[0];
    case 2:
      return c[0] * c[1] - 1.0 / 3.0;
    case 3:
      return c[0] * c[1] * c[2] - (c[0] + c[2]) / 3.0;
    case 4:
      return c[0] * c[1] * c[2] * c[3] -
             (c[0] * c[3] + c[2] * c[3] + c[0] * c[1]) / 3.0 + 2.0 / 15.0;
    case 5:
      return c[0] * c[1] * c[2] * c[3] * c[4] -
             (c[0] * c[3] * c[4] + c[2] * c[3] * c[4] + c[0] * c[1] * c[4] +
              c[0] * c[1] * c[2]) /
                 3.0 +
             2.0 / 15.0 * (c[0] + c[4]) + c[2] / 9.0;
    case 6:
      return c[0] * c[1] * c[2] * c[3] * c[4] * c[5] -
             (c[0] * c[3] * c[4] * c[5] + c[2] * c[3] * c[4] * c[5] +
              c[0] * c[1] * c[2] * c[3] + c[0] * c[1] * c[4] * c[5] +
              c[0] * c[1] * c[2] * c[5]) /
                 3.0 +
             (c[0] * c[3] + c[2] * c[3] + c[2] * c[5]) / 9.0 +
             2.0 / 15.0 * (c[4] * c[5] + c[0] * c[5] + c[0] * c[1]) -
             17.0 / 315.0;
    default:
      throw std::invalid_argument("h_closed: arity > 6");
  }
}

SuiteResult suite_hclosed(const RunConfig& cfg) {
  SuiteResult out{"hclosed"};
  double tol = cfg.tol("hclosed");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int m = 0; m <= cfg.cap("hclosed"); ++m)
    for (int trial = 0; trial < cfg.trials; ++trial) {
      std::vector<double> x(static_cast<std::size_t>(m));
      for (auto& v : x) {
        do v = u(rng);
        while (std::abs(v) < 0.05);
      }
      double closed = h_closed(x);
      double res = (h_eval(x) - closed) / std::max(1.0, std::abs(closed));
      out.add(IdentityReport::make(tag("h-closed", m),
                                   "trial=" + std::to_string(trial), res, tol));
    }
  return out;
}

SuiteResult suite_edge(const RunConfig& cfg) {
  SuiteResult out{"edge"};
  double tol = cfg.tol("edge");
  std::mt19937_64 rng(cfg.seed);
  const auto& td = t_doubles(16);
  const auto& Td = T_doubles(16);
  for (int m = 1; m <= cfg.cap("edge"); ++m)
    for (int trial = 0; trial < cfg.trials; ++trial) {
      ArgTuple t{random_regular_tuple(rng, static_cast<std::size_t>(m))};
      // h_m = sum_r t_r u_{m-r}; residuals scaled by the largest term
      // since small prefix sums inflate every coth.
      double lhs = h_eval(std::span(t.prefix));
      double rhs = 0, scale = std::max(1.0, std::abs(lhs));
      for (int r = 0; r <= m; ++r) {
        double term = td[static_cast<std::size_t>(r)] *
                      u_eval(t, static_cast<std::size_t>(m - r));
        scale = std::max(scale, std::abs(term));
        rhs += term;
      }
      out.add(IdentityReport::make(tag("edge h=t*u", m),
                                   "trial=" + std::to_string(trial),
                                   (lhs - rhs) / scale, tol));
      // u_m = sum_p T_p h_{m-p}
      double ul = u_eval(t, static_cast<std::size_t>(m));
      double ur = 0;
      scale = std::max(1.0, std::abs(ul));
      for (int p = 0; p <= m; ++p) {
        double term =
            Td[static_cast<std::size_t>(p)] *
            h_eval(std::span(t.prefix).first(static_cast<std::size_t>(m - p)));
        scale = std::max(scale, std::abs(term));
        ur += term;
      }
      out.add(IdentityReport::make(tag("edge u=T*h", m),
                                   "trial=" + std::to_string(trial),
                                   (ul - ur) / scale, tol));
    }
  return out;
}

SuiteResult suite_bch(const RunConfig& cfg) {
  SuiteResult out{"bch"};
  std::mt19937_64 rng(cfg.seed);
  DenseMatrix a = random_gapped_a(rng, 4);
  DenseMatrix b = random_symmetric(rng, 4, 1.0);
  b *= 1.0 / b.frobenius_norm();
  for (int order = 2; order <= cfg.cap("bch"); ++order) {
    std::vector<double> errs;
    for (double eps : cfg.bch_epsilons) {
      DenseMatrix be = b;
      be *= eps;
      DenseMatrix exact = bch_oracle(a, be);
      DenseMatrix approx = series_C(a, be, order).c;
      errs.push_back((approx - exact).frobenius_norm());
    }
    double slope = loglog_slope(cfg.bch_epsilons, errs);
    double target = order + 0.5;
    std::ostringstream in;
    in << "order=" << order << " slope=" << slope;
    out.add(IdentityReport::make("bch-slope", in.str(),
                                 std::max(0.0, target - slope), 0.0));
  }
  return out;
}

SuiteResult suite_perturb(const RunConfig& cfg) {
  SuiteResult out{"perturb"};
  std::mt19937_64 rng(cfg.seed);
  DenseMatrix a = random_gapped_a(rng, 4);
  DenseMatrix b = random_symmetric(rng, 4, 0.5);
  for (std::size_t n = 0; n < 4; ++n) {
    PerturbationResult pr = epsilon_sweep(a, b, n, cfg.perturb_epsilons);
    std::vector<double> errs;
    for (const auto& p : pr.epsilon_sweep) errs.push_back(p.residual);
    double slope = loglog_slope(cfg.perturb_epsilons, errs);
    std::ostringstream in;
    in << "state=" << n << " slope=" << slope;
    out.add(IdentityReport::make("perturb-slope", in.str(),
                                 std::max(0.0, 3.5 - slope), 0.0));
  }
  return out;
}

SuiteResult merge(const std::string& name,
                  std::initializer_list<SuiteResult> parts) {
  SuiteResult out{name};
  for (const auto& p : parts)
    for (const auto& r : p.reports) out.add(r);
  return out;
}

}  // namespace

void SuiteResult::add(IdentityReport r) {
  max_residual = std::max(max_residual, std::abs(r.residual));
  pass = pass && r.pass;
  reports.push_back(std::move(r));
}

std::vector<double> random_regular_tuple(std::mt19937_64& rng, std::size_t n,
                                         double delta) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  while (true) {
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    if (n == 0 || ArgTuple{v}.regular(delta)) return v;
  }
}

double loglog_slope(const std::vector<double>& eps,
                    const std::vector<double>& err) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = eps.size();
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::log(eps[i]);
    double y = std::log(std::max(err[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "coeffs", "52",  "equivalence", "marching", "permcancel",
      "jk",     "x",   "denominator", "hclosed",  "edge",
      "bch",    "perturb", "identities", "all"};
  return names;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "coeffs") return suite_coeffs(cfg);
  if (name == "52") return suite_52(cfg);
  if (name == "equivalence") return suite_equivalence(cfg);
  if (name == "marching") return suite_marching(cfg);
  if (name == "permcancel") return suite_permcancel(cfg);
  if (name == "jk") return suite_jk(cfg);
  if (name == "x") return suite_x(cfg);
  if (name == "denominator") return suite_denominator(cfg);
  if (name == "hclosed") return suite_hclosed(cfg);
  if (name == "edge") return suite_edge(cfg);
  if (name == "bch") return suite_bch(cfg);
  if (name == "perturb") return suite_perturb(cfg);
  if (name == "identities")
    return merge("identities",
                 {suite_52(cfg), suite_jk(cfg), suite_x(cfg),
                  suite_permcancel(cfg), suite_hclosed(cfg), suite_edge(cfg)});
  if (name == "all")
    return merge("all",
                 {suite_coeffs(cfg), suite_hclosed(cfg), suite_edge(cfg),
                  suite_52(cfg), suite_equivalence(cfg), suite_marching(cfg),
                  suite_permcancel(cfg), suite_jk(cfg), suite_x(cfg),
                  suite_denominator(cfg), suite_bch(cfg),
                  suite_perturb(cfg)});
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace bch
