#include "bchresum/gseries.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "bchresum/perm.hpp"
#include "bchresum/series.hpp"

namespace bch {
namespace {

const PermSum& cached_P(int n) {
  static std::mutex mu;
  static std::map<int, PermSum> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, expand_P(n)).first;
  return it->second;
}

std::string fmt_args(std::span<const double> a) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  return os.str();
}

double g_perm_raw(std::span<const double> args) {
  int n = static_cast<int>(args.size());
  double num = 0;
  for (const auto& term : cached_P(n)) {
    auto w = term.apply_window(args, n - 1);
    double first = (n > 1) ? w[0] : args[0];
    num += term.sign * f_eval(std::span<const double>(w)) * first;
  }
  double total = 0;
  for (double v : args) total += v;
  return num / std::sinh(total);
}

// Sum of |term| of the same expansion, as a cancellation scale.
double g_perm_gross(std::span<const double> args) {
  int n = static_cast<int>(args.size());
  double num = 0;
  for (const auto& term : cached_P(n)) {
    auto w = term.apply_window(args, n - 1);
    double first = (n > 1) ? w[0] : args[0];
    num += std::abs(f_eval(std::span<const double>(w)) * first);
  }
  double total = 0;
  for (double v : args) total += v;
  return num / std::abs(std::sinh(total));
}

}  // namespace

IdentityReport IdentityReport::make(std::string identity, std::string inputs,
                                    double residual, double tolerance) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.inputs = std::move(inputs);
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = std::abs(residual) <= tolerance;
  return r;
}

std::string IdentityReport::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"identity\":\"" << identity << "\",\"inputs\":\"" << inputs
     << "\",\"residual\":" << residual << ",\"tolerance\":" << tolerance
     << ",\"pass\":" << (pass ? "true" : "false") << "}";
  return os.str();
}

double g_perm(const ArgTuple& t) {
  if (t.size() == 0) throw std::invalid_argument("g_perm: N >= 1");
  t.require_regular();
  return g_perm_raw(t.args);
}

double e_original(std::span<const double> seq, double first_var) {
  std::size_t n = seq.size();
  double sum = 0;
  for (double v : seq) sum += v;
  double out = s_double(n) * 0.5 * (first_var + sum);
  double pr = 0;
  std::vector<double> rev_inner;  // (L_r, L_{r-1}, ..., L_2)
  for (std::size_t r = 1; r <= n; ++r) {
    pr += seq[r - 1];
    if (r >= 2) rev_inner.insert(rev_inner.begin(), seq[r - 1]);
    double sgn = (r % 2 == 1) ? 1.0 : -1.0;
    out += sgn * pr * f_eval(std::span<const double>(rev_inner)) * coth_x(pr) *
           f_eval(seq.subspan(r));
  }
  return out;
}

double g_original(const ArgTuple& t) {
  std::size_t m = t.size();
  if (m == 0) throw std::invalid_argument("g_original: N >= 1");
  t.require_regular();
  std::span<const double> a(t.args);
  double e_fwd = e_original(a.first(m - 1), t.args[0]);
  std::vector<double> rev(t.args.rbegin(), t.args.rend() - 1);  // L_M..L_2
  double e_rev = e_original(rev, t.args[m - 1]);
  double sgn = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^M
  return (e_fwd - sgn * e_rev) / std::sinh(t.total());
}

double g_overcomplete(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("g_overcomplete: need x_0..x_N");
  std::size_t m = xs.size() - 1;  // order of G
  {
    std::vector<double> diffs(m);
    for (std::size_t i = 0; i < m; ++i) diffs[i] = xs[i + 1] - xs[i];
    ArgTuple(diffs).require_regular();
  }
  double x0 = xs[0], xm = xs[m];
  auto h_about = [&](std::size_t lo, std::size_t hi, double c) {
    std::vector<double> v;
    v.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) v.push_back(xs[i] - c);
    return h_eval(v);
  };
  double out = xm / (xm - x0) * g1(x0 - xm) * h_about(1, m, xm);
  out -= x0 / (xm - x0) * h_about(1, m, x0) * g1(xm - x0);
  for (std::size_t r = 1; r < m; ++r) {
    double xr = xs[r];
    // x_r^2 * (1/x_r) written as a single factor; regular at x_r = 0.
    out += xr / ((xr - x0) * (xm - xr)) * g1(x0 - xr) * h_about(1, r, xr) *
           h_about(r + 1, m, xr) * g1(xm - xr);
  }
  return out;
}

double g_perm_regularized(std::span<const double> args, double eps) {
  auto avg = [&](double e) {
    std::vector<double> up(args.begin(), args.end());
    std::vector<double> dn(args.begin(), args.end());
    for (auto& v : up) v += e;
    for (auto& v : dn) v -= e;
    return 0.5 * (g_perm_raw(up) + g_perm_raw(dn));
  };
  ArgTuple t{std::vector<double>(args.begin(), args.end())};
  if (t.regular()) return g_perm_raw(args);
  double f1 = avg(eps), f2 = avg(eps / 2);
  return (4.0 * f2 - f1) / 3.0;  // Richardson on the even error term
}

double h_perm(std::span<const double> args) {
  int n = static_cast<int>(args.size());
  double out = 0;
  for (const auto& term : cached_P(n)) {
    auto w = term.apply_window(args, n);
    out += term.sign * f_eval(std::span<const double>(w)) * w[0];
  }
  return out;
}

IdentityReport check_identity_52(const ArgTuple& t) {
  t.require_regular();
  std::size_t n = t.size();
  std::span<const double> a(t.args);
  double rhs = f_eval(a);
  double scale = std::max(1.0, std::abs(rhs));
  double pr = 0;
  std::vector<double> rev_inner;
  for (std::size_t r = 1; r <= n; ++r) {
    pr += t.args[r - 1];
    if (r >= 2) rev_inner.insert(rev_inner.begin(), t.args[r - 1]);
    double sgn = (r % 2 == 0) ? 1.0 : -1.0;
    double term = sgn * f_eval(std::span<const double>(rev_inner)) *
                  coth_x(pr) * f_eval(a.subspan(r));
    scale = std::max(scale, std::abs(term));
    rhs += term;
  }
  return IdentityReport::make("5.2", fmt_args(a), (s_double(n) - rhs) / scale,
                              1e-11);
}

IdentityReport marching_residual(std::span<const double> alphas,
                                 std::span<const double> betas) {
  int m = static_cast<int>(alphas.size());
  int n = m + static_cast<int>(betas.size());
  if (m < 1 || m > n - 1)
    throw std::invalid_argument("marching_residual: 1 <= m <= N-1");
  std::vector<double> base(alphas.begin(), alphas.end());
  base.insert(base.end(), betas.begin(), betas.end());
  double sum = 0, scale = 1.0;
  for (const auto& term : marching(n, m)) {
    auto w = term.apply_window(base, n);
    ArgTuple t{std::move(w)};
    t.require_regular();
    sum += g_perm_raw(t.args);
    scale = std::max(scale, g_perm_gross(t.args));
  }
  std::string in = fmt_args(alphas) + "|" + fmt_args(betas);
  return IdentityReport::make("marching", in, sum / scale, 1e-10);
}

IdentityReport jk_relation(const ArgTuple& t) {
  t.require_regular();
  std::size_t n = t.size();
  std::span<const double> a(t.args);
  double j = 0, k = 0, scale = 1.0;
  for (std::size_t m = 0; m <= n; ++m) {
    // f_m with reversed window L_m..L_1, f_{N-m} on the tail window.
    std::vector<double> rev(m);
    for (std::size_t i = 0; i < m; ++i) rev[i] = a[m - 1 - i];
    double fm = f_eval(std::span<const double>(rev));
    double fn = f_eval(a.subspan(m));
    double head = 0, tail = 0;
    for (std::size_t i = 0; i < m; ++i) head += a[i];
    for (std::size_t i = m; i < n; ++i) tail += a[i];
    double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    j -= sgn * head * fm * fn;
    k += sgn * fm * tail * fn;
    scale = std::max({scale, std::abs(head * fm * fn),
                      std::abs(fm * tail * fn)});
  }
  double res = k - j - W_double(n) * t.total();
  return IdentityReport::make("jk", fmt_args(a), res / scale, 1e-11);
}

double x_extra(const ArgTuple& t) {
  if (t.size() == 0) throw std::invalid_argument("x_extra: N >= 1");
  t.require_regular();
  return e_original(t.args, t.args[0]) - h_perm(t.args);
}

IdentityReport x_reversal(std::span<const double> tuple_np1) {
  std::size_t n = tuple_np1.size() - 1;
  std::vector<double> fwd(tuple_np1.begin(), tuple_np1.begin() + n);
  std::vector<double> rev(tuple_np1.rbegin(), tuple_np1.rend() - 1);
  ArgTuple tf{fwd}, tr{rev};
  double x1 = x_extra(tf);
  double x2 = x_extra(tr);
  double sgn = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{N+1}
  // X is the difference of two internally cancelling expansions; scale
  // the residual by the largest un-cancelled term magnitude.
  auto gross = [](const ArgTuple& t) {
    std::size_t m = t.size();
    double out = std::abs(s_double(m)) * std::abs(t.args[0] + t.total()) * 0.5;
    double pr = 0;
    std::vector<double> rev_inner;
    std::span<const double> a(t.args);
    for (std::size_t r = 1; r <= m; ++r) {
      pr += t.args[r - 1];
      if (r >= 2) rev_inner.insert(rev_inner.begin(), t.args[r - 1]);
      out = std::max(out,
                     std::abs(pr * f_eval(std::span<const double>(rev_inner)) *
                              coth_x(pr) * f_eval(a.subspan(r))));
    }
    int nn = static_cast<int>(m);
    for (const auto& term : cached_P(nn)) {
      auto w = term.apply_window(t.args, nn);
      out = std::max(out,
                     std::abs(f_eval(std::span<const double>(w)) * w[0]));
    }
    return out;
  };
  double scale = std::max({1.0, gross(tf), gross(tr)});
  return IdentityReport::make("x-reversal", fmt_args(tuple_np1),
                              (x1 - sgn * x2) / scale, 1e-11);
}

IdentityReport denominator_check(std::span<const double> xs) {
  std::size_t n = xs.size();
  ArgTuple{std::vector<double>(xs.begin(), xs.end())}.require_regular();
  double lhs = 0, scale = 1.0;
  for (std::size_t r = 1; r <= n; ++r) {
    double dr = 0;
    for (std::size_t i = r; i <= n; ++i) {
      double head = 1, acc = 0;
      for (std::size_t k = i; k >= 1; --k) {
        acc += xs[k - 1];
        head /= acc;
      }
      double tail = 1;
      acc = 0;
      for (std::size_t k = i + 1; k <= n; ++k) {
        acc += xs[k - 1];
        tail /= acc;
      }
      double sgn = ((i - r) % 2 == 0) ? 1.0 : -1.0;
      dr += sgn * head * tail;
      scale = std::max(scale, std::abs(xs[r - 1] * head * tail));
    }
    lhs += ((r % 2 == 1) ? 1.0 : -1.0) * xs[r - 1] * dr;
  }
  double rhs = 0;
  for (const auto& term : cached_P(static_cast<int>(n))) {
    auto w = term.apply_window(xs, static_cast<int>(n));
    double br = w[0], acc = 0;
    for (double v : w) {
      acc += v;
      br /= acc;
    }
    rhs += term.sign * br;
    scale = std::max(scale, std::abs(br));
  }
  return IdentityReport::make("denominator", fmt_args(xs), (lhs - rhs) / scale,
                              1e-11);
}

}  // namespace bch
