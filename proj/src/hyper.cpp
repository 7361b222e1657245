#include "bchresum/hyper.hpp"

#include <cmath>
#include <utility>

#include "bchresum/series.hpp"

namespace bch {

ArgTuple::ArgTuple(std::vector<double> a) : args(std::move(a)) {
  prefix.resize(args.size());
  double acc = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    acc += args[i];
    prefix[i] = acc;
  }
}

bool ArgTuple::regular(double delta) const {
  for (std::size_t i = 0; i < args.size(); ++i) {
    double acc = 0;
    for (std::size_t j = i; j < args.size(); ++j) {
      acc += args[j];
      if (std::abs(acc) < delta) return false;
    }
  }
  return true;
}

void ArgTuple::require_regular(double delta) const {
  if (!regular(delta))
    throw NearSingular("near-singular argument tuple: a contiguous sum is below the regularity threshold");
}

double coth_x(double x) {
  if (std::abs(x) < kSingularEps) throw NearSingular("coth near 0");
  if (std::abs(x) > kArgCap) throw Overflow("coth argument magnitude above cap");
  return 1.0 / std::tanh(x);
}

double g1(double x) {
  if (std::abs(x) > kArgCap) throw Overflow("g1 argument magnitude above cap");
  if (std::abs(x) < kG1Switch) {
    double x2 = x * x;
    return 1.0 - x2 / 6.0 + 7.0 * x2 * x2 / 360.0;
  }
  return x / std::sinh(x);
}

double h_eval(std::span<const double> cumargs) {
  std::size_t m = cumargs.size();
  const auto& t = t_doubles(m);
  // h[k] = sum_{q even < k} t_q h[k-1-q] coth(c_{k-q}) + t_k
  std::vector<double> h(m + 1, 1.0);
  std::vector<double> cth(m);
  for (std::size_t i = 0; i < m; ++i) cth[i] = coth_x(cumargs[i]);
  for (std::size_t k = 1; k <= m; ++k) {
    double v = t[k];
    for (std::size_t q = 0; q < k; q += 2) v += t[q] * h[k - 1 - q] * cth[k - q - 1];
    h[k] = v;
  }
  return h[m];
}

double f_eval(const ArgTuple& t) {
  t.require_regular();
  return h_eval(t.prefix);
}

double f_eval(std::span<const double> increments) {
  std::vector<double> cum(increments.size());
  double acc = 0;
  for (std::size_t i = 0; i < increments.size(); ++i) {
    acc += increments[i];
    cum[i] = acc;
  }
  return h_eval(cum);
}

double u_eval(const ArgTuple& t, std::size_t r) {
  if (r == 0) return 1.0;
  if (r > t.size()) throw std::invalid_argument("u_eval: r exceeds arity");
  t.require_regular();
  return h_eval(std::span(t.prefix).first(r - 1)) * coth_x(t.prefix[r - 1]);
}

double bracket(const ArgTuple& t) {
  if (t.size() == 0) throw std::invalid_argument("bracket: arity >= 1");
  t.require_regular();
  return h_eval(t.prefix) * t.args[0];
}

double w2_inv(double x, double y) { return g1(x) * g1(y) / g1(x - y); }

}  // namespace bch
