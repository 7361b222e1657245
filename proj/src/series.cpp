#include "bchresum/series.hpp"

#include <mutex>
#include <stdexcept>

namespace bch {
namespace {

constexpr std::size_t kDefaultTableOrder = 64;

std::vector<Rational> sinh_over_z(std::size_t order) {
  std::vector<Rational> c(order + 1);
  Rational fact = 1;  // (k+1)!
  for (std::size_t k = 0; k <= order; ++k) {
    fact *= int(k + 1);
    if (k % 2 == 0) c[k] = 1 / fact;
  }
  return c;
}

std::vector<Rational> cosh_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  Rational fact = 1;  // k!
  c[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    fact *= int(k);
    if (k % 2 == 0) c[k] = 1 / fact;
  }
  return c;
}

std::vector<Rational> long_divide(const std::vector<Rational>& num,
                                  const std::vector<Rational>& den) {
  std::vector<Rational> q(num.size());
  for (std::size_t k = 0; k < num.size(); ++k) {
    Rational v = num[k];
    for (std::size_t j = 1; j <= k; ++j) v -= den[j] * q[k - j];
    q[k] = v / den[0];
  }
  return q;
}

std::vector<Rational> conv(const std::vector<Rational>& a,
                           const std::vector<Rational>& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::vector<Rational> c(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p <= k; ++p) c[k] += a[p] * b[k - p];
  return c;
}

// Grow-on-demand table, initialised once per extension under a mutex.
struct Table {
  std::mutex mu;
  std::vector<Rational> coeffs;
  std::vector<double> dbl;
};

Table& table_for(char which) {
  static Table t_tab, T_tab, s_tab, W_tab;
  switch (which) {
    case 't': return t_tab;
    case 'T': return T_tab;
    case 's': return s_tab;
    default: return W_tab;
  }
}

void fill(char which, std::size_t order, std::vector<Rational>& out) {
  auto sh = sinh_over_z(order);
  auto ch = cosh_series(order);
  switch (which) {
    case 't': out = long_divide(sh, ch); break;
    case 'T': {
      auto t = long_divide(sh, ch);
      std::vector<Rational> one(order + 1);
      one[0] = 1;
      out = long_divide(one, t);
      break;
    }
    case 's': out = conv(sh, ch); break;
    default: out = conv(long_divide(sh, ch), conv(sh, ch)); break;  // W = t*s
  }
}

const Table& ensure(char which, std::size_t order) {
  Table& tab = table_for(which);
  std::lock_guard<std::mutex> lock(tab.mu);
  if (tab.coeffs.size() <= order) {
    std::size_t want = std::max(order, kDefaultTableOrder);
    fill(which, want, tab.coeffs);
    tab.dbl.resize(tab.coeffs.size());
    for (std::size_t k = 0; k < tab.coeffs.size(); ++k)
      tab.dbl[k] = tab.coeffs[k].convert_to<double>();
  }
  return tab;
}

RationalSeries take(char which, const std::string& name, std::size_t order) {
  const Table& tab = ensure(which, order);
  RationalSeries s;
  s.name = name;
  s.coeffs.assign(tab.coeffs.begin(), tab.coeffs.begin() + order + 1);
  return s;
}

}  // namespace

RationalSeries taylor_t(std::size_t order) { return take('t', "t", order); }
RationalSeries taylor_T(std::size_t order) { return take('T', "T", order); }
RationalSeries taylor_s(std::size_t order) { return take('s', "s", order); }
RationalSeries taylor_W(std::size_t order) { return take('W', "W", order); }

RationalSeries convolve(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries c;
  c.name = a.name + "*" + b.name;
  c.coeffs = conv(a.coeffs, b.coeffs);
  return c;
}

RationalSeries series_by_name(const std::string& name, std::size_t order) {
  if (name == "t") return taylor_t(order);
  if (name == "T") return taylor_T(order);
  if (name == "s") return taylor_s(order);
  if (name == "W") return taylor_W(order);
  throw std::invalid_argument("unknown series: " + name);
}

const std::vector<double>& t_doubles(std::size_t order) {
  return ensure('t', order).dbl;
}

const std::vector<double>& T_doubles(std::size_t order) {
  return ensure('T', order).dbl;
}

double s_double(std::size_t n) { return ensure('s', n).dbl[n]; }
double W_double(std::size_t n) { return ensure('W', n).dbl[n]; }

}  // namespace bch
