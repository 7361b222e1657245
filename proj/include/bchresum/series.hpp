#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace bch {

using Rational = boost::multiprecision::cpp_rational;

/// Exact Taylor coefficients of a named generating function, indexed from 0.
struct RationalSeries {
  std::string name;
  std::vector<Rational> coeffs;

  std::size_t order() const { return coeffs.size() - 1; }
};

// Coefficients of tanh(z)/z, computed by exact long division of the
// factorial series for sinh(z)/z by the one for cosh(z).
RationalSeries taylor_t(std::size_t order);

// z/tanh(z), the series reciprocal of t.
RationalSeries taylor_T(std::size_t order);

// sinh(z)cosh(z)/z.
RationalSeries taylor_s(std::size_t order);

// (sinh(z)/z)^2 = t(z)s(z), built as the convolution of t and s.
RationalSeries taylor_W(std::size_t order);

// coeffs[N] = sum_{p<=N} a_p b_{N-p}; result truncated to the shorter input.
RationalSeries convolve(const RationalSeries& a, const RationalSeries& b);

RationalSeries series_by_name(const std::string& name, std::size_t order);

// Cached binary64 views of the tables, for the numeric evaluators.
const std::vector<double>& t_doubles(std::size_t order);
const std::vector<double>& T_doubles(std::size_t order);
double s_double(std::size_t n);
double W_double(std::size_t n);

}  // namespace bch
