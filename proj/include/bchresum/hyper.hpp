#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace bch {

struct NearSingular : std::domain_error {
  using std::domain_error::domain_error;
};
struct Overflow : std::domain_error {
  using std::domain_error::domain_error;
};

// Guard thresholds; see also MatrixDefaults in matrix.hpp.
constexpr double kSingularEps = 1e-8;   // raw coth refusal
constexpr double kRegularDelta = 1e-6;  // contiguous-sum regularity
constexpr double kArgCap = 350.0;       // sinh overflow cap
constexpr double kG1Switch = 1e-4;      // Taylor fallback for x/sinh(x)

/// An argument tuple (L_1..L_N) with derived prefix sums
/// x_k = L_1 + ... + L_k.
struct ArgTuple {
  std::vector<double> args;
  std::vector<double> prefix;

  explicit ArgTuple(std::vector<double> a);

  std::size_t size() const { return args.size(); }
  double total() const { return prefix.empty() ? 0.0 : prefix.back(); }

  // True when every nonempty contiguous sum |L_i+...+L_j| >= delta.
  bool regular(double delta = kRegularDelta) const;
  void require_regular(double delta = kRegularDelta) const;
};

double coth_x(double x);
double g1(double x);  // x/sinh(x) with the small-x Taylor fallback

// h_r at the given cumulative arguments, built by the edge recursion
// h_m = sum_q t_q u_{m-q} with exact t coefficients.
double h_eval(std::span<const double> cumargs);

// f_N(L_1..L_N) = h_N on the prefix sums.
double f_eval(const ArgTuple& t);
double f_eval(std::span<const double> increments);

// u_r = h_{r-1}(prefix[1..r-1]) * coth(prefix[r]); u_0 = 1.
double u_eval(const ArgTuple& t, std::size_t r);

// [L_1...L_N] = f_N * L_1.
double bracket(const ArgTuple& t);

// W(x,y)^{-1} = G_1(x)G_1(y)/G_1(x-y).
double w2_inv(double x, double y);

}  // namespace bch
