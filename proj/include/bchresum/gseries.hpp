#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bchresum/hyper.hpp"

namespace bch {

/// Outcome of one identity check.
struct IdentityReport {
  std::string identity;
  std::string inputs;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;

  static IdentityReport make(std::string identity, std::string inputs,
                             double residual, double tolerance);
  std::string to_json() const;
};

// G_N by the permutation representation: the 2^{N-1}-term P_N bracket
// sum over h_{N-1}, divided by sinh(L_1+...+L_N).
double g_perm(const ArgTuple& t);

// G_N by the original representation, combining E_{N-1} with its
// reversed copy.
double g_original(const ArgTuple& t);

// G_N from the N+1 overcomplete parameters x_0..x_N, with
// L_k = x_k - x_{k-1}; invariant under a common shift of all x's.
double g_overcomplete(std::span<const double> xs);

// G_N at a tuple near (or on) the singular locus of its individual
// bracket terms: symmetric +-eps offsets along (1,...,1) with one
// Richardson step.  G_N itself is regular there; this is a documented
// numeric limit, not a formula from the representation.
double g_perm_regularized(std::span<const double> args, double eps = 1e-4);

// E_N of the original representation; first_var is L_1 (only used
// separately from seq for the N = 0 linear split).
double e_original(std::span<const double> seq, double first_var);

// H_N = P_N h_N L_1 as a flat bracket sum (full arity N).
double h_perm(std::span<const double> args);

// |s_N - (f_N + sum_r (-1)^r f_{r-1} f_1 f_{N-r})|.
IdentityReport check_identity_52(const ArgTuple& t);

// Sum of G_N over the order-preserving interleavings of alphas into
// betas; vanishes identically.
IdentityReport marching_residual(std::span<const double> alphas,
                                 std::span<const double> betas);

// |K_N - J_N - W_N (L_1+...+L_N)| with J_N, K_N evaluated as the
// finite partition sums over window slices.
IdentityReport jk_relation(const ArgTuple& t);

// X_N = E_N - H_N, plus the reversal report over an (N+1)-tuple:
// |X_N(L_1..L_N) - (-1)^{N+1} X_N(L_{N+1}..L_2)|.
double x_extra(const ArgTuple& t);
IdentityReport x_reversal(std::span<const double> tuple_np1);

// Denominator analogue: partitioned double sum D_N against the signed
// P_N sum of rational brackets.
IdentityReport denominator_check(std::span<const double> xs);

}  // namespace bch
