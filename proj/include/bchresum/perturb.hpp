#pragma once

#include <vector>

#include "bchresum/matrix.hpp"

namespace bch {

struct AmbiguousMatching : std::domain_error {
  using std::domain_error::domain_error;
};

struct SweepPoint {
  double epsilon = 0;
  double exact = 0;        // oracle eigenvalue matched to the state
  double partial_sum = 0;  // a_n + sum_{k<=3} eps^k c^{(k)}
  double residual = 0;
};

/// Eigenvalue corrections of C for one state, order 0..3, plus an
/// optional epsilon sweep against the matrix-log oracle.
struct PerturbationResult {
  std::size_t n = 0;
  double corrections[4] = {0, 0, 0, 0};
  std::vector<SweepPoint> epsilon_sweep;
};

// Order-3 corrections from the eigenvalues of A and B expressed in A's
// eigenbasis.  c^{(2)} sums h_1 over single hops, c^{(3)} the two h_2
// sums; every intermediate index is restricted to differ from n.
PerturbationResult corrections(const std::vector<double>& a,
                               const DenseMatrix& b_eigbasis, std::size_t n);

// For each epsilon, matches the exact eigenvalue of bch_oracle(A, eps*B)
// to state n by eigenvector overlap (threshold 0.9) and records the
// order-3 partial-sum residual.
PerturbationResult epsilon_sweep(const DenseMatrix& a, const DenseMatrix& b,
                                 std::size_t n,
                                 const std::vector<double>& epsilons);

}  // namespace bch
