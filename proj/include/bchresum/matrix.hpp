#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bch {

struct NonSPD : std::domain_error {
  using std::domain_error::domain_error;
};
struct DegenerateSpectrum : std::domain_error {
  using std::domain_error::domain_error;
};

constexpr double kGapDelta = 1e-4;  // minimum distinct-eigenvalue gap

/// A small dense square real matrix, row-major, 2 <= n <= 16 at the
/// operations that care.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
  DenseMatrix(std::size_t n, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(const std::vector<double>& d);

  std::size_t dim() const { return n_; }
  double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  DenseMatrix transpose() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_symmetric(double rel = 1e-13) const;
  DenseMatrix symmetrized() const;  // (M + M^T)/2

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix& operator*=(double s);
  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);
  friend DenseMatrix operator+(DenseMatrix x, const DenseMatrix& y) { return x += y; }
  friend DenseMatrix operator-(DenseMatrix x, const DenseMatrix& y) { return x -= y; }
  friend DenseMatrix operator*(DenseMatrix x, double s) { return x *= s; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

struct SpectralData {
  std::vector<double> eigenvalues;  // ascending
  DenseMatrix eigenvectors;         // orthogonal, columns match order
};

// Cyclic Jacobi rotations to off-diagonal norm <= 1e-14 * ||M||.
SpectralData sym_eig(const DenseMatrix& m);

// Scaling and squaring with a degree-16 factorial series at scaled
// norm <= 0.5.
DenseMatrix expm(const DenseMatrix& m);

// Q log(Lambda) Q^T; throws NonSPD when an eigenvalue <= 1e-13.
DenseMatrix logm_spd(const DenseMatrix& m);

// C = (1/2) log(e^A e^{2B} e^A) for symmetric A, B.
DenseMatrix bch_oracle(const DenseMatrix& a, const DenseMatrix& b);

struct SeriesCResult {
  DenseMatrix c;
  long regularized_terms = 0;  // chains evaluated through the eps limit
};

// Truncated power series for C assembled element-wise in A's eigenbasis:
// order-k term sums G_k over index chains weighted by B matrix elements.
SeriesCResult series_C(const DenseMatrix& a, const DenseMatrix& b, int order);

}  // namespace bch
