#include "bchresum/perturb.hpp"

#include <cmath>

#include "bchresum/hyper.hpp"

namespace bch {
namespace {

double h2(double x, double y) { return coth_x(x) * coth_x(y) - 1.0 / 3.0; }

void check_gaps(const std::vector<double>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (std::abs(a[i] - a[j]) < kGapDelta)
        throw DegenerateSpectrum("perturbation: eigenvalue gap below threshold");
}

}  // namespace

PerturbationResult corrections(const std::vector<double>& a,
                               const DenseMatrix& b, std::size_t n) {
  check_gaps(a);
  std::size_t dim = a.size();
  PerturbationResult out;
  out.n = n;
  out.corrections[0] = a[n];
  out.corrections[1] = b.at(n, n);
  double c2 = 0;
  for (std::size_t m = 0; m < dim; ++m) {
    if (m == n) continue;
    c2 += coth_x(a[n] - a[m]) * b.at(n, m) * b.at(m, n);
  }
  out.corrections[2] = c2;
  double c3 = 0;
  for (std::size_t m1 = 0; m1 < dim; ++m1) {
    if (m1 == n) continue;
    for (std::size_t m2 = 0; m2 < dim; ++m2) {
      if (m2 == n) continue;
      c3 += h2(a[n] - a[m1], a[n] - a[m2]) * b.at(n, m1) * b.at(m1, m2) *
            b.at(m2, n);
    }
    c3 -= h2(a[n] - a[m1], a[n] - a[m1]) * b.at(n, m1) * b.at(m1, n) *
          b.at(n, n);
  }
  out.corrections[3] = c3;
  return out;
}

PerturbationResult epsilon_sweep(const DenseMatrix& a, const DenseMatrix& b,
                                 std::size_t n,
                                 const std::vector<double>& epsilons) {
  SpectralData sa = sym_eig(a);
  check_gaps(sa.eigenvalues);
  DenseMatrix bt = sa.eigenvectors.transpose() * b * sa.eigenvectors;
  PerturbationResult out = corrections(sa.eigenvalues, bt, n);
  for (double eps : epsilons) {
    DenseMatrix scaled = b;
    scaled *= eps;
    DenseMatrix c = bch_oracle(a, scaled);
    SpectralData sc = sym_eig(c);
    // Match by eigenvector overlap against state n of A.
    std::size_t best = 0;
    double best_ov = -1;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      double ov = 0;
      for (std::size_t i = 0; i < a.dim(); ++i)
        ov += sa.eigenvectors.at(i, n) * sc.eigenvectors.at(i, j);
      if (std::abs(ov) > best_ov) {
        best_ov = std::abs(ov);
        best = j;
      }
    }
    if (eps != 0.0 && best_ov < 0.9)
      throw AmbiguousMatching("epsilon_sweep: eigenvector overlap below 0.9");
    SweepPoint p;
    p.epsilon = eps;
    p.exact = sc.eigenvalues[best];
    p.partial_sum = out.corrections[0] + eps * out.corrections[1] +
                    eps * eps * out.corrections[2] +
                    eps * eps * eps * out.corrections[3];
    p.residual = std::abs(p.exact - p.partial_sum);
    out.epsilon_sweep.push_back(p);
  }
  return out;
}

}  // namespace bch
