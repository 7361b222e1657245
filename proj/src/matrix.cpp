#include "bchresum/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bchresum/gseries.hpp"

namespace bch {

DenseMatrix::DenseMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n)
    throw std::invalid_argument("DenseMatrix: entry count != n*n");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<double>& d) {
  DenseMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
  return t;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double DenseMatrix::max_abs() const {
  double s = 0;
  for (double v : a_) s = std::max(s, std::abs(v));
  return s;
}

bool DenseMatrix::is_symmetric(double rel) const {
  double scale = std::max(frobenius_norm(), 1.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (std::abs(at(i, j) - at(j, i)) > rel * scale) return false;
  return true;
}

DenseMatrix DenseMatrix::symmetrized() const {
  DenseMatrix s(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      s.at(i, j) = 0.5 * (at(i, j) + at(j, i));
  return s;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
  std::size_t n = x.dim();
  DenseMatrix z(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      double xik = x.at(i, k);
      if (xik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

SpectralData sym_eig(const DenseMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("sym_eig: not symmetric");
  std::size_t n = m.dim();
  DenseMatrix a = m.symmetrized();
  DenseMatrix q = DenseMatrix::identity(n);
  double target = 1e-14 * std::max(m.frobenius_norm(), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2 * a.at(i, j) * a.at(i, j);
    if (std::sqrt(off) <= target) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t r = p + 1; r < n; ++r) {
        double apr = a.at(p, r);
        if (apr == 0.0) continue;
        double theta = (a.at(r, r) - a.at(p, p)) / (2 * apr);
        double t = std::copysign(1.0, theta) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a.at(k, p), akr = a.at(k, r);
          a.at(k, p) = c * akp - s * akr;
          a.at(k, r) = s * akp + c * akr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a.at(p, k), ark = a.at(r, k);
          a.at(p, k) = c * apk - s * ark;
          a.at(r, k) = s * apk + c * ark;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double qkp = q.at(k, p), qkr = q.at(k, r);
          q.at(k, p) = c * qkp - s * qkr;
          q.at(k, r) = s * qkp + c * qkr;
        }
      }
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t i, std::size_t j) { return a.at(i, i) < a.at(j, j); });
  SpectralData out;
  out.eigenvalues.resize(n);
  out.eigenvectors = DenseMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a.at(idx[j], idx[j]);
    for (std::size_t i = 0; i < n; ++i)
      out.eigenvectors.at(i, j) = q.at(i, idx[j]);
  }
  return out;
}

DenseMatrix expm(const DenseMatrix& m) {
  std::size_t n = m.dim();
  double norm = m.max_abs() * static_cast<double>(n);
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5 && squarings < 60) {
    scale *= 0.5;
    ++squarings;
  }
  DenseMatrix t = m;
  t *= scale;
  // Horner on the degree-16 factorial series.
  DenseMatrix acc = DenseMatrix::identity(n);
  for (int k = 16; k >= 1; --k) {
    acc *= 1.0 / k;
    acc = t * acc;
    acc += DenseMatrix::identity(n);
  }
  for (int k = 0; k < squarings; ++k) acc = acc * acc;
  return acc;
}

DenseMatrix logm_spd(const DenseMatrix& m) {
  SpectralData sd = sym_eig(m);
  std::size_t n = m.dim();
  DenseMatrix lam(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sd.eigenvalues[i] <= 1e-13)
      throw NonSPD("logm_spd: eigenvalue not positive");
    lam.at(i, i) = std::log(sd.eigenvalues[i]);
  }
  return sd.eigenvectors * lam * sd.eigenvectors.transpose();
}

DenseMatrix bch_oracle(const DenseMatrix& a, const DenseMatrix& b) {
  if (!a.is_symmetric() || !b.is_symmetric())
    throw std::invalid_argument("bch_oracle: symmetric inputs required");
  DenseMatrix b2 = b;
  b2 *= 2.0;
  DenseMatrix prod = expm(a) * expm(b2) * expm(a);
  // Product is M M^T with M = e^A e^B, hence SPD; symmetrize roundoff.
  DenseMatrix c = logm_spd(prod.symmetrized());
  c *= 0.5;
  return c;
}

SeriesCResult series_C(const DenseMatrix& a, const DenseMatrix& b, int order) {
  if (order < 0 || order > 5)
    throw std::invalid_argument("series_C: order in [0,5]");
  std::size_t n = a.dim();
  if (n < 2 || n > 16) throw std::invalid_argument("series_C: 2 <= n <= 16");
  SpectralData sd = sym_eig(a);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (sd.eigenvalues[i + 1] - sd.eigenvalues[i] < kGapDelta)
      throw DegenerateSpectrum("series_C: eigenvalue gap below threshold");
  const auto& ev = sd.eigenvalues;
  DenseMatrix bt = sd.eigenvectors.transpose() * b * sd.eigenvectors;

  SeriesCResult res;
  DenseMatrix c = DenseMatrix::diagonal(ev);
  for (int k = 1; k <= order; ++k) {
    // chain = (n, n_1, ..., n_{k-1}, n'); args are eigenvalue gaps.
    std::vector<std::size_t> mid(static_cast<std::size_t>(k) - 1, 0);
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = 0; col < n; ++col) {
        double term = 0;
        std::fill(mid.begin(), mid.end(), 0);
        while (true) {
          double weight = bt.at(row, mid.empty() ? col : mid[0]);
          for (std::size_t i = 0; i + 1 < mid.size(); ++i)
            weight *= bt.at(mid[i], mid[i + 1]);
          if (!mid.empty()) weight *= bt.at(mid.back(), col);
          if (weight != 0.0) {
            std::vector<double> args(static_cast<std::size_t>(k));
            double prev = ev[row];
            for (std::size_t i = 0; i < mid.size(); ++i) {
              args[i] = prev - ev[mid[i]];
              prev = ev[mid[i]];
            }
            args.back() = prev - ev[col];
            ArgTuple t{args};
            if (t.regular()) {
              term += g_perm(t) * weight;
            } else {
              term += g_perm_regularized(args) * weight;
              ++res.regularized_terms;
            }
          }
          std::size_t i = 0;
          for (; i < mid.size(); ++i) {
            if (++mid[i] < n) break;
            mid[i] = 0;
          }
          if (i == mid.size()) break;
        }
        c.at(row, col) += term;
      }
  }
  res.c = sd.eigenvectors * c * sd.eigenvectors.transpose();
  return res;
}

}  // namespace bch
