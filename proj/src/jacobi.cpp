#include <algorithm>
#include <cmath>

#include "treelap/matrix.hpp"

namespace treelap {

namespace {

// One cyclic sweep of Jacobi rotations over the strict upper triangle.
// Returns the off-diagonal Frobenius norm squared after the sweep.
double jacobi_sweep(Matrix<double>& a, Matrix<double>* v) {
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      double apq = a(p, q);
      if (apq == 0.0) continue;
      double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
      double t = (theta >= 0.0 ? 1.0 : -1.0) /
                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      double c = 1.0 / std::sqrt(t * t + 1.0);
      double s = t * c;
      for (std::size_t k = 0; k < n; ++k) {
        double akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
      }
      for (std::size_t k = 0; k < n; ++k) {
        double apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
      }
      if (v)
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = (*v)(k, p), vkq = (*v)(k, q);
          (*v)(k, p) = c * vkp - s * vkq;
          (*v)(k, q) = s * vkp + c * vkq;
        }
    }
  double off = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
  return off;
}

void jacobi_run(Matrix<double> a, std::vector<double>& values, Matrix<double>* vectors) {
  const std::size_t n = a.rows();
  // work on the symmetrized copy so tiny asymmetries cannot bias rotations
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double m = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = a(j, i) = m;
    }
  if (vectors) *vectors = Matrix<double>::identity(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  const double stop = (scale > 0 ? scale * scale : 1.0) * 1e-30 * double(n * n);
  for (int sweep = 0; sweep < 64; ++sweep)
    if (jacobi_sweep(a, vectors) <= stop) break;

  values.resize(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  if (vectors) {
    // sort values ascending, permuting eigenvector columns to match
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
    std::vector<double> sorted(n);
    Matrix<double> vs(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      sorted[i] = values[idx[i]];
      for (std::size_t k = 0; k < n; ++k) vs(k, i) = (*vectors)(k, idx[i]);
    }
    values = std::move(sorted);
    *vectors = std::move(vs);
  } else {
    std::sort(values.begin(), values.end());
  }
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const Matrix<double>& m) {
  require(m.is_square(), Errc::not_square, "eigenvalues of non-square matrix");
  std::vector<double> values;
  jacobi_run(m, values, nullptr);
  return values;
}

void jacobi_eigen(const Matrix<double>& m, std::vector<double>& values,
                  Matrix<double>& vectors) {
  require(m.is_square(), Errc::not_square, "eigenvalues of non-square matrix");
  jacobi_run(m, values, &vectors);
}

}  // namespace treelap
