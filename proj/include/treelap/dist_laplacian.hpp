#pragma once

#include <string>
#include <vector>

#include "treelap/matrix.hpp"
#include "treelap/tree.hpp"

namespace treelap {

/// Construction-time invariant verification. `automatic` turns the
/// Moore-Penrose / PSD checks on for n <= 32 and off above.
struct BundleOptions {
  enum class Verify { automatic, on, off };
  Verify verify = Verify::automatic;

  bool verify_for(std::size_t n) const {
    switch (verify) {
      case Verify::on: return true;
      case Verify::off: return false;
      default: return n <= 32;
    }
  }
};

/// The cast of characters built from one distance matrix: D, the row sums
/// eta, Delta = Diag(eta), the distance Laplacian S = Delta - D, the common
/// cofactor gamma, S* = S + J и S† = (S+J)^{-1} - J/n^2.
template <typename T>
struct DistLapBundle {
  Matrix<T> D;
  std::vector<T> eta;
  Matrix<T> Delta;
  Matrix<T> S;
  T gamma{0};
  Matrix<T> Sstar;
  Matrix<T> Sdag;

  std::size_t n() const { return D.rows(); }
};

template <typename T>
struct ClassicalLapBundle {
  Matrix<T> L;
  Matrix<T> Ldag;
};

/// Every off-diagonal entry <= 0 (exactly, or within the float band scaled
/// by the matrix magnitude).
template <typename T>
bool is_z_matrix(const Matrix<T>& m) {
  require(m.is_square(), Errc::not_square, "Z test needs a square matrix");
  T scale = m.max_abs();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !Backend<T>::nonpositive(m(i, j), scale)) return false;
  return true;
}

/// For symmetric matrices the M-matrix condition "Z and all eigenvalues have
/// non-negative real part" reduces to Z + PSD.
template <typename T>
bool is_m_matrix_symmetric(const Matrix<T>& m) {
  require(is_symmetric(m), Errc::not_symmetric, "symmetric M test needs a symmetric matrix");
  return is_z_matrix(m) && is_psd(m);
}

/// S† = (S+J)^{-1} - J/n^2 for a symmetric S with zero row sums and
/// rank n-1. Throws Errc::singular_sstar if the preconditions fail.
template <typename T>
Matrix<T> pinv_centered(const Matrix<T>& s, const BundleOptions& opts = {}) {
  require(s.is_square(), Errc::not_square, "pinv_centered needs a square matrix");
  require(!s.empty(), Errc::not_square, "pinv_centered needs n >= 1");
  require(is_symmetric(s), Errc::not_symmetric, "pinv_centered needs a symmetric matrix");
  const std::size_t n = s.rows();
  T scale = s.max_abs();
  for (std::size_t i = 0; i < n; ++i) {
    T row(0);
    for (std::size_t j = 0; j < n; ++j) row += s(i, j);
    require(Backend<T>::is_zero(row, scale), Errc::singular_sstar,
            "pinv_centered needs zero row sums; row " + std::to_string(i + 1) +
                " sums to " + Backend<T>::str(row));
  }
  Matrix<T> sstar = s + Matrix<T>::ones(n, n);
  Matrix<T> inv;
  try {
    inv = inverse(sstar);
  } catch (const Error& e) {
    if (e.code() == Errc::singular)
      fail(Errc::singular_sstar, "S + J is singular: S does not have rank n-1");
    throw;
  }
  T nn = T(static_cast<long>(n)) * T(static_cast<long>(n));
  Matrix<T> sdag = inv - Matrix<T>::ones(n, n) * (T(1) / nn);

  if (opts.verify_for(n)) {
    const char* msg = "computed pinv fails a Moore-Penrose identity";
    Matrix<T> ssd = s * sdag;
    Matrix<T> sds = sdag * s;
    auto near = [&](const Matrix<T>& a, const Matrix<T>& b) {
      T sc = a.max_abs();
      if (sc < b.max_abs()) sc = b.max_abs();
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
          if (!Backend<T>::eq(a(i, j), b(i, j), sc)) return false;
      return true;
    };
    require(near(ssd * s, s), Errc::internal_error, msg);
    require(near(sds * sdag, sdag), Errc::internal_error, msg);
    require(near(ssd, ssd.transpose()), Errc::internal_error, msg);
    require(near(sds, sds.transpose()), Errc::internal_error, msg);
  }
  return sdag;
}

/// Builds the bundle from an explicit distance matrix (symmetric, zero
/// diagonal, non-negative). Used both for trees and for the standalone
/// Euclidean example.
template <typename T>
DistLapBundle<T> bundle_from_distance_matrix(Matrix<T> d, const BundleOptions& opts = {}) {
  require(d.is_square() && !d.empty(), Errc::not_square, "distance matrix must be square");
  require(is_symmetric(d), Errc::not_symmetric, "distance matrix must be symmetric");
  const std::size_t n = d.rows();
  T scale = d.max_abs();
  for (std::size_t i = 0; i < n; ++i)
    require(Backend<T>::is_zero(d(i, i), scale), Errc::bad_config,
            "distance matrix needs a zero diagonal");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      require(i == j || Backend<T>::nonnegative(d(i, j), scale), Errc::bad_config,
              "distance matrix entries must be non-negative");

  DistLapBundle<T> b;
  b.D = std::move(d);
  b.eta.assign(n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.eta[i] += b.D(i, j);
  b.Delta = Matrix<T>::diag(b.eta);
  b.S = b.Delta - b.D;
  b.gamma = det(delete_rc(b.S, 0, 0));  // the (1,1) cofactor
  b.Sstar = b.S + Matrix<T>::ones(n, n);
  b.Sdag = pinv_centered(b.S, opts);

  if (opts.verify_for(n)) {
    T s_scale = b.S.max_abs();
    require(Backend<T>::is_zero(det(b.S), det(b.Sstar)), Errc::internal_error,
            "distance Laplacian must be singular");
    T nn = T(static_cast<long>(n)) * T(static_cast<long>(n));
    require(Backend<T>::eq(det(b.Sstar), nn * b.gamma, det(b.Sstar)), Errc::internal_error,
            "det(S*) = n^2 gamma failed");
    // S S† = I - J/n
    Matrix<T> centering = Matrix<T>::identity(n) -
                          Matrix<T>::ones(n, n) * (T(1) / T(static_cast<long>(n)));
    Matrix<T> ssd = b.S * b.Sdag;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        require(Backend<T>::eq(ssd(i, j), centering(i, j), s_scale), Errc::internal_error,
                "S S† = I - J/n failed");
  }
  return b;
}

/// Builds D, eta, Delta, S, gamma, S*, S† for a tree. Tree-only invariants
/// (S PSD, gamma != 0) are verified under the same gate as the
/// Moore-Penrose checks.
template <typename T>
DistLapBundle<T> build_bundle(const WeightedTree& t, const BundleOptions& opts = {}) {
  DistLapBundle<T> b =
      bundle_from_distance_matrix(convert_matrix<T>(t.distance_matrix()), opts);
  if (opts.verify_for(b.n())) {
    require(!Backend<T>::is_zero(b.gamma, det(b.Sstar)), Errc::internal_error,
            "tree distance Laplacian must have rank n-1");
    require(is_psd(b.S), Errc::internal_error, "tree distance Laplacian must be PSD");
  }
  return b;
}

/// Weighted classical Laplacian L = Diag(row sums of A) - A and its pinv.
template <typename T>
ClassicalLapBundle<T> classical_laplacian(const WeightedTree& t, const BundleOptions& opts = {}) {
  const std::size_t n = static_cast<std::size_t>(t.n());
  Matrix<T> a(n, n);
  for (const Edge& e : t.edges()) {
    T w = Backend<T>::from_rational(e.w);
    a(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1)) = w;
    a(static_cast<std::size_t>(e.v - 1), static_cast<std::size_t>(e.u - 1)) = w;
  }
  Matrix<T> l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    T deg(0);
    for (std::size_t j = 0; j < n; ++j) deg += a(i, j);
    l(i, i) = deg;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) l(i, j) = -a(i, j);
  }
  ClassicalLapBundle<T> b;
  b.Ldag = pinv_centered(l, opts);
  b.L = std::move(l);
  return b;
}

/// (P1): d_ij = alpha_ii + alpha_jj - 2 alpha_ij for all i, j.
template <typename T>
bool check_p1_identity(const ClassicalLapBundle<T>& cb, const Matrix<T>& d) {
  require(d.rows() == cb.Ldag.rows() && d.cols() == cb.Ldag.cols(), Errc::dimension_mismatch,
          "P1 check needs matching dimensions");
  const Matrix<T>& al = cb.Ldag;
  T scale = d.max_abs();
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!Backend<T>::eq(d(i, j), al(i, i) + al(j, j) - T(2) * al(i, j), scale)) return false;
  return true;
}

namespace detail {

// S entries reordered so that `a` plays role 1 and `b` plays role 2,
// remaining vertices ascending: the relabeling under which the paper's
// (1,2)-entry argument applies to the pair (a,b).
template <typename T>
Matrix<T> relabeled_s(const DistLapBundle<T>& bundle, int a, int b) {
  const std::size_t n = bundle.n();
  std::vector<std::size_t> order;
  order.push_back(static_cast<std::size_t>(a - 1));
  order.push_back(static_cast<std::size_t>(b - 1));
  for (std::size_t v = 0; v < n; ++v)
    if (v != static_cast<std::size_t>(a - 1) && v != static_cast<std::size_t>(b - 1))
      order.push_back(v);
  return submatrix(bundle.S, order, order);
}

}  // namespace detail

/// Lemma item (iv) route to one pinv entry: s†_ab = 1' C^{-1} 1 / n^2 with
/// C = S(1|2) after relabeling (a,b) -> (1,2).
template <typename T>
T sdag_entry_via_cofactor_path(const WeightedTree& t, int a, int b) {
  t.check_vertex(a);
  t.check_vertex(b);
  require(a != b, Errc::same_vertex, "cofactor path needs two distinct vertices");
  BundleOptions opts;
  opts.verify = BundleOptions::Verify::off;
  DistLapBundle<T> bundle = bundle_from_distance_matrix<T>(
      convert_matrix<T>(t.distance_matrix()), opts);
  Matrix<T> c = delete_rc(detail::relabeled_s(bundle, a, b), 0, 1);
  Matrix<T> ones = Matrix<T>::ones(c.rows(), 1);
  T quad = (ones.transpose() * inverse(c) * ones)(0, 0);
  T n = T(static_cast<long>(t.n()));
  return quad / (n * n);
}

}  // namespace treelap
