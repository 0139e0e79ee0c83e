#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "treelap/error.hpp"
#include "treelap/scalar.hpp"

namespace treelap {

inline Rational scalar_abs(const Rational& x) { return abs(x); }
inline double scalar_abs(double x) { return std::abs(x); }

/// Dense row-major matrix over an exact rational or float64 scalar.
/// 0x0 matrices are allowed; they represent the empty R matrix at n=2 and
/// empty partition blocks, with det defined as 1.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      require(r.size() == cols_, Errc::dimension_mismatch, "ragged initializer");
      for (const auto& x : r) e_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix ones(std::size_t rows, std::size_t cols) { return Matrix(rows, cols, T(1)); }
  static Matrix diag(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  const T& at(std::size_t i, std::size_t j) const {
    require(i < rows_ && j < cols_, Errc::index_out_of_range, "matrix index out of range");
    return e_[i * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T max_abs() const {
    T m(0);
    for (const T& x : e_) {
      T a = scalar_abs(x);
      if (m < a) m = a;
    }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (T& x : e_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, Errc::dimension_mismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (Backend<T>::exact && scalar_abs(aik) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, Errc::dimension_mismatch,
            "matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<T> e_;
};

template <typename T>
T trace(const Matrix<T>& m) {
  require(m.is_square(), Errc::not_square, "trace of non-square matrix");
  T t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

template <typename T>
bool is_symmetric(const Matrix<T>& m) {
  if (!m.is_square()) return false;
  T scale = m.max_abs();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!Backend<T>::eq(m(i, j), m(j, i), scale)) return false;
  return true;
}

/// M[rows, cols] with entries taken in the listed order of the index sets.
template <typename T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  for (std::size_t r : rows)
    require(r < m.rows(), Errc::index_out_of_range, "submatrix row out of range");
  for (std::size_t c : cols)
    require(c < m.cols(), Errc::index_out_of_range, "submatrix col out of range");
  Matrix<T> s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

/// M(i|j): deletes row i and column j (0-based).
template <typename T>
Matrix<T> delete_rc(const Matrix<T>& m, std::size_t i, std::size_t j) {
  require(i < m.rows() && j < m.cols(), Errc::index_out_of_range, "delete_rc out of range");
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (r != i) rows.push_back(r);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (c != j) cols.push_back(c);
  return submatrix(m, rows, cols);
}

namespace detail {

// Fraction-free Bareiss elimination; exact over any field with exact division.
template <typename T>
T det_bareiss(Matrix<T> a) {
  const std::size_t n = a.rows();
  int sign = 1;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == T(0)) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == T(0)) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

inline double det_lu(Matrix<double> a) {
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a(r, k)) > std::abs(a(p, k))) p = r;
    if (a(p, k) == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace detail

/// Exact backend: fraction-free Bareiss. Float backend: LU with partial
/// pivoting. det of the 0x0 matrix is 1.
template <typename T>
T det(const Matrix<T>& m) {
  require(m.is_square(), Errc::not_square, "det of non-square matrix");
  if (m.empty()) return T(1);
  if constexpr (Backend<T>::exact)
    return detail::det_bareiss(m);
  else
    return detail::det_lu(m);
}

/// Adjugate via the Faddeev-LeVerrier recurrence (O(n^4), exact divisions
/// only by integers). Works for singular matrices, unlike det*inverse.
template <typename T>
Matrix<T> adjugate(const Matrix<T>& m) {
  require(m.is_square(), Errc::not_square, "adjugate of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix<T>();
  if (n == 1) return Matrix<T>::identity(1);
  Matrix<T> acc = Matrix<T>::identity(n);  // N_0
  for (std::size_t k = 1; k + 1 <= n - 1; ++k) {
    Matrix<T> an = m * acc;
    T c = -trace(an) / T(static_cast<long>(k));
    acc = an;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
  }
  // acc = N_{n-2}; one more step gives N_{n-1}, and adj = (-1)^{n-1} N_{n-1}
  Matrix<T> an = m * acc;
  T c = -trace(an) / T(static_cast<long>(n - 1));
  acc = an;
  for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
  if (n % 2 == 0) acc *= T(-1);
  return acc;
}

/// Gauss-Jordan inverse; exact backend pivots on the first nonzero entry,
/// float backend on the largest magnitude. Throws Errc::singular.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
  require(m.is_square(), Errc::not_square, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    if constexpr (Backend<T>::exact) {
      while (p < n && a(p, c) == T(0)) ++p;
      require(p < n, Errc::singular, "singular matrix");
    } else {
      for (std::size_t r = c + 1; r < n; ++r)
        if (scalar_abs(a(r, c)) > scalar_abs(a(p, c))) p = r;
      require(a(p, c) != T(0), Errc::singular, "singular matrix");
    }
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(p, j));
        std::swap(inv(c, j), inv(p, j));
      }
    T piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == T(0)) continue;
      T f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Checks det(A + x y') = det(A) + y' adj(A) x, both sides computed
/// independently.
template <typename T>
bool matrix_det_lemma_check(const Matrix<T>& a, const Matrix<T>& x, const Matrix<T>& y) {
  require(a.is_square(), Errc::not_square, "matrix determinant lemma needs square A");
  require(x.rows() == a.rows() && x.cols() == 1 && y.rows() == a.rows() && y.cols() == 1,
          Errc::dimension_mismatch, "matrix determinant lemma vector shape mismatch");
  Matrix<T> perturbed = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) perturbed(i, j) += x(i, 0) * y(j, 0);
  T lhs = det(perturbed);
  T rhs = det(a) + (y.transpose() * adjugate(a) * x)(0, 0);
  T scale = scalar_abs(lhs) > scalar_abs(rhs) ? scalar_abs(lhs) : scalar_abs(rhs);
  return Backend<T>::eq(lhs, rhs, scale);
}

// Cyclic Jacobi eigensolver for symmetric float matrices; ascending values.
std::vector<double> jacobi_eigenvalues(const Matrix<double>& m);
// Full decomposition: columns of `vectors` are eigenvectors of the value at
// the same position.
void jacobi_eigen(const Matrix<double>& m, std::vector<double>& values,
                  Matrix<double>& vectors);

/// Positive semidefiniteness. Exact backend: symmetric Gaussian elimination
/// with greatest-diagonal pivoting; PSD iff no working diagonal goes
/// negative and a zero-pivot working block is entirely zero. Float backend:
/// all eigenvalues >= -band(max(1, spectral scale)).
template <typename T>
bool is_psd(const Matrix<T>& m) {
  require(m.is_square(), Errc::not_square, "is_psd needs a square matrix");
  require(is_symmetric(m), Errc::not_symmetric, "is_psd needs a symmetric matrix");
  if constexpr (!Backend<T>::exact) {
    std::vector<double> ev = jacobi_eigenvalues(m);
    if (ev.empty()) return true;
    double scale = std::max(std::abs(ev.front()), std::abs(ev.back()));
    return ev.front() >= -Backend<double>::band(std::max(1.0, scale));
  } else {
    Matrix<T> a = m;
    std::vector<std::size_t> act(m.rows());
    for (std::size_t i = 0; i < act.size(); ++i) act[i] = i;
    while (!act.empty()) {
      std::size_t pi = 0;
      for (std::size_t i = 0; i < act.size(); ++i) {
        if (a(act[i], act[i]) < T(0)) return false;
        if (a(act[i], act[i]) > a(act[pi], act[pi])) pi = i;
      }
      std::size_t p = act[pi];
      if (a(p, p) == T(0)) {
        // greatest diagonal is zero: remaining block must vanish entirely
        for (std::size_t i : act)
          for (std::size_t j : act)
            if (a(i, j) != T(0)) return false;
        return true;
      }
      for (std::size_t i : act) {
        if (i == p || a(i, p) == T(0)) continue;
        T f = a(i, p) / a(p, p);
        for (std::size_t j : act)
          if (j != p) a(i, j) -= f * a(p, j);
      }
      act.erase(act.begin() + static_cast<std::ptrdiff_t>(pi));
    }
    return true;
  }
}

template <typename T>
Matrix<T> convert_matrix(const Matrix<Rational>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Backend<T>::from_rational(m(i, j));
  return out;
}

}  // namespace treelap
