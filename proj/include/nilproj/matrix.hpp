#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "nilproj/errors.hpp"
#include "nilproj/scalar.hpp"

namespace nilproj {

/// Coordinate vector relative to some basis. Indexing is 0-based here;
/// 1-based basis indices live at the domain level and are converted at call
/// sites.
template <class S>
class Vector {
 public:
  Vector() = default;
  explicit Vector(int n) : c_(static_cast<std::size_t>(n), S(0)) {}
  explicit Vector(std::vector<S> coords) : c_(std::move(coords)) {}
  Vector(std::initializer_list<S> coords) : c_(coords) {}

  int size() const { return static_cast<int>(c_.size()); }
  S& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const S& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<S>& coords() const { return c_; }

  static Vector unit(int n, int i) {
    Vector v(n);
    v[i] = S(1);
    return v;
  }

  bool is_zero() const {
    for (const S& x : c_)
      if (!(x == S(0))) return false;
    return true;
  }

  S max_abs() const {
    S m(0);
    for (const S& x : c_) m = std::max(m, ScalarTraits<S>::abs(x));
    return m;
  }

  Vector& operator+=(const Vector& o) {
    check_same_size(o);
    for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    check_same_size(o);
    for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vector& operator*=(const S& s) {
    for (S& x : c_) x *= s;
    return *this;
  }
  /// *this += s * v
  Vector& add_scaled(const S& s, const Vector& v) {
    check_same_size(v);
    for (int i = 0; i < size(); ++i) c_[i] += s * v.c_[i];
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator-(Vector a) {
    for (S& x : a.c_) x = -x;
    return a;
  }
  friend Vector operator*(const S& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }

 private:
  void check_same_size(const Vector& o) const {
    if (size() != o.size()) throw DimensionMismatch("vector sizes differ");
  }
  std::vector<S> c_;
};

/// Dense rectangular matrix over either scalar backend. Row-major storage.
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, S(0)) {
    if (rows < 0 || cols < 0) throw BadParameter("negative matrix dimension");
  }
  Matrix(int rows, int cols, std::initializer_list<S> entries) : Matrix(rows, cols) {
    if (static_cast<int>(entries.size()) != rows * cols)
      throw BadParameter("matrix initializer size mismatch");
    std::copy(entries.begin(), entries.end(), a_.begin());
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix from_columns(int rows, const std::vector<Vector<S>>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vector<S> col(int j) const {
    Vector<S> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(int j, const Vector<S>& v) {
    if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }
  Vector<S> row(int i) const {
    Vector<S> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns [first, last) as a new matrix.
  Matrix column_range(int first, int last) const {
    Matrix m(rows_, last - first);
    for (int i = 0; i < rows_; ++i)
      for (int j = first; j < last; ++j) m(i, j - first) = (*this)(i, j);
    return m;
  }
  Matrix select_columns(const std::vector<int>& idx) const {
    Matrix m(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
  }
  Matrix row_range(int first, int last) const {
    Matrix m(last - first, cols_);
    for (int i = first; i < last; ++i)
      for (int j = 0; j < cols_; ++j) m(i - first, j) = (*this)(i, j);
    return m;
  }

  /// [A | B] side by side.
  static Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hcat row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
      for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
  }

  S max_abs() const {
    S m(0);
    for (const S& x : a_) m = std::max(m, ScalarTraits<S>::abs(x));
    return m;
  }
  bool is_zero() const {
    for (const S& x : a_)
      if (!(x == S(0))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (S& x : a_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const S& s, Matrix m) { return m *= s; }
  friend Matrix operator-(Matrix a) {
    for (S& x : a.a_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int k = 0; k < a.cols(); ++k) {
        const S& aik = a(i, k);
        if (aik == S(0)) continue;
        for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Vector<S> operator*(const Matrix& a, const Vector<S>& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector<S> y(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
      S acc(0);
      for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
      y[i] = acc;
    }
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  int rows_, cols_;
  std::vector<S> a_;
};

// ---------------------------------------------------------------------------
// Elimination kernels
// ---------------------------------------------------------------------------

/// In-place reduction to reduced row echelon form. Returns the pivot columns.
/// Exact backend: first nonzero pivot, no tolerances. Float backend: partial
/// pivoting with a relative threshold against the input's largest entry.
template <class S>
std::vector<int> reduce_to_rref(Matrix<S>& a) {
  using T = ScalarTraits<S>;
  const S scale = a.max_abs();
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    if constexpr (T::exact) {
      for (int i = r; i < a.rows(); ++i)
        if (!(a(i, c) == S(0))) {
          p = i;
          break;
        }
    } else {
      S best(0);
      for (int i = r; i < a.rows(); ++i) {
        S mag = T::abs(a(i, c));
        if (mag > best) {
          best = mag;
          p = i;
        }
      }
      if (p >= 0 && T::is_negligible(a(p, c), scale)) p = -1;
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const S inv_pivot = S(1) / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv_pivot;
    a(r, c) = S(1);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const S f = a(i, c);
      if (f == S(0)) continue;
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
      a(i, c) = S(0);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

template <class S>
int rank(Matrix<S> a) {
  return static_cast<int>(reduce_to_rref(a).size());
}

/// Basis of the kernel {x : Ax = 0}, one column per free variable.
template <class S>
Matrix<S> null_space(const Matrix<S>& a) {
  Matrix<S> r = a;
  const std::vector<int> pivots = reduce_to_rref(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  Matrix<S> kernel(a.cols(), a.cols() - static_cast<int>(pivots.size()));
  int out = 0;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    kernel(f, out) = S(1);
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) kernel(pivots[i], out) = -r(i, f);
    ++out;
  }
  return kernel;
}

/// Solves Ax = b for square invertible A. Throws SingularBasis otherwise.
template <class S>
Matrix<S> solve(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != a.cols()) throw DimensionMismatch("solve needs a square matrix");
  if (a.rows() != b.rows()) throw DimensionMismatch("solve shape mismatch");
  Matrix<S> aug = Matrix<S>::hcat(a, b);
  const std::vector<int> pivots = reduce_to_rref(aug);
  if (static_cast<int>(pivots.size()) != a.cols() ||
      (!pivots.empty() && pivots.back() >= a.cols()))
    throw SingularBasis("singular linear system");
  return aug.column_range(a.cols(), aug.cols());
}

template <class S>
Vector<S> solve(const Matrix<S>& a, const Vector<S>& b) {
  return solve(a, Matrix<S>::from_columns(b.size(), {b})).col(0);
}

template <class S>
Matrix<S> inverse(const Matrix<S>& a) {
  return solve(a, Matrix<S>::identity(a.rows()));
}

/// Incrementally maintained column space with exact (or tolerance-based)
/// membership tests: the primary tool behind jump indices and span checks.
template <class S>
class IncrementalSpan {
 public:
  explicit IncrementalSpan(int ambient_dim) : ambient_(ambient_dim), scale_(0) {}

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(reduced_.size()); }

  /// Adds v to the span. Returns true iff the dimension grew.
  bool add(const Vector<S>& v) {
    Vector<S> r = reduce(v);
    if (r.is_zero()) return false;
    int p = pivot_of(r);
    const S inv = S(1) / r[p];
    r *= inv;
    // keep earlier vectors reduced against the new pivot
    for (std::size_t k = 0; k < reduced_.size(); ++k) {
      const S f = reduced_[k][p];
      if (!(f == S(0))) reduced_[k].add_scaled(-f, r);
    }
    reduced_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  bool contains(const Vector<S>& v) const {
    Vector<S> r = reduce(v);
    if constexpr (ScalarTraits<S>::exact) {
      return r.is_zero();
    } else {
      S local = std::max(scale_, v.max_abs());
      for (int i = 0; i < r.size(); ++i)
        if (!ScalarTraits<S>::is_negligible(r[i], local)) return false;
      return true;
    }
  }

 private:
  Vector<S> reduce(const Vector<S>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("span ambient dimension mismatch");
    scale_ = std::max(scale_, v.max_abs());
    Vector<S> r = v;
    for (std::size_t k = 0; k < reduced_.size(); ++k) {
      const S f = r[pivots_[k]];
      if (!(f == S(0))) r.add_scaled(-f, reduced_[k]);
    }
    if constexpr (!ScalarTraits<S>::exact) {
      for (int i = 0; i < r.size(); ++i)
        if (ScalarTraits<S>::is_negligible(r[i], scale_)) r[i] = S(0);
    }
    return r;
  }

  int pivot_of(const Vector<S>& r) const {
    if constexpr (ScalarTraits<S>::exact) {
      for (int i = 0; i < r.size(); ++i)
        if (!(r[i] == S(0))) return i;
    } else {
      int p = 0;
      S best(0);
      for (int i = 0; i < r.size(); ++i) {
        S mag = ScalarTraits<S>::abs(r[i]);
        if (mag > best) {
          best = mag;
          p = i;
        }
      }
      return p;
    }
    throw Error("internal: pivot of zero vector");
  }

  int ambient_;
  mutable S scale_;
  std::vector<Vector<S>> reduced_;
  std::vector<int> pivots_;
};

}  // namespace nilproj
