#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "nilproj/matrix.hpp"

namespace nilproj {

namespace detail {

inline Eigen::MatrixXd to_eigen(const Matrix<double>& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

inline Matrix<double> from_eigen(const Eigen::MatrixXd& m) {
  Matrix<double> a(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) = m(i, j);
  return a;
}

}  // namespace detail

/// Maximum principal angle threshold for float subspace equality.
inline constexpr double kSubspaceAngleTolerance = 1e-8;

/// Linear subspace of R^m given by a basis matrix (columns). A unique
/// canonical basis (reduced echelon form of the transposed basis) is computed
/// on construction; on the exact backend equality is canonical-form equality.
template <class S>
class Subspace {
 public:
  /// Zero subspace {0}.
  explicit Subspace(int ambient_dim)
      : ambient_(ambient_dim),
        basis_(ambient_dim, 0),
        canonical_(ambient_dim, 0) {
    if (ambient_dim < 0) throw BadParameter("negative ambient dimension");
  }

  /// Subspace spanned by the columns, which must be linearly independent.
  explicit Subspace(Matrix<S> basis_columns)
      : ambient_(basis_columns.rows()), basis_(std::move(basis_columns)) {
    canonical_ = canonical_basis(basis_);
    if (canonical_.cols() != basis_.cols())
      throw SingularBasis("subspace basis columns are linearly dependent");
  }

  /// Subspace spanned by arbitrary columns (dependencies allowed).
  static Subspace span(const Matrix<S>& spanning_columns) {
    Subspace w(spanning_columns.rows());
    w.canonical_ = canonical_basis(spanning_columns);
    w.basis_ = w.canonical_;
    return w;
  }
  static Subspace span_of(int ambient_dim, const std::vector<Vector<S>>& vectors) {
    return span(Matrix<S>::from_columns(ambient_dim, vectors));
  }
  static Subspace full(int ambient_dim) { return Subspace(Matrix<S>::identity(ambient_dim)); }

  int ambient_dim() const { return ambient_; }
  int dim() const { return canonical_.cols(); }

  /// Basis as provided at construction (or canonical for span()).
  const Matrix<S>& basis() const { return basis_; }
  /// Unique canonical basis.
  const Matrix<S>& canonical() const { return canonical_; }

  bool contains(const Vector<S>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("subspace ambient dimension mismatch");
    IncrementalSpan<S> span(ambient_);
    for (int j = 0; j < canonical_.cols(); ++j) span.add(canonical_.col(j));
    return span.contains(v);
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspace ambient dimension mismatch");
    IncrementalSpan<S> span(ambient_);
    for (int j = 0; j < canonical_.cols(); ++j) span.add(canonical_.col(j));
    for (int j = 0; j < other.canonical_.cols(); ++j)
      if (!span.contains(other.canonical_.col(j))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.dim() != b.dim()) return false;
    if constexpr (ScalarTraits<S>::exact) {
      return a.canonical_ == b.canonical_;
    } else {
      return float_equal(a, b);
    }
  }

 private:
  static Matrix<S> canonical_basis(const Matrix<S>& columns) {
    Matrix<S> rows = columns.transpose();
    std::vector<int> pivots = reduce_to_rref(rows);
    return rows.row_range(0, static_cast<int>(pivots.size())).transpose();
  }

  /// sin(max principal angle) via the gap between orthogonal projections.
  static bool float_equal(const Subspace& a, const Subspace& b) {
    const int m = a.ambient_;
    auto projector = [m](const Matrix<double>& basis) {
      if (basis.cols() == 0) return Eigen::MatrixXd::Zero(m, m).eval();
      Eigen::MatrixXd bb = detail::to_eigen(basis);
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(bb);
      Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m, basis.cols());
      return (q * q.transpose()).eval();
    };
    Eigen::MatrixXd gap = projector(a.canonical_) - projector(b.canonical_);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gap, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().cwiseAbs().maxCoeff() <= kSubspaceAngleTolerance;
  }

  int ambient_;
  Matrix<S> basis_;
  Matrix<S> canonical_;
};

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace sum ambient mismatch");
  return Subspace<S>::span(Matrix<S>::hcat(a.canonical(), b.canonical()));
}

/// a ∩ b via the kernel of [A | -B]: each kernel vector (u, v) gives Au = Bv.
template <class S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspace intersection ambient mismatch");
  const Matrix<S>& ba = a.canonical();
  const Matrix<S>& bb = b.canonical();
  Matrix<S> stacked = Matrix<S>::hcat(ba, -bb);
  Matrix<S> kernel = null_space(stacked);
  std::vector<Vector<S>> gens;
  for (int j = 0; j < kernel.cols(); ++j) {
    Vector<S> v(a.ambient_dim());
    for (int c = 0; c < ba.cols(); ++c) v.add_scaled(kernel(c, j), ba.col(c));
    gens.push_back(std::move(v));
  }
  return Subspace<S>::span_of(a.ambient_dim(), gens);
}

/// Orthogonal complement with respect to x^T G y (standard product if G is
/// the identity): the kernel of B^T G.
template <class S>
Subspace<S> perp(const Subspace<S>& w, const Matrix<S>& gram) {
  return Subspace<S>::span(null_space(Matrix<S>(w.canonical().transpose() * gram)));
}

template <class S>
Subspace<S> perp(const Subspace<S>& w) {
  return Subspace<S>::span(null_space(w.canonical().transpose()));
}

/// U0 ∔ W = ambient: dimensions add up and the joint column rank is full.
template <class S>
bool is_transversal(const Subspace<S>& u0, const Subspace<S>& w) {
  if (u0.ambient_dim() != w.ambient_dim())
    throw DimensionMismatch("transversality ambient mismatch");
  const int m = u0.ambient_dim();
  if (u0.dim() + w.dim() != m) return false;
  return rank(Matrix<S>::hcat(u0.canonical(), w.canonical())) == m;
}

template <class To, class From>
Subspace<To> convert_subspace(const Subspace<From>& w) {
  Matrix<To> basis(w.ambient_dim(), w.basis().cols());
  for (int i = 0; i < basis.rows(); ++i)
    for (int j = 0; j < basis.cols(); ++j)
      basis(i, j) = ScalarTraits<To>::from_rational(w.basis()(i, j));
  return Subspace<To>(std::move(basis));
}

}  // namespace nilproj
