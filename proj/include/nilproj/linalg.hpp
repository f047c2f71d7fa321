#pragma once

#include <Eigen/Dense>

#include "nilproj/matrix.hpp"
#include "nilproj/subspace.hpp"

namespace nilproj {

/// Relative singular value cutoff for the float pseudoinverse.
inline constexpr double kPinvRankTolerance = 1e-10;

/// Moore-Penrose inverse with respect to the inner product x^T G y: the
/// unique B with ABA=A, BAB=B and both AB, BA self-adjoint for G. Computed
/// from a rank factorization A = CF read off the reduced row echelon form,
///   B = G^{-1} F^T (F G^{-1} F^T)^{-1} (C^T G C)^{-1} C^T G,
/// which is exact on the rational backend.
template <class S>
Matrix<S> moore_penrose(const Matrix<S>& a, const Matrix<S>& gram) {
  static_assert(ScalarTraits<S>::exact, "weighted pseudoinverse is exact-backend only");
  if (gram.rows() != a.rows() || gram.cols() != a.rows())
    throw DimensionMismatch("gram matrix shape mismatch");
  Matrix<S> r = a;
  const std::vector<int> pivots = reduce_to_rref(r);
  const int rk = static_cast<int>(pivots.size());
  if (rk == 0) return Matrix<S>::zero(a.cols(), a.rows());
  Matrix<S> c = a.select_columns(pivots);
  Matrix<S> f = r.row_range(0, rk);
  Matrix<S> gram_inv = inverse(gram);
  Matrix<S> left = gram_inv * f.transpose() * inverse(f * gram_inv * f.transpose());
  Matrix<S> right = inverse(c.transpose() * gram * c) * c.transpose() * gram;
  return left * right;
}

template <class S>
Matrix<S> moore_penrose(const Matrix<S>& a) {
  if constexpr (ScalarTraits<S>::exact) {
    return moore_penrose(a, Matrix<S>::identity(a.rows()));
  } else {
    // SVD route; singular values below the relative cutoff are treated as 0.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(detail::to_eigen(a),
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const double cutoff = sigma.size() > 0 ? kPinvRankTolerance * sigma(0) : 0.0;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sigma.size());
    for (int i = 0; i < sigma.size(); ++i)
      if (sigma(i) > cutoff && sigma(i) > 0.0) inv(i) = 1.0 / sigma(i);
    Eigen::MatrixXd pinv = svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
    return detail::from_eigen(pinv);
  }
}

/// Orthogonal projection onto W for the inner product given by gram:
/// P = B (B^T G B)^{-1} B^T G. The zero subspace projects to 0.
template <class S>
Matrix<S> orthogonal_projection(const Subspace<S>& w, const Matrix<S>& gram) {
  const int m = w.ambient_dim();
  if (gram.rows() != m || gram.cols() != m) throw DimensionMismatch("gram matrix shape mismatch");
  if (w.dim() == 0) return Matrix<S>::zero(m, m);
  const Matrix<S>& b = w.canonical();
  return b * inverse(b.transpose() * gram * b) * b.transpose() * gram;
}

template <class S>
Matrix<S> orthogonal_projection(const Subspace<S>& w) {
  return orthogonal_projection(w, Matrix<S>::identity(w.ambient_dim()));
}

/// Oblique projection onto U0 along W through the pseudoinverse formula
///   E = P_{U0} ((1 - P_W) P_{U0})^† (1 - P_W).
template <class S>
Matrix<S> oblique_projection_mp(const Subspace<S>& u0, const Subspace<S>& w,
                                const Matrix<S>& gram) {
  if (!is_transversal(u0, w)) throw NotTransversal("subspaces are not transversal");
  const Matrix<S> px = orthogonal_projection(u0, gram);
  const Matrix<S> py = orthogonal_projection(w, gram);
  const Matrix<S> one_minus_py = Matrix<S>::identity(u0.ambient_dim()) - py;
  const Matrix<S> mid = one_minus_py * px;
  return px * moore_penrose(mid, gram) * one_minus_py;
}

template <class S>
Matrix<S> oblique_projection_mp(const Subspace<S>& u0, const Subspace<S>& w) {
  if constexpr (ScalarTraits<S>::exact) {
    return oblique_projection_mp(u0, w, Matrix<S>::identity(u0.ambient_dim()));
  } else {
    if (!is_transversal(u0, w)) throw NotTransversal("subspaces are not transversal");
    const Matrix<S> px = orthogonal_projection(u0);
    const Matrix<S> py = orthogonal_projection(w);
    const Matrix<S> one_minus_py = Matrix<S>::identity(u0.ambient_dim()) - py;
    return px * moore_penrose(Matrix<S>(one_minus_py * px)) * one_minus_py;
  }
}

/// Oblique projection onto U0 along W by solving v = u + w directly: invert
/// the stacked basis [B_{U0} | B_W] once and keep the U0 block. Independent
/// of any inner product; serves as the oracle for the pseudoinverse route.
template <class S>
Matrix<S> oblique_projection_direct(const Subspace<S>& u0, const Subspace<S>& w) {
  if (!is_transversal(u0, w)) throw NotTransversal("subspaces are not transversal");
  const int m = u0.ambient_dim();
  if (u0.dim() == 0) return Matrix<S>::zero(m, m);
  Matrix<S> stacked = Matrix<S>::hcat(u0.basis(), w.basis());
  Matrix<S> coeffs = inverse(stacked);
  return u0.basis() * coeffs.row_range(0, u0.dim());
}

/// Orthogonal projection onto the graph {v + Tv : v in U0^perp} of
/// T : U0^perp -> U0, assembled from the block formula
///   [ (1+T*T)^{-1}    T*(1+TT*)^{-1}   ]
///   [ T(1+T*T)^{-1}   TT*(1+TT*)^{-1}  ]
/// in the (U0^perp, U0) decomposition and rotated to ambient coordinates.
/// Adjoints are taken with the subspace Gram matrices, so no orthonormal
/// bases are needed and the result is exact over rationals.
template <class S>
Matrix<S> graph_projection(const Matrix<S>& t, const Subspace<S>& u0) {
  const int m = u0.ambient_dim();
  const Subspace<S> u0p = perp(u0);
  const int d0 = u0.dim();
  const int d1 = u0p.dim();
  if (t.rows() != d0 || t.cols() != d1)
    throw DimensionMismatch("graph operator must map U0-perp coordinates to U0 coordinates");

  const Matrix<S>& b0 = u0.canonical();
  const Matrix<S>& b1 = u0p.canonical();
  const Matrix<S> g0 = b0.transpose() * b0;
  const Matrix<S> g1 = b1.transpose() * b1;
  const Matrix<S> g0_inv = d0 > 0 ? inverse(g0) : Matrix<S>(0, 0);
  const Matrix<S> g1_inv = d1 > 0 ? inverse(g1) : Matrix<S>(0, 0);
  const Matrix<S> t_adj = g1_inv * t.transpose() * g0;  // adjoint U0 -> U0^perp

  const Matrix<S> inv_1_tt = inverse(Matrix<S>::identity(d1) + t_adj * t);
  const Matrix<S> inv_1_tt_adj = inverse(Matrix<S>::identity(d0) + t * t_adj);
  const Matrix<S> a11 = inv_1_tt;                 // U0^perp -> U0^perp
  const Matrix<S> a12 = t_adj * inv_1_tt_adj;     // U0      -> U0^perp
  const Matrix<S> a21 = t * inv_1_tt;             // U0^perp -> U0
  const Matrix<S> a22 = t * t_adj * inv_1_tt_adj; // U0      -> U0

  // coordinate extraction maps: x -> coords of the orthogonal components
  const Matrix<S> coords1 = d1 > 0 ? g1_inv * b1.transpose() : Matrix<S>(0, m);
  const Matrix<S> coords0 = d0 > 0 ? g0_inv * b0.transpose() : Matrix<S>(0, m);

  Matrix<S> p = Matrix<S>::zero(m, m);
  if (d1 > 0) p += b1 * (a11 * coords1);
  if (d1 > 0 && d0 > 0) p += b1 * (a12 * coords0) + b0 * (a21 * coords1);
  if (d0 > 0) p += b0 * (a22 * coords0);
  return p;
}

}  // namespace nilproj
