#pragma once

#include <utility>

#include "nilproj/flag.hpp"
#include "nilproj/linalg.hpp"

namespace nilproj {

/// Jump indices of W relative to the flag: e = {j : X_j not in W + F_{j-1}},
/// decided by one incremental rank test per index. |e| = codim W always.
template <class S>
JumpSet jump_indices(const Flag<S>& flag, const Subspace<S>& w) {
  const int m = flag.dim();
  if (w.ambient_dim() != m) throw DimensionMismatch("subspace does not match flag");
  IncrementalSpan<S> span(m);
  for (int c = 0; c < w.canonical().cols(); ++c) span.add(w.canonical().col(c));
  std::vector<int> jumps;
  for (int j = 1; j <= m; ++j) {
    const Vector<S> xj = flag.vector(j);
    if (!span.contains(xj)) jumps.push_back(j);
    span.add(xj);
  }
  return JumpSet(m, std::move(jumps));
}

/// Independent route through intersection dimensions: the complement of e is
/// {i : dim(W ∩ F_i) > dim(W ∩ F_{i-1})}.
template <class S>
JumpSet jump_indices_dual(const Flag<S>& flag, const Subspace<S>& w) {
  const int m = flag.dim();
  if (w.ambient_dim() != m) throw DimensionMismatch("subspace does not match flag");
  std::vector<int> co;
  int prev_dim = 0;
  for (int i = 1; i <= m; ++i) {
    const int d = intersect(w, flag.prefix(i)).dim();
    if (d > prev_dim) co.push_back(i);
    prev_dim = d;
  }
  return JumpSet(m, std::move(co)).complement();
}

/// Membership of W in the Schubert cell labeled e. The size shortcut comes
/// first: |e| must equal the codimension of W.
template <class S>
bool schubert_cell_contains(const Flag<S>& flag, const JumpSet& e, const Subspace<S>& w) {
  if (w.ambient_dim() != flag.dim()) throw DimensionMismatch("subspace does not match flag");
  if (e.ambient_size() != flag.dim()) throw DimensionMismatch("jump set does not match flag");
  if (e.size() != flag.dim() - w.dim()) return false;
  return jump_indices(flag, w) == e;
}

/// The adapted basis of a cell member: Y_j = X_j on e, and for i outside e
/// the unique Y_i in W with Y_i - X_i in U_e (namely X_i - E(W)X_i with E(W)
/// the projection onto U_e along W).
template <class S>
struct AdaptedBasis {
  Matrix<S> vectors;    // columns Y_1..Y_m
  JumpSet e;
  Subspace<S> subspace; // the W it was built for

  Vector<S> vector(int j) const {
    if (j < 1 || j > vectors.cols()) throw BadIndex("basis index out of range");
    return vectors.col(j - 1);
  }
};

/// Builds the adapted basis. Requires U_e ∔ W = ambient (NotTransversal
/// otherwise). By default W must lie in the cell labeled e (WrongJumpSet
/// otherwise); `allow_extended` accepts any transversal W, the analytic
/// extension of the construction.
template <class S>
AdaptedBasis<S> beta_basis(const Flag<S>& flag, const JumpSet& e, const Subspace<S>& w,
                           bool allow_extended = false) {
  const int m = flag.dim();
  if (w.ambient_dim() != m) throw DimensionMismatch("subspace does not match flag");
  if (e.ambient_size() != m) throw DimensionMismatch("jump set does not match flag");
  const Subspace<S> ue = flag.coordinate_subspace(e);
  if (!is_transversal(ue, w))
    throw NotTransversal("U_e and the subspace do not span the ambient space directly");
  if (!allow_extended && !(jump_indices(flag, w) == e))
    throw WrongJumpSet("subspace lies in the Schubert cell " + jump_indices(flag, w).str() +
                       ", not " + e.str());
  const Matrix<S> ew = oblique_projection_direct(ue, w);
  Matrix<S> basis(m, m);
  for (int j = 1; j <= m; ++j) {
    Vector<S> xj = flag.vector(j);
    if (!e.contains(j)) xj -= ew * xj;
    basis.set_col(j - 1, xj);
  }
  return AdaptedBasis<S>{std::move(basis), e, w};
}

/// Graph chart of the cell around U0: chi(W) is the matrix (in the canonical
/// bases of U0-perp and U0) of P_{U0} ∘ (P_{U0-perp}|_W)^{-1}.
template <class S>
Matrix<S> chi(const Subspace<S>& u0, const Subspace<S>& w) {
  if (!is_transversal(u0, w)) throw NotTransversal("chi needs a transversal subspace");
  const Subspace<S> u0p = perp(u0);
  const int d0 = u0.dim();
  const int d1 = u0p.dim();
  if (d1 == 0) return Matrix<S>(d0, 0);
  const Matrix<S>& b0 = u0.canonical();
  const Matrix<S>& b1 = u0p.canonical();
  const Matrix<S> p0 = orthogonal_projection(u0);
  const Matrix<S> p1 = Matrix<S>::identity(u0.ambient_dim()) - p0;
  // solve (P_perp restricted to W) c_r = v_r for each canonical v_r of U0-perp
  const Matrix<S> proj_w = p1 * w.canonical();                 // columns in U0-perp
  const Matrix<S> proj_w_coords = solve(Matrix<S>(b1.transpose() * b1),
                                        Matrix<S>(b1.transpose() * proj_w));
  const Matrix<S> coeffs = inverse(proj_w_coords);             // v_r -> W coordinates
  const Matrix<S> lifted = w.canonical() * coeffs;             // (P_perp|_W)^{-1} v_r
  const Matrix<S> heads = p0 * lifted;                         // P_{U0} of the lifts
  if (d0 == 0) return Matrix<S>(0, d1);
  return solve(Matrix<S>(b0.transpose() * b0), Matrix<S>(b0.transpose() * heads));
}

/// Inverse chart: the graph subspace {v + Tv : v in U0-perp}. Always lands
/// in the transversal set around U0.
template <class S>
Subspace<S> chi_inverse(const Subspace<S>& u0, const Matrix<S>& t) {
  const Subspace<S> u0p = perp(u0);
  if (t.rows() != u0.dim() || t.cols() != u0p.dim())
    throw DimensionMismatch("graph operator must map U0-perp coordinates to U0 coordinates");
  const Matrix<S>& b0 = u0.canonical();
  const Matrix<S>& b1 = u0p.canonical();
  Matrix<S> graph = b1;
  if (u0.dim() > 0) graph += b0 * t;
  return Subspace<S>(std::move(graph));
}

}  // namespace nilproj
