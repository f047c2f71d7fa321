#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "nilproj/bch.hpp"
#include "nilproj/schubert.hpp"

namespace nilproj {

/// Default relative tolerance for the float backend's internal membership
/// verification of the nonlinear projection.
inline constexpr double kMembershipTolerance = 1e-9;

/// Coordinates t with sum t_i basis_i = X, for an invertible basis matrix.
template <class S>
Vector<S> coordinates_in_basis(const Vector<S>& x, const Matrix<S>& basis) {
  if (basis.rows() != basis.cols() || basis.rows() != x.size())
    throw DimensionMismatch("basis matrix must be square and match the vector");
  return solve(basis, x);
}

/// Result of factoring Y across an ordered block partition: coords are the
/// t_j in basis order, parts[r] = sum of t_j Y_j over the r-th block, and
/// the BCH product of the parts (in block order) reproduces Y.
template <class S>
struct BlockFactorization {
  Vector<S> coords;
  std::vector<Vector<S>> parts;
};

/// Inverts the map (t_1..t_m) -> (sum_{A_1} t_j Y_j) ··· (sum_{A_k} t_j Y_j)
/// for a Jordan-Hölder basis Y_1..Y_m and a partition {1..m} = A_1 ⊔ ... ⊔ A_k.
///
/// The map is triangular: its j-th coordinate is t_j + P_j(t_{j+1}, ..., t_m),
/// so back-substitution from j = m down to 1 recovers t exactly. P_j is read
/// off numerically by evaluating the product with t_1..t_j zeroed; no
/// symbolic polynomials are ever formed. Exact on the rational backend.
template <class S>
BlockFactorization<S> block_factorize(const LieAlgebra<S>& alg, const Matrix<S>& basis,
                                      const std::vector<std::vector<int>>& blocks,
                                      const Vector<S>& y) {
  const int m = alg.dim();
  if (basis.rows() != m || basis.cols() != m)
    throw DimensionMismatch("basis must be square of the algebra dimension");
  std::vector<int> seen(static_cast<std::size_t>(m), 0);
  for (const auto& block : blocks)
    for (int j : block) {
      if (j < 1 || j > m) throw BadIndex("block index out of range");
      if (seen[j - 1]++) throw BadIndex("block partition repeats index " + std::to_string(j));
    }
  for (int j = 0; j < m; ++j)
    if (!seen[j]) throw BadIndex("block partition misses index " + std::to_string(j + 1));
  if (!is_jordan_holder_basis(alg, basis))
    throw NotJordanHolder("factorization basis is not a Jordan-Hölder basis");

  const Vector<S> target = coordinates_in_basis(y, basis);
  Vector<S> t(m);

  auto product_coords = [&](int upto) {
    // coordinates of (sum over A_1 of t_j Y_j) ··· (sum over A_k), with
    // t_1..t_upto treated as zero
    Vector<S> acc(m);
    bool first = true;
    for (const auto& block : blocks) {
      Vector<S> part(m);
      for (int j : block)
        if (j > upto && !(t[j - 1] == S(0))) part.add_scaled(t[j - 1], basis.col(j - 1));
      if (first) {
        acc = std::move(part);
        first = false;
      } else {
        acc = bch_multiply(alg, acc, part);
      }
    }
    return coordinates_in_basis(acc, basis);
  };

  for (int j = m; j >= 1; --j) {
    const Vector<S> phi = product_coords(j);  // coordinate j equals P_j(t_{j+1..m})
    t[j - 1] = target[j - 1] - phi[j - 1];
  }

  BlockFactorization<S> result;
  result.coords = std::move(t);
  for (const auto& block : blocks) {
    Vector<S> part(m);
    for (int j : block) part.add_scaled(result.coords[j - 1], basis.col(j - 1));
    result.parts.push_back(std::move(part));
  }

  // the product identity is the defining property; recheck it here
  Vector<S> product = result.parts.empty() ? Vector<S>(m) : result.parts[0];
  for (std::size_t r = 1; r < result.parts.size(); ++r)
    product = bch_multiply(alg, product, result.parts[r]);
  const Vector<S> gap = product - y;
  const S scale = std::max(y.max_abs(), product.max_abs());
  for (int i = 0; i < m; ++i)
    if (!ScalarTraits<S>::is_negligible(gap[i], scale))
      throw MathError("internal: block factorization failed to reproduce the input");
  return result;
}

/// Bipartite factorization Y = e_part · h_part over the blocks (e, complement).
template <class S>
struct Factorization {
  Vector<S> coords;
  Vector<S> e_part;
  Vector<S> h_part;
};

template <class S>
Factorization<S> bipartite_factorize(const LieAlgebra<S>& alg, const AdaptedBasis<S>& basis,
                                     const Vector<S>& y) {
  const JumpSet co = basis.e.complement();
  BlockFactorization<S> f =
      block_factorize(alg, basis.vectors, {basis.e.indices(), co.indices()}, y);
  return Factorization<S>{std::move(f.coords), std::move(f.parts[0]), std::move(f.parts[1])};
}

/// Full result of projecting along a subalgebra, as surfaced by the CLI.
template <class S>
struct ProjectionResult {
  Vector<S> pi;          // the g_e component
  Vector<S> h_part;      // the subalgebra component of the factorization
  Vector<S> coords;      // t_1..t_m in the adapted basis
  JumpSet e;
  Vector<S> remainder;   // (-pi) · X, verified to lie in the subalgebra
};

/// Nonlinear oblique projection along a subalgebra h: the unique element of
/// g_e with X in Pi(X, h) · h, via the bipartite factorization in the
/// adapted basis of h. The membership property is re-verified on every call
/// (exactly, or within `tol` on the float backend).
template <class S>
ProjectionResult<S> project_along_subalgebra(const LieAlgebra<S>& alg, const Flag<S>& flag,
                                             const Subspace<S>& h, const Vector<S>& x,
                                             double tol = kMembershipTolerance) {
  if (flag.dim() != alg.dim()) throw DimensionMismatch("flag does not match algebra");
  if (!is_jordan_holder_basis(alg, flag.basis_matrix()))
    throw NotJordanHolder("flag is not a Jordan-Hölder sequence of the algebra");
  if (!is_subalgebra(alg, h)) throw NotASubalgebra("subspace is not closed under the bracket");
  const JumpSet e = jump_indices(flag, h);
  const AdaptedBasis<S> beta = beta_basis(flag, e, h);
  Factorization<S> f = bipartite_factorize(alg, beta, x);

  Vector<S> remainder = bch_multiply(alg, bch_inverse(f.e_part), x);
  if constexpr (ScalarTraits<S>::exact) {
    if (!h.contains(remainder)) throw MathError("internal: projection remainder escaped h");
  } else {
    const Matrix<S> ph = orthogonal_projection(h);
    const Vector<S> off = remainder - ph * remainder;
    const double scale = std::max({1.0, ScalarTraits<S>::to_double(x.max_abs()),
                                   ScalarTraits<S>::to_double(remainder.max_abs())});
    for (int i = 0; i < off.size(); ++i)
      if (std::fabs(ScalarTraits<S>::to_double(off[i])) > tol * scale)
        throw MathError("internal: projection remainder escaped h beyond tolerance");
  }
  return ProjectionResult<S>{std::move(f.e_part), std::move(f.h_part), std::move(f.coords), e,
                             std::move(remainder)};
}

template <class S>
Vector<S> nonlinear_projection(const LieAlgebra<S>& alg, const Flag<S>& flag,
                               const Subspace<S>& h, const Vector<S>& x,
                               double tol = kMembershipTolerance) {
  return project_along_subalgebra(alg, flag, h, x, tol).pi;
}

template <class S>
bool projection_idempotence_check(const LieAlgebra<S>& alg, const Flag<S>& flag,
                                  const Subspace<S>& h, const Vector<S>& x) {
  const Vector<S> once = nonlinear_projection(alg, flag, h, x);
  const Vector<S> twice = nonlinear_projection(alg, flag, h, once);
  if constexpr (ScalarTraits<S>::exact) {
    return once == twice;
  } else {
    const Vector<S> gap = once - twice;
    const S scale = std::max(S(1), once.max_abs());
    for (int i = 0; i < gap.size(); ++i)
      if (!ScalarTraits<S>::is_negligible(gap[i], scale)) return false;
    return true;
  }
}

/// Second-difference smoothness report for a curve of subalgebras.
struct SmoothnessReport {
  std::vector<int> grid_sizes;
  std::vector<double> max_second_differences;  // one entry per grid level
  std::vector<double> observed_orders;         // log2 decay between levels
  std::vector<int> cell;                       // the (constant) jump set
  bool smooth = false;
};

/// Probes smoothness of theta -> Pi(X, h_theta) on [theta_min, theta_max]:
/// max |f(θ-h) - 2f(θ) + f(θ+h)| per grid, re-measured on dyadically refined
/// grids. For a smooth curve the maxima decay like h², so the observed order
/// should approach 2; a kink or jump shows up as order <= 1. The jump set is
/// recomputed at every grid point and any change raises CellBoundaryCrossed.
template <class Family>
SmoothnessReport smoothness_probe(const LieAlgebra<double>& alg, const Flag<double>& flag,
                                  Family&& family, const Vector<double>& x, double theta_min,
                                  double theta_max, int base_points, int refinements,
                                  double order_threshold = 1.7) {
  if (base_points < 3) throw BadParameter("smoothness probe needs at least 3 grid points");
  if (refinements < 0) throw BadParameter("refinement count must be nonnegative");
  if (!(theta_max > theta_min)) throw BadParameter("empty probe interval");

  SmoothnessReport report;
  bool have_cell = false;
  JumpSet cell = JumpSet::empty(alg.dim());
  double value_scale = 0.0;

  for (int level = 0; level <= refinements; ++level) {
    const int n = (base_points - 1) * (1 << level) + 1;
    std::vector<Vector<double>> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double theta = theta_min + (theta_max - theta_min) * i / (n - 1);
      const Subspace<double> h = family(theta);
      const JumpSet jumps = jump_indices(flag, h);
      if (!have_cell) {
        cell = jumps;
        have_cell = true;
      } else if (!(jumps == cell)) {
        throw CellBoundaryCrossed("jump set changes from " + cell.str() + " to " + jumps.str() +
                                  " at theta=" + std::to_string(theta));
      }
      values.push_back(nonlinear_projection(alg, flag, h, x));
      value_scale = std::max(value_scale, values.back().max_abs());
    }
    double max_diff = 0.0;
    for (int i = 1; i + 1 < n; ++i)
      for (int c = 0; c < alg.dim(); ++c)
        max_diff = std::max(max_diff,
                            std::fabs(values[i - 1][c] - 2.0 * values[i][c] + values[i + 1][c]));
    report.grid_sizes.push_back(n);
    report.max_second_differences.push_back(max_diff);
  }

  report.cell = cell.indices();
  const double floor = 1e-12 * std::max(1.0, value_scale);
  bool smooth = true;
  for (std::size_t k = 0; k + 1 < report.max_second_differences.size(); ++k) {
    const double coarse = report.max_second_differences[k];
    const double fine = report.max_second_differences[k + 1];
    if (coarse <= floor && fine <= floor) {
      report.observed_orders.push_back(std::numeric_limits<double>::infinity());
      continue;
    }
    const double order = std::log2(coarse / std::max(fine, floor * 1e-3));
    report.observed_orders.push_back(order);
    if (order < order_threshold) smooth = false;
  }
  report.smooth = smooth;
  return report;
}

}  // namespace nilproj
