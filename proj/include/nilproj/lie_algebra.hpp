#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilproj/matrix.hpp"
#include "nilproj/subspace.hpp"

namespace nilproj {

/// Default cap on the algebra dimension; the BCH coefficient enumeration
/// grows exponentially with it. Overridable per call (CLI: NILPROJ_MAX_DIM).
inline constexpr int kDefaultMaxDimension = 16;

/// Sparse bracket table: (i, j) with i > j (1-based) maps to [X_i, X_j].
template <class S>
using BracketTable = std::map<std::pair<int, int>, Vector<S>>;

/// Finite-dimensional nilpotent Lie algebra given by structure constants
/// over a fixed basis X_1..X_m. Construction validates antisymmetry input
/// conventions, the Jacobi identity on all basis triples, and nilpotency via
/// the lower central series. Immutable afterwards.
template <class S>
class LieAlgebra {
 public:
  static LieAlgebra validate(int dim, const BracketTable<S>& table, std::string name = "",
                             int max_dim = kDefaultMaxDimension) {
    if (dim < 1) throw BadParameter("algebra dimension must be positive");
    if (dim > max_dim)
      throw BadParameter("algebra dimension " + std::to_string(dim) +
                         " exceeds the configured cap " + std::to_string(max_dim));
    for (const auto& [key, value] : table) {
      const auto [i, j] = key;
      if (i < 1 || i > dim || j < 1 || j > dim)
        throw BadIndex("bracket index out of range: (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");
      if (i <= j)
        throw BadIndex("bracket table entries must have i > j, got (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");
      if (value.size() != dim) throw BadIndex("bracket value has wrong length");
    }
    LieAlgebra alg;
    alg.dim_ = dim;
    alg.table_ = table;
    alg.name_ = std::move(name);
    alg.check_jacobi();
    alg.compute_lower_central_series();
    return alg;
  }

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  int nilpotency_class() const { return nilpotency_class_; }
  const BracketTable<S>& table() const { return table_; }

  /// [X_i, X_j] for 1-based basis indices, any order.
  Vector<S> bracket_basis(int i, int j) const {
    if (i < 1 || i > dim_ || j < 1 || j > dim_) throw BadIndex("basis index out of range");
    if (i == j) return Vector<S>(dim_);
    const bool flip = i < j;
    auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == table_.end()) return Vector<S>(dim_);
    return flip ? -it->second : it->second;
  }

  /// Bilinear extension of the structure table.
  Vector<S> bracket(const Vector<S>& x, const Vector<S>& y) const {
    check_dim(x);
    check_dim(y);
    Vector<S> out(dim_);
    for (const auto& [key, value] : table_) {
      const auto [i, j] = key;
      const S c = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
      if (!(c == S(0))) out.add_scaled(c, value);
    }
    return out;
  }

  /// Matrix of ad X = [X, .]; column j is [X, X_j].
  Matrix<S> ad(const Vector<S>& x) const {
    check_dim(x);
    Matrix<S> m(dim_, dim_);
    for (const auto& [key, value] : table_) {
      const auto [i, j] = key;
      for (int r = 0; r < dim_; ++r) {
        if (!(value[r] == S(0))) {
          m(r, j - 1) += x[i - 1] * value[r];
          m(r, i - 1) -= x[j - 1] * value[r];
        }
      }
    }
    return m;
  }

  /// Lower central series g^(1) = g, g^(k+1) = [g, g^(k)], ending with {0}.
  const std::vector<Subspace<S>>& lower_central_series() const { return series_; }

  Subspace<S> derived_algebra() const { return series_.size() > 1 ? series_[1] : Subspace<S>(dim_); }

  /// {X : [X, Y] = 0 for all Y}, the joint kernel of all ad X_j.
  Subspace<S> center() const {
    Matrix<S> stacked(dim_ * dim_, dim_);
    for (int j = 1; j <= dim_; ++j) {
      // row block j: X -> [X, X_j], i.e. column i is [X_i, X_j]
      for (int i = 1; i <= dim_; ++i) {
        Vector<S> v = bracket_basis(i, j);
        for (int r = 0; r < dim_; ++r) stacked((j - 1) * dim_ + r, i - 1) = v[r];
      }
    }
    return Subspace<S>::span(null_space(stacked));
  }

 private:
  LieAlgebra() = default;

  void check_dim(const Vector<S>& v) const {
    if (v.size() != dim_) throw DimensionMismatch("vector does not match algebra dimension");
  }

  void check_jacobi() const {
    for (int i = 1; i <= dim_; ++i)
      for (int j = i + 1; j <= dim_; ++j)
        for (int k = j + 1; k <= dim_; ++k) {
          const Vector<S> t1 = bracket(bracket_basis(i, j), Vector<S>::unit(dim_, k - 1));
          const Vector<S> t2 = bracket(bracket_basis(j, k), Vector<S>::unit(dim_, i - 1));
          const Vector<S> t3 = bracket(bracket_basis(k, i), Vector<S>::unit(dim_, j - 1));
          const Vector<S> sum = t1 + t2 + t3;
          const S scale = std::max({t1.max_abs(), t2.max_abs(), t3.max_abs()});
          for (int r = 0; r < dim_; ++r)
            if (!ScalarTraits<S>::is_negligible(sum[r], scale)) throw JacobiViolation(i, j, k);
        }
  }

  void compute_lower_central_series() {
    series_.clear();
    series_.push_back(Subspace<S>::full(dim_));
    while (series_.back().dim() > 0) {
      const Subspace<S>& prev = series_.back();
      std::vector<Vector<S>> gens;
      for (int i = 1; i <= dim_; ++i)
        for (int c = 0; c < prev.canonical().cols(); ++c)
          gens.push_back(bracket(Vector<S>::unit(dim_, i - 1), prev.canonical().col(c)));
      Subspace<S> next = Subspace<S>::span_of(dim_, gens);
      if (next.dim() == prev.dim()) {
        report_not_nilpotent(next.dim());
        return;  // unreachable
      }
      series_.push_back(std::move(next));
    }
    nilpotency_class_ = static_cast<int>(series_.size()) - 1;
  }

  [[noreturn]] void report_not_nilpotent(int stable_dim) const {
    // Try to exhibit a single basis vector with non-nilpotent ad.
    for (int i = 1; i <= dim_; ++i) {
      const Matrix<S> a = ad(Vector<S>::unit(dim_, i - 1));
      Matrix<S> power = Matrix<S>::identity(dim_);
      S scale(1);
      for (int p = 0; p < dim_; ++p) {
        power = a * power;
        scale = std::max(scale, power.max_abs());
      }
      bool nonzero = false;
      for (int r = 0; r < dim_ && !nonzero; ++r)
        for (int c = 0; c < dim_ && !nonzero; ++c)
          if (!ScalarTraits<S>::is_negligible(power(r, c), scale)) nonzero = true;
      if (nonzero) throw NotNilpotent(i, dim_);
    }
    throw NotNilpotent("algebra is not nilpotent: lower central series stabilizes at dimension " +
                       std::to_string(stable_dim));
  }

  int dim_ = 0;
  BracketTable<S> table_;
  std::string name_;
  int nilpotency_class_ = 1;
  std::vector<Subspace<S>> series_;
};

/// True iff all brackets of basis pairs of W land back in W.
template <class S>
bool is_subalgebra(const LieAlgebra<S>& alg, const Subspace<S>& w) {
  if (w.ambient_dim() != alg.dim()) throw DimensionMismatch("subspace does not match algebra");
  const Matrix<S>& b = w.canonical();
  for (int i = 0; i < b.cols(); ++i)
    for (int j = i + 1; j < b.cols(); ++j)
      if (!w.contains(alg.bracket(b.col(i), b.col(j)))) return false;
  return true;
}

/// Span of all brackets of basis pairs of W (the derived subalgebra of W
/// when W is a subalgebra).
template <class S>
Subspace<S> derived_subspace(const LieAlgebra<S>& alg, const Subspace<S>& w) {
  if (w.ambient_dim() != alg.dim()) throw DimensionMismatch("subspace does not match algebra");
  const Matrix<S>& b = w.canonical();
  std::vector<Vector<S>> gens;
  for (int i = 0; i < b.cols(); ++i)
    for (int j = i + 1; j < b.cols(); ++j) gens.push_back(alg.bracket(b.col(i), b.col(j)));
  return Subspace<S>::span_of(alg.dim(), gens);
}

/// Jordan-Hölder test for an ordered basis (columns of `basis`):
/// [g, g_k] ⊆ g_{k-1} for every k, where g_k spans the first k columns.
/// Equivalently [g, X_k] ⊆ g_{k-1} for each k, which is what gets checked.
template <class S>
bool is_jordan_holder_basis(const LieAlgebra<S>& alg, const Matrix<S>& basis) {
  const int m = alg.dim();
  if (basis.rows() != m || basis.cols() != m)
    throw DimensionMismatch("basis must be square of the algebra dimension");
  if (rank(basis) != m) throw SingularBasis("basis vectors are linearly dependent");
  IncrementalSpan<S> prefix(m);
  for (int k = 0; k < m; ++k) {
    const Vector<S> xk = basis.col(k);
    for (int i = 1; i <= m; ++i) {
      if (!prefix.contains(alg.bracket(Vector<S>::unit(m, i - 1), xk))) return false;
    }
    prefix.add(xk);
  }
  return true;
}

template <class To, class From>
LieAlgebra<To> convert_algebra(const LieAlgebra<From>& alg) {
  BracketTable<To> table;
  for (const auto& [key, value] : alg.table()) {
    Vector<To> v(alg.dim());
    for (int r = 0; r < alg.dim(); ++r) v[r] = ScalarTraits<To>::from_rational(value[r]);
    table.emplace(key, std::move(v));
  }
  return LieAlgebra<To>::validate(alg.dim(), table, alg.name());
}

}  // namespace nilproj
