#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "nilproj/matrix.hpp"
#include "nilproj/subspace.hpp"

namespace nilproj {

/// Sorted subset of {1, ..., n}: the label of a Schubert cell.
class JumpSet {
 public:
  JumpSet(int n, std::vector<int> indices) : n_(n), idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    for (std::size_t k = 0; k < idx_.size(); ++k) {
      if (idx_[k] < 1 || idx_[k] > n_) throw BadIndex("jump index out of range");
      if (k > 0 && idx_[k] == idx_[k - 1]) throw BadIndex("duplicate jump index");
    }
  }
  static JumpSet empty(int n) { return JumpSet(n, {}); }
  static JumpSet all(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) v[j - 1] = j;
    return JumpSet(n, std::move(v));
  }

  int ambient_size() const { return n_; }
  int size() const { return static_cast<int>(idx_.size()); }
  const std::vector<int>& indices() const { return idx_; }
  bool contains(int j) const { return std::binary_search(idx_.begin(), idx_.end(), j); }

  JumpSet complement() const {
    std::vector<int> c;
    for (int j = 1; j <= n_; ++j)
      if (!contains(j)) c.push_back(j);
    return JumpSet(n_, std::move(c));
  }

  friend bool operator==(const JumpSet& a, const JumpSet& b) {
    return a.n_ == b.n_ && a.idx_ == b.idx_;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < idx_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(idx_[k]);
    }
    return s + "}";
  }

 private:
  int n_;
  std::vector<int> idx_;
};

/// Complete flag F_0 ⊂ F_1 ⊂ ... ⊂ F_m realized by an ordered basis
/// X_1..X_m (matrix columns); F_k spans the first k of them.
template <class S>
class Flag {
 public:
  explicit Flag(Matrix<S> basis) : basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols()) throw DimensionMismatch("flag basis must be square");
    const int m = basis_.rows();
    prefixes_.reserve(static_cast<std::size_t>(m) + 1);
    prefixes_.emplace_back(Subspace<S>(m));
    for (int k = 1; k <= m; ++k) prefixes_.emplace_back(Subspace<S>(basis_.column_range(0, k)));
    // the Subspace constructor has already rejected dependent columns
  }

  static Flag standard(int m) { return Flag(Matrix<S>::identity(m)); }

  int dim() const { return basis_.rows(); }
  const Matrix<S>& basis_matrix() const { return basis_; }

  /// X_j, 1-based.
  Vector<S> vector(int j) const {
    if (j < 1 || j > dim()) throw BadIndex("flag index out of range");
    return basis_.col(j - 1);
  }

  /// F_k for k = 0..m.
  const Subspace<S>& prefix(int k) const {
    if (k < 0 || k > dim()) throw BadIndex("flag prefix index out of range");
    return prefixes_[static_cast<std::size_t>(k)];
  }

  /// U_e = span{X_j : j in e}.
  Subspace<S> coordinate_subspace(const JumpSet& e) const {
    if (e.ambient_size() != dim()) throw DimensionMismatch("jump set does not match flag");
    std::vector<int> cols;
    for (int j : e.indices()) cols.push_back(j - 1);
    return Subspace<S>(basis_.select_columns(cols));
  }

 private:
  Matrix<S> basis_;
  std::vector<Subspace<S>> prefixes_;
};

template <class To, class From>
Flag<To> convert_flag(const Flag<From>& f) {
  Matrix<To> basis(f.dim(), f.dim());
  for (int i = 0; i < f.dim(); ++i)
    for (int j = 0; j < f.dim(); ++j)
      basis(i, j) = ScalarTraits<To>::from_rational(f.basis_matrix()(i, j));
  return Flag<To>(std::move(basis));
}

}  // namespace nilproj
