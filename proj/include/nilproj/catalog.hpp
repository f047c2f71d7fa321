#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilproj/factorize.hpp"

namespace nilproj {

/// Exact point on the unit circle: c² + s² = 1 with rational entries.
struct CirclePoint {
  Rational c;
  Rational s;
};

/// Rational circle point from the tan-half-angle parameter u:
///   (c, s) = ((1 - u²)/(1 + u²), 2u/(1 + u²)).
/// u = 0 gives the point z = 1.
inline CirclePoint circle_point(const Rational& u) {
  const Rational denom = 1 + u * u;
  return CirclePoint{(1 - u * u) / denom, (2 * u) / denom};
}

/// A built-in algebra together with its defining flag and the named
/// subalgebras the examples assert facts about.
template <class S>
struct CatalogEntry {
  LieAlgebra<S> algebra;
  Flag<S> flag;
  std::vector<std::pair<std::string, Subspace<S>>> named_subalgebras;
};

/// Abelian algebra of dimension n: zero bracket, so the group law is plain
/// vector addition.
inline CatalogEntry<Rational> abelian(int n) {
  if (n < 1) throw BadParameter("abelian algebra needs dimension >= 1");
  CatalogEntry<Rational> entry{
      LieAlgebra<Rational>::validate(n, {}, "abelian" + std::to_string(n)),
      Flag<Rational>::standard(n),
      {}};
  return entry;
}

/// The m-dimensional threadlike algebra: [X_m, X_j] = X_{j-1} for
/// j = 2..m-1, all other basis brackets zero. m = 3 is the Heisenberg
/// algebra. Maximal nilpotency class m-1; center R X_1; derived algebra
/// F_{m-2}.
inline CatalogEntry<Rational> threadlike(int m) {
  if (m < 3) throw BadParameter("threadlike algebra needs dimension >= 3");
  BracketTable<Rational> table;
  for (int j = 2; j <= m - 1; ++j) table.emplace(std::make_pair(m, j), Vector<Rational>::unit(m, j - 2));
  CatalogEntry<Rational> entry{
      LieAlgebra<Rational>::validate(m, table, "threadlike" + std::to_string(m)),
      Flag<Rational>::standard(m),
      {}};
  for (int k = 1; k < m; ++k)
    entry.named_subalgebras.emplace_back("F" + std::to_string(k), entry.flag.prefix(k));
  return entry;
}

/// The five-dimensional algebra with [X_5,X_4] = X_3, [X_5,X_3] = X_2,
/// [X_4,X_3] = X_1. Center F_2, derived algebra F_3, nilpotency class 3.
inline CatalogEntry<Rational> five_dim_example() {
  BracketTable<Rational> table;
  table.emplace(std::make_pair(5, 4), Vector<Rational>::unit(5, 2));
  table.emplace(std::make_pair(5, 3), Vector<Rational>::unit(5, 1));
  table.emplace(std::make_pair(4, 3), Vector<Rational>::unit(5, 0));
  CatalogEntry<Rational> entry{LieAlgebra<Rational>::validate(5, table, "fivedim"),
                               Flag<Rational>::standard(5),
                               {}};
  for (int k = 1; k < 5; ++k)
    entry.named_subalgebras.emplace_back("F" + std::to_string(k), entry.flag.prefix(k));
  entry.named_subalgebras.emplace_back(
      "span{X1,X2,X4}",
      Subspace<Rational>::span_of(5, {Vector<Rational>::unit(5, 0), Vector<Rational>::unit(5, 1),
                                      Vector<Rational>::unit(5, 3)}));
  return entry;
}

/// The codimension-1 subalgebra family of the rank-two examples:
///   h_z = span(F_{m-2} ∪ {c X_{m-1} + s X_m}),   z = (c, s) on the circle.
/// Requires dim(g/[g,g]) = 2 with [g,g] = F_{m-2}; every member really is a
/// subalgebra, which is still verified rather than assumed.
template <class S>
Subspace<S> hz_subalgebra(const LieAlgebra<S>& alg, const Flag<S>& flag, const S& c, const S& s) {
  const int m = alg.dim();
  if (m < 2) throw BadParameter("h_z family needs dimension >= 2");
  const Subspace<S> derived = alg.derived_algebra();
  if (!(derived == flag.prefix(m - 2)))
    throw BadParameter("h_z family needs [g,g] = F_{m-2}");
  Vector<S> tilt(m);
  tilt.add_scaled(c, flag.vector(m - 1));
  tilt.add_scaled(s, flag.vector(m));
  Matrix<S> basis = Matrix<S>::hcat(flag.prefix(m - 2).canonical(),
                                    Matrix<S>::from_columns(m, {tilt}));
  Subspace<S> h{std::move(basis)};
  if (!is_subalgebra(alg, h)) throw BadParameter("h_z member is not a subalgebra");
  return h;
}

inline Subspace<Rational> hz_subalgebra(const CatalogEntry<Rational>& entry, const CirclePoint& z) {
  return hz_subalgebra(entry.algebra, entry.flag, z.c, z.s);
}

inline Subspace<double> hz_subalgebra(const LieAlgebra<double>& alg, const Flag<double>& flag,
                                      double theta) {
  return hz_subalgebra(alg, flag, std::cos(theta), std::sin(theta));
}

/// Catalog lookup by name ("abelian", "threadlike", "heisenberg", "fivedim").
inline CatalogEntry<Rational> catalog_entry(const std::string& name, int m) {
  if (name == "abelian") return abelian(m);
  if (name == "threadlike") return threadlike(m);
  if (name == "heisenberg") return threadlike(3);
  if (name == "fivedim" || name == "five_dim") return five_dim_example();
  throw BadParameter("unknown catalog entry '" + name + "'");
}

}  // namespace nilproj
