#pragma once

// Shared helpers for the test suites: seeded random generators over the
// exact backend, plus independently-coded oracles that the implementation
// is checked against.

#include <random>
#include <vector>

#include "nilproj/nilproj.hpp"

namespace nilproj::testutil {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int bound = 6) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline Vector<Rational> random_vector(Rng& rng, int n, int bound = 6) {
  Vector<Rational> v(n);
  for (int i = 0; i < n; ++i) v[i] = random_rational(rng, bound);
  return v;
}

inline Matrix<Rational> random_matrix(Rng& rng, int rows, int cols, int bound = 6) {
  Matrix<Rational> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_rational(rng, bound);
  return m;
}

/// Random matrix of the exact rank r (as a product of full-rank factors).
inline Matrix<Rational> random_matrix_of_rank(Rng& rng, int rows, int cols, int r) {
  while (true) {
    Matrix<Rational> left = random_matrix(rng, rows, r);
    Matrix<Rational> right = random_matrix(rng, r, cols);
    if (rank(left) == r && rank(right) == r) return left * right;
  }
}

inline Subspace<Rational> random_subspace(Rng& rng, int ambient, int dim) {
  if (dim == 0) return Subspace<Rational>(ambient);
  while (true) {
    Matrix<Rational> basis = random_matrix(rng, ambient, dim);
    if (rank(basis) == dim) return Subspace<Rational>(basis);
  }
}

inline std::pair<Subspace<Rational>, Subspace<Rational>> random_transversal_pair(Rng& rng,
                                                                                 int ambient,
                                                                                 int dim_u0) {
  while (true) {
    Subspace<Rational> u0 = random_subspace(rng, ambient, dim_u0);
    Subspace<Rational> w = random_subspace(rng, ambient, ambient - dim_u0);
    if (is_transversal(u0, w)) return {std::move(u0), std::move(w)};
  }
}

/// Random symmetric positive definite Gram matrix: A^T A + I.
inline Matrix<Rational> random_gram(Rng& rng, int n, int bound = 3) {
  Matrix<Rational> a = random_matrix(rng, n, n, bound);
  return a.transpose() * a + Matrix<Rational>::identity(n);
}

/// Random invertible square matrix.
inline Matrix<Rational> random_invertible(Rng& rng, int n, int bound = 4) {
  while (true) {
    Matrix<Rational> m = random_matrix(rng, n, n, bound);
    if (rank(m) == n) return m;
  }
}

// ---------------------------------------------------------------------------
// Oracle: jump indices through the sum-dimension characterization
// e = {j : dim(W + F_j) > dim(W + F_{j-1})}, computed with independent
// full-rank computations per index (no incremental state).
// ---------------------------------------------------------------------------
inline JumpSet jump_indices_by_sums(const Flag<Rational>& flag, const Subspace<Rational>& w) {
  const int m = flag.dim();
  std::vector<int> jumps;
  int prev = w.dim();
  for (int j = 1; j <= m; ++j) {
    const int d = sum(w, flag.prefix(j)).dim();
    if (d > prev) jumps.push_back(j);
    prev = d;
  }
  return JumpSet(m, jumps);
}

// ---------------------------------------------------------------------------
// Oracle: literal transcription of the BCH term, tuple by tuple. Each tuple
// (p_1, q_1, ..., p_k, q_k) is expanded through the two-case word formula
//   q_k >= 1:  (ad X)^{p_1} (ad Y)^{q_1} ... (ad X)^{p_k} (ad Y)^{q_k - 1} Y
//   q_k == 0:  (ad X)^{p_1} (ad Y)^{q_1} ... (ad X)^{p_k - 1} X
// with coefficient (-1)^{k-1} / (k n p_1! q_1! ... p_k! q_k!). No sharing,
// no grouping; this is deliberately the slow direct route.
// ---------------------------------------------------------------------------
inline Vector<Rational> naive_bch_term(const LieAlgebra<Rational>& alg, int n,
                                       const Vector<Rational>& x, const Vector<Rational>& y) {
  Vector<Rational> total(alg.dim());
  std::vector<std::pair<int, int>> tuple;

  auto factorial = [](int k) {
    mpz_class f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };

  auto emit = [&]() {
    const int k = static_cast<int>(tuple.size());
    const auto [pk, qk] = tuple.back();
    Vector<Rational> v(alg.dim());
    int ops_end;  // how many (p, q) groups act as full ad blocks
    if (qk >= 1) {
      v = y;
      ops_end = k;
    } else {
      v = x;
      ops_end = k;
    }
    // apply the rightmost block with its exponent reduced by one on the
    // operand letter, then the remaining blocks right to left
    for (int b = ops_end - 1; b >= 0; --b) {
      auto [p, q] = tuple[b];
      if (b == k - 1) {
        if (qk >= 1)
          --q;  // last Y is the operand
        else
          --p;  // last X is the operand
      }
      for (int t = 0; t < q; ++t) v = alg.bracket(y, v);
      for (int t = 0; t < p; ++t) v = alg.bracket(x, v);
    }
    mpz_class denom = k * n;
    for (auto [p, q] : tuple) denom *= factorial(p) * factorial(q);
    Rational coeff(k % 2 == 1 ? 1 : -1);
    coeff /= Rational(denom);
    total.add_scaled(coeff, v);
  };

  std::function<void(int)> recurse = [&](int remaining) {
    if (remaining == 0) {
      if (!tuple.empty()) emit();
      return;
    }
    for (int p = 0; p <= remaining; ++p)
      for (int q = 0; p + q <= remaining; ++q) {
        if (p + q == 0) continue;
        tuple.emplace_back(p, q);
        recurse(remaining - p - q);
        tuple.pop_back();
      }
  };
  recurse(n);
  return total;
}

}  // namespace nilproj::testutil
