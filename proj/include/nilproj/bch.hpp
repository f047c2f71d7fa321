#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "nilproj/lie_algebra.hpp"

namespace nilproj {

namespace detail {

/// Coefficients of the degree-n BCH term, grouped by bracket word.
///
/// Every tuple (p_1, q_1, ..., p_k, q_k) of nonnegative integers with
/// p_i + q_i >= 1 and total n contributes the right-nested bracket word
/// X^{p_1} Y^{q_1} ... X^{p_k} Y^{q_k} (the last letter is the operand, the
/// preceding ones act as ad operators) with coefficient
/// (-1)^{k-1} / (k * n * p_1! q_1! ... p_k! q_k!). Tuples sharing a word are
/// summed here once, so each word's bracket is evaluated a single time.
///
/// Words of length n are indexed by bit patterns: bit (n - position) is 1
/// for Y, 0 for X, with position 1 being the leftmost letter.
inline const std::vector<Rational>& bch_word_coefficients(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Rational>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Rational> coeffs(static_cast<std::size_t>(1) << n, Rational(0));
  std::vector<mpz_class> factorial(static_cast<std::size_t>(n) + 1);
  factorial[0] = 1;
  for (int i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;

  // Depth-first enumeration of the tuples; `word` accumulates the letters
  // left to right, `denom` the product of factorials.
  struct Enumerator {
    int n;
    const std::vector<mpz_class>& factorial;
    std::vector<Rational>& coeffs;
    void run(int remaining, int k, std::uint32_t word, const mpz_class& denom) {
      if (remaining == 0) {
        Rational c(k % 2 == 1 ? 1 : -1);
        c /= Rational(denom * k * n);
        coeffs[word] += c;
        return;
      }
      for (int p = 0; p <= remaining; ++p) {
        for (int q = 0; q + p <= remaining; ++q) {
          if (p + q == 0) continue;
          // append p letters X (bit 0) then q letters Y (bit 1)
          std::uint32_t extended = (word << (p + q)) | ((1u << q) - 1u);
          run(remaining - p - q, k + 1, extended, denom * factorial[p] * factorial[q]);
        }
      }
    }
  };
  Enumerator{n, factorial, coeffs}.run(n, 0, 0u, mpz_class(1));
  return cache.emplace(n, std::move(coeffs)).first->second;
}

/// Walks all words of length n from the last letter backwards, reusing the
/// partial bracket for shared suffixes and pruning branches whose bracket
/// already vanished (in a nilpotent algebra that is most of them).
template <class S>
void accumulate_bch_words(const LieAlgebra<S>& alg, const std::vector<Rational>& coeffs, int n,
                          const Vector<S>& x, const Vector<S>& y, int suffix_len,
                          std::uint32_t suffix_bits, const Vector<S>& suffix_value,
                          Vector<S>& out) {
  if (suffix_value.is_zero()) return;
  if (suffix_len == n) {
    const Rational& c = coeffs[suffix_bits];
    if (!(sgn(c) == 0)) out.add_scaled(ScalarTraits<S>::from_rational(c), suffix_value);
    return;
  }
  accumulate_bch_words(alg, coeffs, n, x, y, suffix_len + 1, suffix_bits,
                       alg.bracket(x, suffix_value), out);
  accumulate_bch_words(alg, coeffs, n, x, y, suffix_len + 1,
                       suffix_bits | (1u << suffix_len), alg.bracket(y, suffix_value), out);
}

}  // namespace detail

/// The degree-n term C_n(X, Y) of the BCH series, evaluated literally from
/// the tuple expansion (no vanishing assumptions).
template <class S>
Vector<S> bch_term(const LieAlgebra<S>& alg, int n, const Vector<S>& x, const Vector<S>& y) {
  if (n < 1) throw BadParameter("BCH term index must be >= 1");
  if (x.size() != alg.dim() || y.size() != alg.dim())
    throw DimensionMismatch("vector does not match algebra dimension");
  const std::vector<Rational>& coeffs = detail::bch_word_coefficients(n);
  Vector<S> out(alg.dim());
  detail::accumulate_bch_words(alg, coeffs, n, x, y, 1, 0u, x, out);
  detail::accumulate_bch_words(alg, coeffs, n, x, y, 1, 1u, y, out);
  return out;
}

/// Baker-Campbell-Hausdorff product X · Y = sum of C_n(X, Y). The series is
/// truncated at min(dim - 1, nilpotency class) — but never below 1 — since
/// every n-letter bracket word lies in the n-th lower central series term.
template <class S>
Vector<S> bch_multiply(const LieAlgebra<S>& alg, const Vector<S>& x, const Vector<S>& y) {
  if (x.size() != alg.dim() || y.size() != alg.dim())
    throw DimensionMismatch("vector does not match algebra dimension");
  const int bound = std::max(1, std::min(alg.dim() - 1, alg.nilpotency_class()));
  Vector<S> out(alg.dim());
  for (int n = 1; n <= bound; ++n) out += bch_term(alg, n, x, y);
  return out;
}

/// Group inverse: X · (-X) = 0 by the scaling axiom (tX)·(sX) = (t+s)X.
template <class S>
Vector<S> bch_inverse(const Vector<S>& x) {
  return -x;
}

/// Central finite-difference approximation of
///   [X, Y] = d²/dtds |_{t=s=0} (tX)·(sY)·(-tX),
/// used as a numerical consistency probe against the structure table.
/// Float backend only; the error is O(h²).
inline Vector<double> derived_bracket_probe(const LieAlgebra<double>& alg,
                                            const Vector<double>& x, const Vector<double>& y,
                                            double h) {
  if (!(h > 0.0)) throw BadParameter("finite-difference step must be positive");
  auto conjugate = [&](double t, double s) {
    Vector<double> tx = x;
    tx *= t;
    Vector<double> sy = y;
    sy *= s;
    return bch_multiply(alg, bch_multiply(alg, tx, sy), Vector<double>(-tx));
  };
  Vector<double> d = conjugate(h, h);
  d -= conjugate(h, -h);
  d -= conjugate(-h, h);
  d += conjugate(-h, -h);
  d *= 1.0 / (4.0 * h * h);
  return d;
}

}  // namespace nilproj
