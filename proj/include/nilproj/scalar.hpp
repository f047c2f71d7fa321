#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

#include "nilproj/errors.hpp"

namespace nilproj {

/// Exact scalar backend: arbitrary-precision rational, always canonical
/// (positive denominator, fully reduced).
using Rational = mpq_class;

/// Per-backend policy. Every algorithm that has to decide "is this zero?"
/// goes through here, so the exact backend never sees a tolerance and the
/// float backend uses one consistent relative threshold.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;

  static bool is_negligible(const Rational& x, const Rational& /*scale*/) { return sgn(x) == 0; }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_rational(const Rational& q) { return q; }
  static std::string str(const Rational& x) { return x.get_str(); }
  static const char* backend_name() { return "exact"; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;

  /// Relative rank threshold, measured against the largest magnitude in play.
  static constexpr double rank_tolerance = 1e-10;

  static bool is_negligible(double x, double scale) {
    return scale > 0.0 ? std::fabs(x) <= rank_tolerance * scale : x == 0.0;
  }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& q) { return q.get_d(); }
  static std::string str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }
  static const char* backend_name() { return "float"; }
};

/// Parses "p" or "p/q" (optional sign, decimal digits). Throws ParseError on
/// anything else, including a zero denominator.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
      throw ParseError("bad rational literal '" + text + "'");
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

template <class S>
S parse_scalar(const std::string& text);

template <>
inline Rational parse_scalar<Rational>(const std::string& text) {
  return parse_rational(text);
}

template <>
inline double parse_scalar<double>(const std::string& text) {
  try {
    return parse_rational(text).get_d();
  } catch (const ParseError&) {
    // fall through to decimal notation
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("bad numeric literal '" + text + "'");
  }
  if (used != text.size()) throw ParseError("bad numeric literal '" + text + "'");
  return value;
}

template <class S>
std::string format_scalar(const S& x) {
  return ScalarTraits<S>::str(x);
}

}  // namespace nilproj
