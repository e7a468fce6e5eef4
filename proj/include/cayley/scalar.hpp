#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace cayley {

/// Exact scalar type. All identities hold exactly in this mode.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Mode-dependent behaviour of the two supported scalar types.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  /// Module-wide comparison tolerance of floating mode.
  static constexpr double tolerance = 1e-12;
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::fabs(x); }
  static bool near(double a, double b, double tol = tolerance) { return std::fabs(a - b) <= tol; }
  static bool is_zero(double a, double tol = tolerance) { return std::fabs(a) <= tol; }
  static double from_ratio(long long num, long long den) { return static_cast<double>(num) / static_cast<double>(den); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr double tolerance = 0.0;
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static bool near(const Rational& a, const Rational& b, double = 0.0) { return a == b; }
  static bool is_zero(const Rational& a, double = 0.0) { return a == 0; }
  static Rational from_ratio(long long num, long long den) { return Rational(num, den); }
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <class T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

/// Exact square root of a non-negative rational, if it is rational.
std::optional<Rational> exact_sqrt(const Rational& x);

/// Parses "p", "p/q", or a finite decimal such as "-0.25" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p") rendering.
std::string to_string(const Rational& x);

}  // namespace cayley
