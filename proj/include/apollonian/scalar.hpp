#pragma once

// Numeric field used by every geometric routine. Exact mode runs on GMP
// rationals; float mode on double. Code is templated on the field and
// explicitly instantiated for both in the .cpp files.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace apollonian {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class NumericMode { exact, floating };

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
inline constexpr NumericMode mode_of_v = is_exact_v<T> ? NumericMode::exact : NumericMode::floating;

inline constexpr double default_tolerance = 1e-9;

/// Comparison policy. Rationals compare exactly and ignore eps; doubles use a
/// relative test |a-b| <= eps * max(1, |a|, |b|, scale). All float-mode
/// predicates in the library go through here.
template <class T>
struct Tolerance {
  double eps = default_tolerance;

  bool equal(const T& a, const T& b, double scale = 0.0) const {
    if constexpr (is_exact_v<T>) {
      return a == b;
    } else {
      const double bound = std::max({1.0, std::abs(a), std::abs(b), std::abs(scale)});
      return std::abs(a - b) <= eps * bound;
    }
  }

  bool is_zero(const T& a, double scale = 0.0) const { return equal(a, T(0), scale); }
};

template <class T>
double to_double(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x.template convert_to<double>();
  } else {
    return x;
  }
}

template <class T>
int sign(const T& x) {
  return (x > T(0)) - (x < T(0));
}

template <class T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : x;
}

/// True when x is an integer (floats: exactly integral).
bool is_integer(const Rational& x);
bool is_integer(double x);

/// Square root that stays in the field. Rationals: the exact root when both
/// numerator and denominator are perfect squares, else nullopt. Doubles: the
/// rounded root. Negative input yields nullopt in both modes.
std::optional<Rational> exact_sqrt(const Rational& x);
std::optional<double> exact_sqrt(double x);

/// "p/q", "p", or a finite decimal ("0.25", "-1e-3" in float mode).
template <class T>
T parse_scalar(std::string_view text);

/// Exact: "p/q" or "p" in lowest terms. Float: shortest round-trip decimal.
std::string format_scalar(const Rational& x);
std::string format_scalar(double x);

}  // namespace apollonian
