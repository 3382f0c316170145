#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>
#include <type_traits>

#include "chipart/rational.hpp"

namespace chipart {

/// The two coefficient domains: exact rationals and IEEE doubles.
template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

/// Relative tolerance used wherever the float domain has to test an equality
/// the exact domain tests with ==.
inline constexpr double kFloatEqualityTolerance = 1e-12;

inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

inline std::string to_display_string(const Rational& x) { return x.to_string(); }
std::string to_display_string(double x);

/// Exact equality for rationals; |a - b| <= tol * max(|a|, |b|) for doubles.
inline bool approx_equal(const Rational& a, const Rational& b) { return a == b; }
inline bool approx_equal(double a, double b, double rel_tol = kFloatEqualityTolerance) {
  if (a == b) return true;
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace chipart
