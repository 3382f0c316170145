#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chipart/certificate.hpp"
#include "chipart/interval.hpp"
#include "chipart/polynomial.hpp"
#include "chipart/roots.hpp"

namespace chipart {

/// Version stamped into every JSON document as "schema".
inline constexpr int kSchemaVersion = 1;

/// Splits "5, 10, 9/4, 0.5" into exact values. Throws ParseError.
std::vector<Rational> parse_number_list(std::string_view text);

/// Raw command-line description of c s^n + b1 s^(n-1) + ... + bn.
struct PolynomialInput {
  std::string coeffs;                  // comma separated b1..bn
  std::optional<int> degree;           // must equal the count when present
  std::optional<std::string> leading;  // c; 1 when absent
};

/// Parses b1..bn exactly, checks the optional degree, and returns the monic
/// polynomial with a_i = b_i / c. Throws ParseError, LengthMismatch or
/// PreconditionUnmet (zero leading coefficient).
Polynomial<Rational> make_input_polynomial(const PolynomialInput& input);

/// JSON value for one scalar: "num/den" strings for rationals, numbers for
/// doubles.
nlohmann::json scalar_json(const Rational& x);
nlohmann::json scalar_json(double x);

/// {"degree": n, "domain": "exact"|"float", "coeffs": [...]}. Coefficients
/// are always strings: "num/den" for rationals, the shortest round-trip
/// decimal for doubles.
template <Scalar T>
nlohmann::json polynomial_json(const Polynomial<T>& p);

/// Inverse of polynomial_json; exact for rationals, bit-identical for
/// doubles. Throws ParseError on malformed documents.
template <Scalar T>
Polynomial<T> polynomial_from_json(const nlohmann::json& j);

template <Scalar T>
nlohmann::json witnesses_json(const Certificate<T>& cert);

nlohmann::json root_report_json(const RootReport& report);

/// Parsed JSON text, or a ParseError whose message carries line:column.
nlohmann::json parse_json_document(std::string_view text);

/// {"schema": 1, "degree": n, "bounds": [[lo, hi], ...]}; values are JSON
/// numbers (taken at their exact binary value) or number strings such as
/// "9/4" or "0.1" (taken exactly). Throws ParseError or the box's own
/// validation errors.
IntervalBox<Rational> box_from_json(const nlohmann::json& j);

/// Human-readable form, e.g. "s^5 + 5 s^4 + 9/4 s^2 + 1/2".
template <Scalar T>
std::string polynomial_display(const Polynomial<T>& p);

}  // namespace chipart
