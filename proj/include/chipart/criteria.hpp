#pragma once

#include <optional>
#include <utility>

#include "chipart/certificate.hpp"
#include "chipart/polynomial.hpp"

namespace chipart {

/// Lienard-Chipart with even minors: stable iff every a_i > 0 and
/// Delta_2, Delta_4, ... > 0. Delta_4 comes from the factored formula.
template <Scalar T>
StabilityVerdict<T> lienard_chipart(const Polynomial<T>& p);

/// Same criterion stated with the odd minors Delta_1, Delta_3, ...
template <Scalar T>
StabilityVerdict<T> lienard_chipart_odd(const Polynomial<T>& p);

/// Unsimplified Hurwitz test: every Delta_1..Delta_n > 0.
template <Scalar T>
StabilityVerdict<T> routh_hurwitz_full(const Polynomial<T>& p);

// Instability certificates for degree >= 5. Each throws DegreeTooSmall below
// degree 5 and returns nullopt when its condition does not hold. Let
// A = a5 - a1 a4 and B = a7 - a1 a6.

/// A >= 0 and B >= 0.
template <Scalar T>
std::optional<Certificate<T>> cor1_certificate(const Polynomial<T>& p);

/// a2 == 2, a4 == 1 and B >= 0. In floats the two equalities are matched to
/// a relative tolerance of 1e-12.
template <Scalar T>
std::optional<Certificate<T>> cor2_certificate(const Polynomial<T>& p);

/// a2^2 - 4 a4 <= 0 and B >= 0.
template <Scalar T>
std::optional<Certificate<T>> cor3_certificate(const Polynomial<T>& p);

/// gamma = Delta_2 / A and Gamma = -a4 gamma^2 - a2 gamma - 1, the quadratic
/// whose sign decides Delta_4 when B = 0 (Delta_4 = Gamma A^2 - B Delta_2).
template <Scalar T>
struct GammaReport {
  T gamma{0};
  T Gamma{0};
  T discriminant{0};  // a2^2 - 4 a4
  bool defined = false;  // false when A == 0
  /// Open interval of gamma on which Gamma > 0; present only when a4 > 0
  /// and the discriminant is positive. Approximate (needs a square root).
  std::optional<std::pair<double, double>> positive_window;
};

/// Throws DegreeTooSmall below degree 4.
template <Scalar T>
GammaReport<T> gamma_report(const Polynomial<T>& p);

/// Degree-5 necessary condition a2^2 - 4 a4 > 0, given positive coefficients
/// and Delta_2 > 0. Returns a Cor4Violated certificate when it fails.
/// Throws PreconditionUnmet if the hypotheses do not hold.
template <Scalar T>
std::optional<Certificate<T>> cor4_necessary_violated(const Polynomial<T>& p);

/// Degree-5 sufficient condition: gamma sits exactly at the vertex
/// -a2 / (2 a4) of Gamma. Hypotheses: positive coefficients, Delta_2 > 0,
/// a2^2 - 4 a4 > 0 (PreconditionUnmet otherwise). In floats the vertex match
/// uses relative tolerance 1e-12 and Delta_4 > 0 is re-checked before a
/// certificate is issued.
template <Scalar T>
std::optional<Certificate<T>> cor5_sufficient(const Polynomial<T>& p);

struct Cor5Forms {
  bool vertex = false;         // Delta_2 / A == -a2 / (2 a4)
  bool delta2_form = false;    // Delta_2 == a3 - a2 a5 / a4
  bool alpha1_form = false;    // a1 == 2 a3 / a2 - a5 / a4

  friend bool operator==(const Cor5Forms&, const Cor5Forms&) = default;
};

/// The three equivalent statements of the degree-5 sufficient condition,
/// evaluated exactly. Needs degree 5, a2 > 0 and a4 > 0.
Cor5Forms cor5_equivalents(const Polynomial<Rational>& p);

/// Cheapest-first pipeline: coefficient signs, then the degree >= 5
/// instability certificates, the degree-5 necessary and sufficient
/// conditions, and finally the full even-minor test. The status always
/// equals lienard_chipart(p).status; the certificate names the deciding
/// stage. Degrees below 5 skip straight from the sign check to the minors.
template <Scalar T>
StabilityVerdict<T> analyze(const Polynomial<T>& p);

}  // namespace chipart
