#include "chipart/criteria.hpp"

#include <cmath>
#include <string>

#include "chipart/hurwitz.hpp"

namespace chipart {

namespace {

std::string coeff_name(int k) { return "a" + std::to_string(k); }
std::string minor_name(int i) { return "Delta" + std::to_string(i); }

constexpr const char* kA = "a5-a1*a4";
constexpr const char* kB = "a7-a1*a6";
constexpr const char* kDisc = "a2^2-4*a4";

template <Scalar T>
T a_term(const Polynomial<T>& p) {
  return p.coeff(5) - p.coeff(1) * p.coeff(4);
}

template <Scalar T>
T b_term(const Polynomial<T>& p) {
  return p.coeff(7) - p.coeff(1) * p.coeff(6);
}

template <Scalar T>
T discriminant(const Polynomial<T>& p) {
  return p.coeff(2) * p.coeff(2) - T(4) * p.coeff(4);
}

void require_corollary_degree(int degree) {
  if (degree < 5) {
    throw Error(ErrorKind::DegreeTooSmall,
                "corollary certificates need degree >= 5, got " + std::to_string(degree));
  }
}

/// Index of the first a_k <= 0, or 0 if all are positive.
template <Scalar T>
int first_nonpositive(const Polynomial<T>& p) {
  for (int k = 1; k <= p.degree(); ++k) {
    if (!(p.coeff(k) > T(0))) return k;
  }
  return 0;
}

template <Scalar T>
Certificate<T> nonpositive_certificate(const Polynomial<T>& p, int k) {
  Certificate<T> cert{CertificateKind::CoefficientNonPositive, {}};
  cert.add(coeff_name(k), p.coeff(k), Relation::NonPositive);
  return cert;
}

template <Scalar T>
void add_positive_coeffs(Certificate<T>& cert, const Polynomial<T>& p) {
  for (int k = 1; k <= p.degree(); ++k) cert.add(coeff_name(k), p.coeff(k), Relation::Positive);
}

/// Delta_i as the even-minor criterion computes it.
template <Scalar T>
T even_route_minor(const Polynomial<T>& p, int i) {
  if (i == 2) return delta2(p);
  if (i == 4) return delta4_factored(p);
  return hurwitz_minor_det(p, i);
}

/// Shared body of the three minor-based criteria: positivity (skipped for
/// the full test), then the listed minors in order.
template <Scalar T, class MinorFn>
StabilityVerdict<T> minor_test(const Polynomial<T>& p, CertificateKind kind, int first_index,
                               int step, bool check_coeffs, MinorFn minor) {
  Certificate<T> cert{kind, {}};
  if (check_coeffs) {
    if (const int k = first_nonpositive(p); k != 0) {
      return {Status::NotStable, nonpositive_certificate(p, k), {}};
    }
    add_positive_coeffs(cert, p);
  }
  for (int i = first_index; i <= p.degree(); i += step) {
    const T value = minor(p, i);
    if (!(value > T(0))) {
      cert.add(minor_name(i), value, Relation::NonPositive);
      return {Status::NotStable, std::move(cert), {}};
    }
    cert.add(minor_name(i), value, Relation::Positive);
  }
  return {Status::Stable, std::move(cert), {}};
}

}  // namespace

template <Scalar T>
StabilityVerdict<T> lienard_chipart(const Polynomial<T>& p) {
  return minor_test(p, CertificateKind::LienardChipartEven, 2, 2, true,
                    [](const Polynomial<T>& q, int i) { return even_route_minor(q, i); });
}

template <Scalar T>
StabilityVerdict<T> lienard_chipart_odd(const Polynomial<T>& p) {
  return minor_test(p, CertificateKind::LienardChipartOdd, 1, 2, true,
                    [](const Polynomial<T>& q, int i) { return hurwitz_minor_det(q, i); });
}

template <Scalar T>
StabilityVerdict<T> routh_hurwitz_full(const Polynomial<T>& p) {
  auto verdict = minor_test(p, CertificateKind::RouthHurwitzFull, 1, 1, false,
                            [](const Polynomial<T>& q, int i) { return hurwitz_minor_det(q, i); });
  // Coefficient signs are recorded alongside, but do not decide.
  for (int k = 1; k <= p.degree(); ++k) {
    verdict.certificate.add(coeff_name(k), p.coeff(k),
                            p.coeff(k) > T(0) ? Relation::Positive : Relation::NonPositive);
  }
  return verdict;
}

template <Scalar T>
std::optional<Certificate<T>> cor1_certificate(const Polynomial<T>& p) {
  require_corollary_degree(p.degree());
  const T A = a_term(p);
  const T B = b_term(p);
  if (!(A >= T(0) && B >= T(0))) return std::nullopt;
  Certificate<T> cert{CertificateKind::Cor1, {}};
  cert.add(kA, A, Relation::NonNegative);
  cert.add(kB, B, Relation::NonNegative);
  return cert;
}

template <Scalar T>
std::optional<Certificate<T>> cor2_certificate(const Polynomial<T>& p) {
  require_corollary_degree(p.degree());
  const T a2 = p.coeff(2);
  const T a4 = p.coeff(4);
  if (!approx_equal(a2, T(2)) || !approx_equal(a4, T(1))) return std::nullopt;
  const T B = b_term(p);
  if (!(B >= T(0))) return std::nullopt;

  double tol2 = 0.0, tol4 = 0.0;
  if constexpr (!is_exact_v<T>) {
    tol2 = kFloatEqualityTolerance * std::max(std::abs(a2), 2.0);
    tol4 = kFloatEqualityTolerance * std::max(std::abs(a4), 1.0);
  }
  Certificate<T> cert{CertificateKind::Cor2, {}};
  cert.add("a2-2", a2 - T(2), Relation::Zero, tol2);
  cert.add("a4-1", a4 - T(1), Relation::Zero, tol4);
  cert.add(kB, B, Relation::NonNegative);
  return cert;
}

template <Scalar T>
std::optional<Certificate<T>> cor3_certificate(const Polynomial<T>& p) {
  require_corollary_degree(p.degree());
  const T disc = discriminant(p);
  const T B = b_term(p);
  if (!(disc <= T(0) && B >= T(0))) return std::nullopt;
  Certificate<T> cert{CertificateKind::Cor3, {}};
  cert.add(kDisc, disc, Relation::NonPositive);
  cert.add(kB, B, Relation::NonNegative);
  return cert;
}

template <Scalar T>
GammaReport<T> gamma_report(const Polynomial<T>& p) {
  if (p.degree() < 4) {
    throw Error(ErrorKind::DegreeTooSmall,
                "gamma report needs degree >= 4, got " + std::to_string(p.degree()));
  }
  GammaReport<T> report;
  const T a2 = p.coeff(2);
  const T a4 = p.coeff(4);
  report.discriminant = discriminant(p);
  const T A = a_term(p);
  if (!(A == T(0))) {
    report.defined = true;
    report.gamma = delta2(p) / A;
    report.Gamma = -a4 * report.gamma * report.gamma - a2 * report.gamma - T(1);
  }
  if (a4 > T(0) && report.discriminant > T(0)) {
    const double root = std::sqrt(to_double(report.discriminant));
    const double b = to_double(a2);
    const double two_a = 2.0 * to_double(a4);
    report.positive_window = std::make_pair((-b - root) / two_a, (-b + root) / two_a);
  }
  return report;
}

template <Scalar T>
std::optional<Certificate<T>> cor4_necessary_violated(const Polynomial<T>& p) {
  if (p.degree() != 5) {
    throw Error(ErrorKind::PreconditionUnmet, "necessary condition is stated for degree 5 only");
  }
  if (first_nonpositive(p) != 0) {
    throw Error(ErrorKind::PreconditionUnmet, "necessary condition needs all a_i > 0");
  }
  const T d2 = delta2(p);
  if (!(d2 > T(0))) {
    throw Error(ErrorKind::PreconditionUnmet, "necessary condition needs Delta2 > 0");
  }
  const T disc = discriminant(p);
  if (disc > T(0)) return std::nullopt;
  Certificate<T> cert{CertificateKind::Cor4Violated, {}};
  add_positive_coeffs(cert, p);
  cert.add(minor_name(2), d2, Relation::Positive);
  cert.add(kDisc, disc, Relation::NonPositive);
  return cert;
}

template <Scalar T>
std::optional<Certificate<T>> cor5_sufficient(const Polynomial<T>& p) {
  if (p.degree() != 5) {
    throw Error(ErrorKind::PreconditionUnmet, "sufficient condition is stated for degree 5 only");
  }
  if (first_nonpositive(p) != 0) {
    throw Error(ErrorKind::PreconditionUnmet, "sufficient condition needs all a_i > 0");
  }
  const T d2 = delta2(p);
  if (!(d2 > T(0))) {
    throw Error(ErrorKind::PreconditionUnmet, "sufficient condition needs Delta2 > 0");
  }
  const T disc = discriminant(p);
  if (!(disc > T(0))) {
    throw Error(ErrorKind::PreconditionUnmet, "sufficient condition needs a2^2 - 4 a4 > 0");
  }

  const T A = a_term(p);
  if (A == T(0)) return std::nullopt;
  const T a2 = p.coeff(2);
  const T a4 = p.coeff(4);
  const T gamma = d2 / A;
  const T vertex = -a2 / (T(2) * a4);
  if (!approx_equal(gamma, vertex)) return std::nullopt;

  // Gamma at the vertex; positive because the discriminant is.
  const T gamma_at_vertex = disc / (T(4) * a4);
  const T d4 = delta4_factored(p);
  if (!(d4 > T(0))) return std::nullopt;

  double tol = 0.0;
  if constexpr (!is_exact_v<T>) {
    tol = kFloatEqualityTolerance * std::max(std::abs(gamma), std::abs(vertex));
  }
  Certificate<T> cert{CertificateKind::Cor5, {}};
  add_positive_coeffs(cert, p);
  cert.add(minor_name(2), d2, Relation::Positive);
  cert.add(kDisc, disc, Relation::Positive);
  cert.add(kA, A, Relation::NonZero);
  cert.add("gamma-vertex", gamma - vertex, Relation::Zero, tol);
  cert.add("Gamma(vertex)", gamma_at_vertex, Relation::Positive);
  cert.add(minor_name(4), d4, Relation::Positive);
  return cert;
}

Cor5Forms cor5_equivalents(const Polynomial<Rational>& p) {
  if (p.degree() != 5) {
    throw Error(ErrorKind::PreconditionUnmet, "equivalent forms are stated for degree 5 only");
  }
  const Rational a1 = p.coeff(1), a2 = p.coeff(2), a3 = p.coeff(3);
  const Rational a4 = p.coeff(4), a5 = p.coeff(5);
  if (!(a2 > Rational(0)) || !(a4 > Rational(0))) {
    throw Error(ErrorKind::PreconditionUnmet, "equivalent forms need a2 > 0 and a4 > 0");
  }
  const Rational d2 = delta2(p);
  const Rational A = a_term(p);
  Cor5Forms forms;
  forms.vertex = !A.is_zero() && d2 / A == -a2 / (Rational(2) * a4);
  forms.delta2_form = d2 == a3 - a2 * a5 / a4;
  forms.alpha1_form = a1 == Rational(2) * a3 / a2 - a5 / a4;
  return forms;
}

template <Scalar T>
StabilityVerdict<T> analyze(const Polynomial<T>& p) {
  if (const int k = first_nonpositive(p); k != 0) {
    return {Status::NotStable, nonpositive_certificate(p, k), {}};
  }

  const int n = p.degree();
  if (n >= 5) {
    std::vector<Certificate<T>> fired;
    if (auto c = cor1_certificate(p)) fired.push_back(std::move(*c));

    // Cor 1 is sign-exact in floats: with A, B >= 0 and Delta_2 > 0 every
    // term of the factored Delta_4 is nonpositive after rounding too. Cor 2
    // and Cor 3 rely on a quadratic-form argument, so in floats they are
    // only accepted when the even-minor route agrees.
    bool float_guard_ok = true;
    if constexpr (!is_exact_v<T>) {
      float_guard_ok = !(delta2(p) > 0.0) || !(delta4_factored(p) > 0.0);
    }
    if (float_guard_ok) {
      if (auto c = cor2_certificate(p)) fired.push_back(std::move(*c));
      if (auto c = cor3_certificate(p)) fired.push_back(std::move(*c));
    }
    if (!fired.empty()) {
      Certificate<T> primary = std::move(fired.front());
      fired.erase(fired.begin());
      return {Status::NotStable, std::move(primary), std::move(fired)};
    }
  }

  if (n == 5 && delta2(p) > T(0)) {
    if (auto c = cor4_necessary_violated(p)) return {Status::NotStable, std::move(*c), {}};
    // cor4 did not fire, so the discriminant is positive: Cor 5 applies.
    if (auto c = cor5_sufficient(p)) return {Status::Stable, std::move(*c), {}};
  }

  return lienard_chipart(p);
}

#define CHIPART_INSTANTIATE(T)                                                                 \
  template StabilityVerdict<T> lienard_chipart<T>(const Polynomial<T>&);                      \
  template StabilityVerdict<T> lienard_chipart_odd<T>(const Polynomial<T>&);                  \
  template StabilityVerdict<T> routh_hurwitz_full<T>(const Polynomial<T>&);                   \
  template std::optional<Certificate<T>> cor1_certificate<T>(const Polynomial<T>&);           \
  template std::optional<Certificate<T>> cor2_certificate<T>(const Polynomial<T>&);           \
  template std::optional<Certificate<T>> cor3_certificate<T>(const Polynomial<T>&);           \
  template GammaReport<T> gamma_report<T>(const Polynomial<T>&);                              \
  template std::optional<Certificate<T>> cor4_necessary_violated<T>(const Polynomial<T>&);    \
  template std::optional<Certificate<T>> cor5_sufficient<T>(const Polynomial<T>&);            \
  template StabilityVerdict<T> analyze<T>(const Polynomial<T>&);

CHIPART_INSTANTIATE(Rational)
CHIPART_INSTANTIATE(double)

#undef CHIPART_INSTANTIATE

}  // namespace chipart
