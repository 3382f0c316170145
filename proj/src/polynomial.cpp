#include "chipart/polynomial.hpp"

#include <cmath>
#include <charconv>
#include <string>

namespace chipart {

std::string to_display_string(double x) {
  // Shortest form that still round-trips.
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, result.ptr);
}

template <Scalar T>
Polynomial<T>::Polynomial(int degree, std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
  if (degree < 1) {
    throw Error(ErrorKind::LengthMismatch,
                "degree must be at least 1, got " + std::to_string(degree));
  }
  if (static_cast<int>(coeffs_.size()) != degree) {
    throw Error(ErrorKind::LengthMismatch,
                "degree " + std::to_string(degree) + " needs " + std::to_string(degree) +
                    " coefficients, got " + std::to_string(coeffs_.size()));
  }
  if constexpr (!is_exact_v<T>) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!std::isfinite(coeffs_[i])) {
        throw Error(ErrorKind::NonFiniteCoefficient,
                    "coefficient a" + std::to_string(i + 1) + " is not finite");
      }
    }
  }
}

Polynomial<double> to_float(const Polynomial<Rational>& p) {
  std::vector<double> out;
  out.reserve(p.coeffs().size());
  for (const Rational& a : p.coeffs()) out.push_back(a.to_double());
  return Polynomial<double>(p.degree(), std::move(out));
}

Polynomial<Rational> to_exact(const Polynomial<double>& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (double a : p.coeffs()) out.push_back(Rational::from_double(a));
  return Polynomial<Rational>(p.degree(), std::move(out));
}

template <Scalar T>
Polynomial<T> normalize_monic(std::span<const T> raw) {
  if (raw.size() < 2) {
    throw Error(ErrorKind::LengthMismatch, "need a leading coefficient and at least one more");
  }
  const T& lead = raw.front();
  if (lead == T(0)) {
    throw Error(ErrorKind::PreconditionUnmet, "leading coefficient is zero");
  }
  std::vector<T> out;
  out.reserve(raw.size() - 1);
  for (std::size_t i = 1; i < raw.size(); ++i) out.push_back(raw[i] / lead);
  const int degree = static_cast<int>(out.size());
  return Polynomial<T>(degree, std::move(out));
}

template class Polynomial<Rational>;
template class Polynomial<double>;
template Polynomial<Rational> normalize_monic<Rational>(std::span<const Rational>);
template Polynomial<double> normalize_monic<double>(std::span<const double>);

}  // namespace chipart
