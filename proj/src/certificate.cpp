#include "chipart/certificate.hpp"

#include <cmath>

#include "chipart/error.hpp"

namespace chipart {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NonFiniteCoefficient: return "NonFiniteCoefficient";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NonPositiveBox: return "NonPositiveBox";
    case ErrorKind::InvalidBox: return "InvalidBox";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "?";
}

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::LienardChipartEven: return "LienardChipartEven";
    case CertificateKind::LienardChipartOdd: return "LienardChipartOdd";
    case CertificateKind::RouthHurwitzFull: return "RouthHurwitzFull";
    case CertificateKind::Cor1: return "Cor1";
    case CertificateKind::Cor2: return "Cor2";
    case CertificateKind::Cor3: return "Cor3";
    case CertificateKind::Cor4Violated: return "Cor4Violated";
    case CertificateKind::Cor5: return "Cor5";
    case CertificateKind::CoefficientNonPositive: return "CoefficientNonPositive";
  }
  return "?";
}

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::Positive: return "> 0";
    case Relation::NonNegative: return ">= 0";
    case Relation::Zero: return "== 0";
    case Relation::NonZero: return "!= 0";
    case Relation::NonPositive: return "<= 0";
    case Relation::Negative: return "< 0";
  }
  return "?";
}

std::string_view to_string(Status status) {
  return status == Status::Stable ? "Stable" : "NotStable";
}

template <Scalar T>
bool satisfies(const T& value, Relation relation, double tolerance) {
  const T zero(0);
  switch (relation) {
    case Relation::Positive: return value > zero;
    case Relation::NonNegative: return value >= zero;
    case Relation::NonPositive: return value <= zero;
    case Relation::Negative: return value < zero;
    case Relation::Zero:
    case Relation::NonZero: {
      bool is_zero;
      if constexpr (is_exact_v<T>) {
        is_zero = value.is_zero();
      } else {
        is_zero = std::abs(value) <= tolerance;
      }
      return relation == Relation::Zero ? is_zero : !is_zero;
    }
  }
  return false;
}

template <Scalar T>
bool replay(const Certificate<T>& certificate) {
  for (const auto& w : certificate.witnesses) {
    if (!satisfies(w.value, w.relation, w.tolerance)) return false;
  }
  return true;
}

template bool satisfies<Rational>(const Rational&, Relation, double);
template bool satisfies<double>(const double&, Relation, double);
template bool replay<Rational>(const Certificate<Rational>&);
template bool replay<double>(const Certificate<double>&);

}  // namespace chipart
