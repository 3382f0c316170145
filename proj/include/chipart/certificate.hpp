#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chipart/scalar.hpp"

namespace chipart {

enum class CertificateKind {
  LienardChipartEven,
  LienardChipartOdd,
  RouthHurwitzFull,
  Cor1,
  Cor2,
  Cor3,
  Cor4Violated,
  Cor5,
  CoefficientNonPositive,
};

std::string_view to_string(CertificateKind kind);

/// Sign condition a witness value is claimed to satisfy, always relative to 0.
enum class Relation { Positive, NonNegative, Zero, NonZero, NonPositive, Negative };

std::string_view to_string(Relation relation);

/// One recorded inequality: `value relation 0`. `tolerance` is only used by
/// Zero/NonZero in the float domain and is 0 for exact witnesses.
template <Scalar T>
struct Witness {
  std::string name;
  T value;
  Relation relation;
  double tolerance = 0.0;
};

template <Scalar T>
struct Certificate {
  CertificateKind kind;
  std::vector<Witness<T>> witnesses;

  void add(std::string name, T value, Relation relation, double tolerance = 0.0) {
    witnesses.push_back({std::move(name), std::move(value), relation, tolerance});
  }
};

template <Scalar T>
bool satisfies(const T& value, Relation relation, double tolerance = 0.0);

/// Machine check: every witness value satisfies its recorded relation.
template <Scalar T>
bool replay(const Certificate<T>& certificate);

enum class Status { Stable, NotStable };

std::string_view to_string(Status status);

template <Scalar T>
struct StabilityVerdict {
  Status status;
  Certificate<T> certificate;
  /// Other certificates that fired at the same pipeline stage as
  /// `certificate` (only filled by analyze()).
  std::vector<Certificate<T>> corroborating;
};

}  // namespace chipart
