#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "chipart/polynomial.hpp"

namespace chipart {

enum class OracleClass { Stable, Unstable, Indeterminate };

std::string_view to_string(OracleClass c);

inline constexpr double kDefaultMargin = 1e-8;

struct RootReport {
  std::vector<std::complex<double>> roots;  // sorted by (real, imag)
  double max_real_part = 0.0;
  OracleClass classification = OracleClass::Indeterminate;
  /// max over roots of |p(z)| / sum_k |a_k| |z|^(n-k), a backward error.
  double residual = 0.0;
  double margin = kDefaultMargin;
  int iterations = 0;
  bool converged = false;  // every root met the relative-update criterion
};

/// Stable if max_real_part < -margin, Unstable if > margin, else
/// Indeterminate.
OracleClass classify(double max_real_part, double margin = kDefaultMargin);
OracleClass classify(std::span<const std::complex<double>> roots, double margin = kDefaultMargin);

/// All n roots by Aberth-Ehrlich simultaneous iteration from a circle of
/// radius 1 + max|a_i|, followed by one guarded Newton step per root.
/// Throws NoConvergence when neither the update (1e-13 relative, 200
/// sweeps) nor the residual (1e-8) criterion is met.
RootReport find_roots(const Polynomial<double>& p, double margin = kDefaultMargin);

/// Monic coefficients a1..an of prod (s - z_k), real parts only.
std::vector<double> monic_from_roots(std::span<const std::complex<double>> roots);

/// max_k |a_k' - a_k| / max(1, max_k |a_k|) between p and the polynomial
/// rebuilt from the reported roots.
double reconstruction_error(const Polynomial<double>& p, std::span<const std::complex<double>> roots);

}  // namespace chipart
