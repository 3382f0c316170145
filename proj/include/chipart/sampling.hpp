#pragma once

#include <cstdint>
#include <random>

#include "chipart/polynomial.hpp"

namespace chipart {

/// Deterministic generator used by every sampler in the project.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The seed is run through one SplitMix64 step first so nearby
/// seeds give unrelated streams. Distributions are computed here rather
/// than with <random> distributions, whose algorithms are
/// implementation-defined:
///   uniform01   = (next() >> 11) * 2^-53, in [0, 1)
///   integer     = lo + next() % (hi - lo + 1)
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// [lo, hi); returns lo when lo == hi.
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// exp(uniform(log lo, log hi)), lo > 0.
  double log_uniform(double lo, double hi);
  /// Inclusive range.
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool chance(double probability) { return uniform01() < probability; }

 private:
  std::mt19937_64 engine_;
};

/// Degree in [lo, hi] inclusive.
int sample_degree(Rng& rng, int lo, int hi);

/// Coefficients num/den with num, den uniform in [1, max_term].
Polynomial<Rational> sample_rational_polynomial(Rng& rng, int degree, long max_term = 100);

/// Mixed population for verdict tests: half log-uniform positive
/// coefficients in [1e-3, 1e3] (a few sign-flipped), half expanded from
/// random real/complex-pair roots with real parts in [-10, 1].
Polynomial<double> sample_float_polynomial(Rng& rng, int degree);

/// Members of each instability certificate's hypothesis region, degree >= 5.
/// Free coefficients are log-uniform in [1e-3, 1e3].
Polynomial<double> sample_cor1_region(Rng& rng, int degree);
Polynomial<double> sample_cor2_region(Rng& rng, int degree);
Polynomial<double> sample_cor3_region(Rng& rng, int degree);

/// Degree-5 rationals meeting the sufficient condition exactly: a1, a2, a4
/// free with a2^2 > 4 a4, a3 = t a1 a2 with t in (1/2, 1), and
/// a5 = a4 (a1 - 2 Delta_2 / a2), which puts gamma on the vertex.
Polynomial<Rational> sample_cor5_polynomial(Rng& rng);

/// Degree 5, a4 = 1, a2 uniform in (0, 2], other coefficients positive.
Polynomial<double> sample_small_a2_quintic(Rng& rng);

}  // namespace chipart
