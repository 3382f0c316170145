#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chipart/certificate.hpp"
#include "chipart/polynomial.hpp"
#include "chipart/sampling.hpp"

namespace chipart {

/// Family of degree-n monic polynomials with a_i in [lo_i, hi_i].
template <Scalar T>
class IntervalBox {
 public:
  /// Throws DegreeTooSmall for n < 5, LengthMismatch when bounds.size() != n,
  /// InvalidBox when some lo_i > hi_i, NonFiniteCoefficient for NaN/inf.
  IntervalBox(int degree, std::vector<std::pair<T, T>> bounds);

  int degree() const noexcept { return static_cast<int>(bounds_.size()); }
  /// Bounds with a_k = 0 (both ends) for k > n.
  T lo(int k) const { return k >= 1 && k <= degree() ? bounds_[index(k)].first : T(0); }
  T hi(int k) const { return k >= 1 && k <= degree() ? bounds_[index(k)].second : T(0); }
  const std::vector<std::pair<T, T>>& bounds() const noexcept { return bounds_; }

  /// Every lo_i > 0.
  bool positive() const;

  /// The box {p} (lo = hi = coefficients of p). Needs degree >= 5.
  static IntervalBox degenerate(const Polynomial<T>& p);

 private:
  static std::size_t index(int k) { return static_cast<std::size_t>(k - 1); }
  std::vector<std::pair<T, T>> bounds_;
};

/// Least favourable values over a positive box. A = a5 - a1 a4 and
/// B = a7 - a1 a6 decrease in a1, a4, a6 and increase in a5, a7, so their
/// minima sit at one corner; a2^2 - 4 a4 is largest at (hi2, lo4).
template <Scalar T>
struct BoxMargins {
  T a_min;     // lo5 - hi1 hi4
  T b_min;     // lo7 - hi1 hi6
  T disc_max;  // hi2^2 - 4 lo4
};

template <Scalar T>
BoxMargins<T> box_margins(const IntervalBox<T>& box);

/// Certificate that every member of the box is unstable because A >= 0 and
/// B >= 0 at the worst corner. Throws NonPositiveBox for boxes that allow
/// a_i <= 0.
template <Scalar T>
std::optional<Certificate<T>> box_cor1(const IntervalBox<T>& box);

/// Same, from a2^2 - 4 a4 <= 0 and B >= 0 at the worst corner.
template <Scalar T>
std::optional<Certificate<T>> box_cor3(const IntervalBox<T>& box);

struct BoxSampleSummary {
  std::size_t stable = 0;
  std::size_t not_stable = 0;
  /// Up to kMaxExemplars sampled members per class, in sampling order.
  std::vector<Polynomial<double>> stable_exemplars;
  std::vector<Polynomial<double>> not_stable_exemplars;

  static constexpr std::size_t kMaxExemplars = 10;
};

/// Draws `count` members with sample_box_member from Rng(seed) and
/// classifies each with analyze() in the float domain.
template <Scalar T>
BoxSampleSummary box_sample_verdicts(const IntervalBox<T>& box, std::size_t count,
                                     std::uint64_t seed);

/// One member of the box in doubles: a_i = lo_i + (hi_i - lo_i) u_i with
/// u_i = rng.uniform01(), i = 1..n in order, clamped to [lo_i, hi_i].
template <Scalar T>
Polynomial<double> sample_box_member(const IntervalBox<T>& box, Rng& rng);

/// A random positive box of degree 5, 7, 8 or 9 (degree 6 boxes can never be
/// certified) built so that box_cor1 or box_cor3 certifies it. Endpoints are
/// exact doubles so float samples stay inside the box.
IntervalBox<Rational> sample_certified_box(Rng& rng);

}  // namespace chipart
