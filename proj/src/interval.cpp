#include "chipart/interval.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chipart/criteria.hpp"

namespace chipart {

namespace {

void require_positive(bool positive) {
  if (!positive) {
    throw Error(ErrorKind::NonPositiveBox, "box certificates need every lower bound > 0");
  }
}

// Smallest double >= x.
double double_at_least(const Rational& x) {
  double d = x.to_double();
  if (Rational::from_double(d) < x) d = std::nextafter(d, HUGE_VAL);
  return d;
}

}  // namespace

template <Scalar T>
IntervalBox<T>::IntervalBox(int degree, std::vector<std::pair<T, T>> bounds)
    : bounds_(std::move(bounds)) {
  if (degree < 5) {
    throw Error(ErrorKind::DegreeTooSmall,
                "interval boxes need degree >= 5, got " + std::to_string(degree));
  }
  if (static_cast<int>(bounds_.size()) != degree) {
    throw Error(ErrorKind::LengthMismatch, "degree " + std::to_string(degree) + " needs " +
                                               std::to_string(degree) + " bounds, got " +
                                               std::to_string(bounds_.size()));
  }
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const auto& [lo, hi] = bounds_[i];
    if constexpr (!is_exact_v<T>) {
      if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw Error(ErrorKind::NonFiniteCoefficient,
                    "bound for a" + std::to_string(i + 1) + " is not finite");
      }
    }
    if (lo > hi) {
      throw Error(ErrorKind::InvalidBox, "empty interval for a" + std::to_string(i + 1) +
                                             ": lo > hi");
    }
  }
}

template <Scalar T>
bool IntervalBox<T>::positive() const {
  return std::all_of(bounds_.begin(), bounds_.end(),
                     [](const auto& b) { return b.first > T(0); });
}

template <Scalar T>
IntervalBox<T> IntervalBox<T>::degenerate(const Polynomial<T>& p) {
  std::vector<std::pair<T, T>> bounds;
  for (const T& a : p.coeffs()) bounds.emplace_back(a, a);
  return IntervalBox<T>(p.degree(), std::move(bounds));
}

template <Scalar T>
BoxMargins<T> box_margins(const IntervalBox<T>& box) {
  return {box.lo(5) - box.hi(1) * box.hi(4), box.lo(7) - box.hi(1) * box.hi(6),
          box.hi(2) * box.hi(2) - T(4) * box.lo(4)};
}

template <Scalar T>
std::optional<Certificate<T>> box_cor1(const IntervalBox<T>& box) {
  require_positive(box.positive());
  const BoxMargins<T> m = box_margins(box);
  if (!(m.a_min >= T(0) && m.b_min >= T(0))) return std::nullopt;
  Certificate<T> cert{CertificateKind::Cor1, {}};
  cert.add("lo5-hi1*hi4", m.a_min, Relation::NonNegative);
  cert.add("lo7-hi1*hi6", m.b_min, Relation::NonNegative);
  return cert;
}

template <Scalar T>
std::optional<Certificate<T>> box_cor3(const IntervalBox<T>& box) {
  require_positive(box.positive());
  const BoxMargins<T> m = box_margins(box);
  if (!(m.disc_max <= T(0) && m.b_min >= T(0))) return std::nullopt;
  Certificate<T> cert{CertificateKind::Cor3, {}};
  cert.add("hi2^2-4*lo4", m.disc_max, Relation::NonPositive);
  cert.add("lo7-hi1*hi6", m.b_min, Relation::NonNegative);
  return cert;
}

template <Scalar T>
Polynomial<double> sample_box_member(const IntervalBox<T>& box, Rng& rng) {
  std::vector<double> a;
  a.reserve(box.bounds().size());
  for (const auto& [lo, hi] : box.bounds()) {
    const double l = to_double(lo);
    const double h = to_double(hi);
    a.push_back(std::clamp(l + (h - l) * rng.uniform01(), l, h));
  }
  return Polynomial<double>(box.degree(), std::move(a));
}

template <Scalar T>
BoxSampleSummary box_sample_verdicts(const IntervalBox<T>& box, std::size_t count,
                                     std::uint64_t seed) {
  Rng rng(seed);
  BoxSampleSummary summary;
  for (std::size_t i = 0; i < count; ++i) {
    Polynomial<double> p = sample_box_member(box, rng);
    if (analyze(p).status == Status::Stable) {
      ++summary.stable;
      if (summary.stable_exemplars.size() < BoxSampleSummary::kMaxExemplars) {
        summary.stable_exemplars.push_back(std::move(p));
      }
    } else {
      ++summary.not_stable;
      if (summary.not_stable_exemplars.size() < BoxSampleSummary::kMaxExemplars) {
        summary.not_stable_exemplars.push_back(std::move(p));
      }
    }
  }
  return summary;
}

IntervalBox<Rational> sample_certified_box(Rng& rng) {
  static constexpr int kDegrees[] = {5, 7, 8, 9};
  const int degree = kDegrees[rng.integer(0, 3)];
  std::vector<std::pair<double, double>> b(static_cast<std::size_t>(degree));
  for (auto& [lo, hi] : b) {
    const double centre = rng.log_uniform(1e-2, 1e2);
    const double width = rng.uniform(0.0, 0.5);
    lo = centre * (1.0 - width);
    hi = centre * (1.0 + width);
  }
  auto lo = [&](int k) -> double& { return b[static_cast<std::size_t>(k - 1)].first; };
  auto hi = [&](int k) -> double& { return b[static_cast<std::size_t>(k - 1)].second; };
  auto raise_lower = [&](int k, const Rational& floor) {
    // Occasionally sit exactly on the certificate boundary.
    const Rational target =
        rng.chance(0.2) ? floor : floor * Rational::from_double(1.0 + rng.uniform(0.0, 0.5));
    lo(k) = double_at_least(target);
    hi(k) = std::max(hi(k), lo(k) * (1.0 + rng.uniform(0.0, 0.5)));
  };
  auto exact = [](double x) { return Rational::from_double(x); };

  if (rng.chance(0.5)) {
    raise_lower(5, exact(hi(1)) * exact(hi(4)));
  } else {
    raise_lower(4, exact(hi(2)) * exact(hi(2)) / Rational(4));
  }
  if (degree >= 7) raise_lower(7, exact(hi(1)) * exact(hi(6)));

  std::vector<std::pair<Rational, Rational>> bounds;
  bounds.reserve(b.size());
  for (const auto& [l, h] : b) bounds.emplace_back(exact(l), exact(h));
  return IntervalBox<Rational>(degree, std::move(bounds));
}

#define CHIPART_INSTANTIATE(T)                                                          \
  template class IntervalBox<T>;                                                        \
  template BoxMargins<T> box_margins<T>(const IntervalBox<T>&);                         \
  template std::optional<Certificate<T>> box_cor1<T>(const IntervalBox<T>&);            \
  template std::optional<Certificate<T>> box_cor3<T>(const IntervalBox<T>&);            \
  template Polynomial<double> sample_box_member<T>(const IntervalBox<T>&, Rng&);        \
  template BoxSampleSummary box_sample_verdicts<T>(const IntervalBox<T>&, std::size_t,  \
                                                   std::uint64_t);

CHIPART_INSTANTIATE(Rational)
CHIPART_INSTANTIATE(double)

#undef CHIPART_INSTANTIATE

}  // namespace chipart
