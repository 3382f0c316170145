#include "chipart/sampling.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace chipart {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr double kLogLo = 1e-3;
constexpr double kLogHi = 1e3;

std::vector<double> log_uniform_coeffs(Rng& rng, int degree) {
  std::vector<double> a(static_cast<std::size_t>(degree));
  for (double& x : a) x = rng.log_uniform(kLogLo, kLogHi);
  return a;
}

// a[k-1] is a_k.
double& at(std::vector<double>& a, int k) { return a[static_cast<std::size_t>(k - 1)]; }

// Nonnegative slack; exactly zero one time in ten so boundaries get hit.
double slack(Rng& rng) { return rng.chance(0.1) ? 0.0 : rng.log_uniform(kLogLo, kLogHi); }

// Makes B = a7 - a1 a6 >= 0 after rounding.
void force_b_nonnegative(Rng& rng, std::vector<double>& a, int degree) {
  if (degree >= 7) {
    at(a, 7) = at(a, 1) * at(a, 6) + slack(rng);
  } else if (degree == 6) {
    // a7 reads as 0, so B >= 0 needs a6 <= 0.
    at(a, 6) = rng.chance(0.5) ? 0.0 : -rng.log_uniform(kLogLo, kLogHi);
  }
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

int sample_degree(Rng& rng, int lo, int hi) { return static_cast<int>(rng.integer(lo, hi)); }

Polynomial<Rational> sample_rational_polynomial(Rng& rng, int degree, long max_term) {
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) {
    const long num = rng.integer(1, max_term);
    const long den = rng.integer(1, max_term);
    a.emplace_back(num, den);
  }
  return Polynomial<Rational>(degree, std::move(a));
}

Polynomial<double> sample_float_polynomial(Rng& rng, int degree) {
  if (rng.chance(0.5)) {
    std::vector<double> a = log_uniform_coeffs(rng, degree);
    if (rng.chance(0.1)) {
      const int k = sample_degree(rng, 1, degree);
      at(a, k) = -at(a, k);
    }
    return Polynomial<double>(degree, std::move(a));
  }

  // Expand prod (s - r) over sampled roots.
  std::vector<std::complex<double>> roots;
  while (static_cast<int>(roots.size()) < degree) {
    const double re = rng.uniform(-10.0, 1.0);
    if (degree - static_cast<int>(roots.size()) >= 2 && rng.chance(0.6)) {
      const double im = rng.uniform(0.05, 10.0);
      roots.emplace_back(re, im);
      roots.emplace_back(re, -im);
    } else {
      roots.emplace_back(re, 0.0);
    }
  }
  std::vector<double> c{1.0};
  std::size_t k = 0;
  while (k < roots.size()) {
    if (roots[k].imag() != 0.0) {
      // Real quadratic factor s^2 - 2 re s + |r|^2.
      const double b = -2.0 * roots[k].real();
      const double d = std::norm(roots[k]);
      c.push_back(0.0);
      c.push_back(0.0);
      for (std::size_t j = c.size() - 1; j >= 1; --j) {
        c[j] += b * c[j - 1] + (j >= 2 ? d * c[j - 2] : 0.0);
      }
      k += 2;
    } else {
      const double r = roots[k].real();
      c.push_back(0.0);
      for (std::size_t j = c.size() - 1; j >= 1; --j) c[j] -= r * c[j - 1];
      k += 1;
    }
  }
  return Polynomial<double>(degree, std::vector<double>(c.begin() + 1, c.end()));
}

Polynomial<double> sample_cor1_region(Rng& rng, int degree) {
  std::vector<double> a = log_uniform_coeffs(rng, degree);
  at(a, 5) = at(a, 1) * at(a, 4) + slack(rng);
  force_b_nonnegative(rng, a, degree);
  return Polynomial<double>(degree, std::move(a));
}

Polynomial<double> sample_cor2_region(Rng& rng, int degree) {
  std::vector<double> a = log_uniform_coeffs(rng, degree);
  at(a, 2) = 2.0;
  at(a, 4) = 1.0;
  force_b_nonnegative(rng, a, degree);
  return Polynomial<double>(degree, std::move(a));
}

Polynomial<double> sample_cor3_region(Rng& rng, int degree) {
  std::vector<double> a = log_uniform_coeffs(rng, degree);
  // 4 a4 >= fl(a2^2) holds after rounding since the division by 4 is exact.
  at(a, 4) = at(a, 2) * at(a, 2) / 4.0 + slack(rng);
  force_b_nonnegative(rng, a, degree);
  return Polynomial<double>(degree, std::move(a));
}

Polynomial<Rational> sample_cor5_polynomial(Rng& rng) {
  auto positive_rational = [&rng](long max_num, long max_den) {
    return Rational(static_cast<long>(rng.integer(1, max_num)),
                    static_cast<long>(rng.integer(1, max_den)));
  };
  const Rational a1 = positive_rational(100, 20);
  const Rational a2 = positive_rational(100, 20);
  // a4 = s a2^2 / 4 with s in (0, 1) keeps the discriminant positive.
  const long s_den = static_cast<long>(rng.integer(2, 50));
  const Rational s(static_cast<long>(rng.integer(1, s_den - 1)), s_den);
  const Rational a4 = s * a2 * a2 / Rational(4);
  // a3 = t a1 a2 with t in (1/2, 1): Delta_2 > 0 and a5 > 0.
  const long t_den = static_cast<long>(rng.integer(3, 60));
  const long t_num = static_cast<long>(rng.integer(t_den / 2 + 1, t_den - 1));
  const Rational t(t_num, t_den);
  const Rational a3 = t * a1 * a2;
  const Rational d2 = a1 * a2 - a3;
  const Rational a5 = a4 * (a1 - Rational(2) * d2 / a2);
  return Polynomial<Rational>(5, {a1, a2, a3, a4, a5});
}

Polynomial<double> sample_small_a2_quintic(Rng& rng) {
  std::vector<double> a = log_uniform_coeffs(rng, 5);
  at(a, 2) = 2.0 * (1.0 - rng.uniform01());
  at(a, 4) = 1.0;
  return Polynomial<double>(5, std::move(a));
}

}  // namespace chipart
