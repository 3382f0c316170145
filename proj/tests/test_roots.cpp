#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "chipart/roots.hpp"
#include "chipart/sampling.hpp"
#include "oracles.hpp"

namespace chipart {
namespace {

using cd = std::complex<double>;

TEST(Classify, Examples) {
  EXPECT_EQ(classify(-1.0, 1e-8), OracleClass::Stable);
  EXPECT_EQ(classify(0.5, 1e-8), OracleClass::Unstable);
  EXPECT_EQ(classify(1e-12, 1e-8), OracleClass::Indeterminate);
  EXPECT_EQ(classify(-1e-8, 1e-8), OracleClass::Indeterminate);
  const std::vector<cd> roots{{-1, 2}, {-1, -2}, {0.25, 0}};
  EXPECT_EQ(classify(roots), OracleClass::Unstable);
}

TEST(FindRoots, RepeatedRootBinomial) {
  const auto p = make_polynomial<double>(5, {5, 10, 10, 5, 1});
  const auto r = find_roots(p);
  ASSERT_EQ(r.roots.size(), 5u);
  for (const auto& z : r.roots) EXPECT_LT(std::abs(z + 1.0), 1e-6);
  EXPECT_EQ(r.classification, OracleClass::Stable);
  EXPECT_EQ(r.margin, kDefaultMargin);
}

TEST(FindRoots, SixthRootsOfUnity) {
  const auto p = make_polynomial<double>(5, {1, 1, 1, 1, 1});
  const auto r = find_roots(p);
  ASSERT_EQ(r.roots.size(), 5u);
  for (int k = 1; k < 6; ++k) {
    const cd expected = std::polar(1.0, k * std::numbers::pi / 3);
    double best = 1e300;
    for (const auto& z : r.roots) best = std::min(best, std::abs(z - expected));
    EXPECT_LT(best, 1e-8) << k;
  }
  EXPECT_NEAR(r.max_real_part, 0.5, 1e-8);
  EXPECT_EQ(r.classification, OracleClass::Unstable);
}

TEST(FindRoots, ImaginaryAxisPair) {
  const auto r = find_roots(make_polynomial<double>(2, {0, 1}));
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_LT(std::abs(r.roots[0] - cd(0, -1)), 1e-12);
  EXPECT_LT(std::abs(r.roots[1] - cd(0, 1)), 1e-12);
  EXPECT_EQ(r.classification, OracleClass::Indeterminate);
}

TEST(FindRoots, SortedByRealThenImag) {
  const auto r = find_roots(make_polynomial<double>(4, {2, 3, 2, 1}));
  for (std::size_t k = 1; k < r.roots.size(); ++k) {
    const auto& a = r.roots[k - 1];
    const auto& b = r.roots[k];
    EXPECT_TRUE(a.real() < b.real() || (a.real() == b.real() && a.imag() <= b.imag()));
  }
}

TEST(FindRoots, HigherMultiplicity) {
  for (int m = 6; m <= 7; ++m) {
    std::vector<cd> roots(static_cast<std::size_t>(m), cd(-1, 0));
    const auto a = testing::expand_roots(roots);
    const auto r = find_roots(make_polynomial<double>(m, a));
    for (const auto& z : r.roots) EXPECT_LT(std::abs(z + 1.0), 1e-6);
    EXPECT_EQ(r.classification, OracleClass::Stable);
  }
}

TEST(FindRoots, RecoversPlantedStableRoots) {
  Rng rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = sample_degree(rng, 1, 9);
    std::vector<cd> planted;
    while (static_cast<int>(planted.size()) < n) {
      const double re = rng.uniform(-10.0, -0.1);
      if (n - static_cast<int>(planted.size()) >= 2 && rng.chance(0.6)) {
        const double im = rng.uniform(0.1, 10.0);
        planted.emplace_back(re, im);
        planted.emplace_back(re, -im);
      } else {
        planted.emplace_back(re, 0.0);
      }
    }
    const auto p = make_polynomial<double>(n, testing::expand_roots(planted));
    const auto r = find_roots(p);
    EXPECT_EQ(r.classification, OracleClass::Stable) << trial;
    EXPECT_LT(reconstruction_error(p, r.roots), 1e-6);
  }
}

TEST(FindRoots, ConjugatePairsAndReconstruction) {
  Rng rng(72);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = sample_degree(rng, 1, 9);
    const auto p = sample_float_polynomial(rng, n);
    const auto r = find_roots(p);
    ASSERT_EQ(r.roots.size(), static_cast<std::size_t>(n));
    EXPECT_LT(reconstruction_error(p, r.roots), 1e-6);
    EXPECT_EQ(r.classification == OracleClass::Indeterminate,
              std::abs(r.max_real_part) <= r.margin);
    for (const auto& z : r.roots) {
      const double tol = 1e-6 * std::max(1.0, std::abs(z));
      if (std::abs(z.imag()) <= tol) continue;
      double best = 1e300;
      for (const auto& w : r.roots) best = std::min(best, std::abs(w - std::conj(z)));
      EXPECT_LE(best, tol) << trial;
    }
  }
}

TEST(MonicFromRoots, Expands) {
  const std::vector<cd> roots{{-1, 1}, {-1, -1}, {-2, 0}};
  const auto a = monic_from_roots(roots);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_DOUBLE_EQ(a[0], 4.0);
  EXPECT_DOUBLE_EQ(a[1], 6.0);
  EXPECT_DOUBLE_EQ(a[2], 4.0);
}

TEST(FindRoots, CustomMargin) {
  const auto p = make_polynomial<double>(1, {1e-4});
  EXPECT_EQ(find_roots(p).classification, OracleClass::Stable);
  EXPECT_EQ(find_roots(p, 1e-3).classification, OracleClass::Indeterminate);
}

}  // namespace
}  // namespace chipart
