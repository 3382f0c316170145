#include <random>

#include <gtest/gtest.h>

#include "chipart/polynomial.hpp"

namespace chipart {
namespace {

Polynomial<Rational> binomial5() {
  return make_polynomial<Rational>(5, {5, 10, 10, 5, 1});
}

TEST(Polynomial, CoefficientAccessUsesHurwitzConventions) {
  const auto p = binomial5();
  EXPECT_EQ(p.degree(), 5);
  EXPECT_EQ(p.coeff(1), Rational(5));
  EXPECT_EQ(p.coeff(5), Rational(1));
  EXPECT_EQ(p.coeff(0), Rational(1));
  EXPECT_EQ(p.coeff(7), Rational(0));
  EXPECT_EQ(p.coeff(-1), Rational(0));
}

TEST(Polynomial, CoefficientsBeyondDegreeReadZero) {
  std::mt19937 gen(3);
  for (int n = 1; n <= 9; ++n) {
    std::vector<double> a(static_cast<std::size_t>(n));
    for (double& x : a) x = std::uniform_real_distribution<double>(-5, 5)(gen);
    const auto p = make_polynomial<double>(n, a);
    for (int k = n + 1; k <= 2 * n + 1; ++k) EXPECT_EQ(p.coeff(k), 0.0);
  }
}

TEST(Polynomial, RejectsWrongArity) {
  try {
    make_polynomial<Rational>(3, {1, 2});
    FAIL() << "expected LengthMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
  EXPECT_THROW(make_polynomial<double>(0, {}), Error);
}

TEST(Polynomial, RejectsNonFiniteFloats) {
  try {
    make_polynomial<double>(2, {1.0, std::numeric_limits<double>::infinity()});
    FAIL() << "expected NonFiniteCoefficient";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonFiniteCoefficient);
  }
  EXPECT_THROW(make_polynomial<double>(1, {std::nan("")}), Error);
}

TEST(Polynomial, ToFloat) {
  EXPECT_EQ(to_float(make_polynomial<Rational>(1, {Rational(1, 2)})).coeff(1), 0.5);
  EXPECT_EQ(to_float(make_polynomial<Rational>(1, {Rational(1, 3)})).coeff(1), 1.0 / 3.0);
  const auto f = to_float(binomial5());
  EXPECT_EQ(std::vector<double>(f.coeffs().begin(), f.coeffs().end()),
            (std::vector<double>{5, 10, 10, 5, 1}));
}

TEST(Polynomial, ToFloatOverflowIsNonFinite) {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  try {
    to_float(make_polynomial<Rational>(1, {Rational(big)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonFiniteCoefficient);
  }
}

TEST(Polynomial, IntegerRoundTripThroughFloat) {
  std::mt19937 gen(5);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> a;
    for (int k = 0; k < 7; ++k) a.emplace_back(dist(gen));
    const auto p = make_polynomial<Rational>(7, a);
    EXPECT_EQ(to_exact(to_float(p)), p);
  }
}

TEST(Polynomial, AllCoeffsPositive) {
  EXPECT_TRUE(all_coeffs_positive(binomial5()));
  EXPECT_FALSE(all_coeffs_positive(make_polynomial<Rational>(2, {0, 1})));
  EXPECT_TRUE(all_coeffs_positive(make_polynomial<Rational>(5, {1, 2, 1, 1, Rational(1, 2)})));
}

TEST(Polynomial, FlippingAnyCoefficientBreaksPositivity) {
  std::mt19937 gen(9);
  std::uniform_real_distribution<double> dist(0.001, 1000.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 9;
    std::vector<double> a(static_cast<std::size_t>(n));
    for (double& x : a) x = dist(gen);
    ASSERT_TRUE(all_coeffs_positive(make_polynomial<double>(n, a)));
    for (int k = 0; k < n; ++k) {
      auto flipped = a;
      flipped[static_cast<std::size_t>(k)] = -flipped[static_cast<std::size_t>(k)];
      EXPECT_FALSE(all_coeffs_positive(make_polynomial<double>(n, flipped)));
      flipped[static_cast<std::size_t>(k)] = 0.0;
      EXPECT_FALSE(all_coeffs_positive(make_polynomial<double>(n, flipped)));
    }
  }
}

TEST(Polynomial, NormalizeMonic) {
  const std::vector<Rational> raw{2, 4, 1};
  const auto p = normalize_monic<Rational>(raw);
  EXPECT_EQ(p, make_polynomial<Rational>(2, {2, Rational(1, 2)}));
  const std::vector<Rational> zero_lead{0, 1, 1};
  EXPECT_THROW(normalize_monic<Rational>(zero_lead), Error);
}

}  // namespace
}  // namespace chipart
