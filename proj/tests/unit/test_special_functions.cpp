#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pnc/special_functions.hpp"

using namespace pnc;

TEST(GaussianQ, Symmetry) {
  EXPECT_DOUBLE_EQ(gaussian_q(0.0), 0.5);
  for (double x : {0.1, 0.7, 1.3, 2.9, 5.5}) EXPECT_NEAR(gaussian_q(x) + gaussian_q(-x), 1.0, 1e-15);
}

TEST(GaussianQ, MatchesTailQuadrature) {
  for (double x = -8.0; x <= 8.0; x += 0.25) {
    const double ref = oracle::gaussian_tail(x);
    EXPECT_NEAR(gaussian_q(x) / ref, 1.0, 1e-12) << x;
  }
  EXPECT_NEAR(gaussian_q(1.0), oracle::gaussian_tail(1.0), 1e-10);
}

TEST(BesselI0, MatchesStandardLibrary) {
  for (double x = 0.0; x <= 60.0; x += 0.37) {
    EXPECT_NEAR(bessel_i0(x) / std::cyl_bessel_i(0.0, x), 1.0, 1e-13) << x;
    EXPECT_NEAR(bessel_i0_scaled(x) / (std::cyl_bessel_i(0.0, x) * std::exp(-x)), 1.0, 1e-13) << x;
  }
  EXPECT_DOUBLE_EQ(bessel_i0(-3.0), bessel_i0(3.0));
  EXPECT_NEAR(bessel_i0_scaled(1e4) * std::sqrt(2.0 * std::numbers::pi * 1e4), 1.0, 1e-4);
}

TEST(MarcumQ1, Identities) {
  for (double a : {0.0, 0.5, 3.0, 20.0, 50.0}) EXPECT_DOUBLE_EQ(marcum_q1(a, 0.0), 1.0);
  for (double b : {0.1, 1.0, 2.5, 6.0, 30.0}) EXPECT_NEAR(marcum_q1(0.0, b), std::exp(-0.5 * b * b), 1e-16);
  EXPECT_TRUE(std::isnan(marcum_q1(-1.0, 1.0)));
}

TEST(MarcumQ1, MatchesQuadratureAtTwoThree) {
  EXPECT_NEAR(marcum_q1(2.0, 3.0), oracle::marcum_q1_quadrature(2.0, 3.0), 1e-8);
}

TEST(MarcumQ1, MatchesNoncentralChiSquareOverGrid) {
  for (double a = 0.0; a <= 50.0; a += 2.5)
    for (double b = 0.0; b <= 50.0; b += 2.5) {
      const double ref = oracle::marcum_q1_chi2(a, b);
      EXPECT_NEAR(marcum_q1(a, b), ref, 1e-10) << a << "," << b;
    }
}

TEST(MarcumQ1, RelativeAccuracyInTheUpperTail) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int t = 0; t < 200; ++t) {
    const double a = u(rng), b = u(rng);
    const double ref = oracle::marcum_q1_quadrature(a, b);
    if (ref < 1e-280) continue;
    EXPECT_NEAR(marcum_q1(a, b) / ref, 1.0, 1e-7) << a << "," << b;
  }
}

TEST(MarcumQ1, Monotone) {
  for (double a = 0.0; a <= 10.0; a += 0.5) {
    double prev = 1.0;
    for (double b = 0.0; b <= 15.0; b += 0.25) {
      const double q = marcum_q1(a, b);
      EXPECT_LE(q, prev + 1e-15);
      EXPECT_GE(q, 0.0);
      prev = q;
    }
  }
  for (double b = 0.5; b <= 10.0; b += 0.5) {
    double prev = 0.0;
    for (double a = 0.0; a <= 15.0; a += 0.25) {
      const double q = marcum_q1(a, b);
      EXPECT_GE(q, prev - 1e-15);
      EXPECT_LE(q, 1.0);
      prev = q;
    }
  }
}
