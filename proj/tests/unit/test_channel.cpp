#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pnc/channel.hpp"
#include "pnc/errors.hpp"
#include "pnc/rng.hpp"

using namespace pnc;

TEST(Rician, SampleMomentsAtKFour) {
  Engine rng(1234);
  RicianSampler s(RicianParams{4.0});
  const int n = 1'000'000;
  Complex sum = 0.0;
  double power = 0.0, var_re = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex h = s(rng);
    sum += h;
    power += std::norm(h);
    var_re += (h.real() - std::sqrt(0.8)) * (h.real() - std::sqrt(0.8));
  }
  const Complex mean = sum / double(n);
  // Scattered part has variance 1/(K+1) split over two dimensions.
  const double se = std::sqrt(0.5 * 0.2 / n);
  EXPECT_NEAR(mean.real(), std::sqrt(4.0 / 5.0), 3 * se);
  EXPECT_NEAR(mean.imag(), 0.0, 3 * se);
  EXPECT_NEAR(power / n, 1.0, 0.005);
  EXPECT_NEAR(var_re / n, 0.1, 0.001);
}

TEST(Rician, RayleighAndLargeK) {
  Engine rng(5);
  RicianSampler rayleigh(RicianParams{0.0});
  EXPECT_DOUBLE_EQ(rayleigh.los(), 0.0);
  double power = 0.0;
  Complex sum = 0.0;
  for (int i = 0; i < 200'000; ++i) {
    const Complex h = rayleigh(rng);
    sum += h;
    power += std::norm(h);
  }
  EXPECT_NEAR(std::abs(sum / 200'000.0), 0.0, 0.01);
  EXPECT_NEAR(power / 200'000.0, 1.0, 0.01);

  RicianSampler strong(RicianParams{1e8});
  for (int i = 0; i < 100; ++i) EXPECT_NEAR(std::abs(strong(rng) - 1.0), 0.0, 1e-3);
  EXPECT_THROW(RicianSampler(RicianParams{-1.0}), InvalidArgument);
}

TEST(Rician, DensityIntegratesToOne) {
  // Midpoint rule over a box holding essentially all the mass.
  const RicianParams p{4.0};
  const double step = 0.01;
  double total = 0.0;
  for (double x = -2.0; x < 3.0; x += step)
    for (double y = -2.5; y < 2.5; y += step) total += rician_pdf(p, {x + step / 2, y + step / 2});
  EXPECT_NEAR(total * step * step, 1.0, 1e-4);
}

TEST(RelayDecode, NoiselessReturnsSentPair) {
  const auto c = make_psk(4);
  const Complex ha(0.9, 0.2), hb(-0.3, 0.7);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Complex y = 2.0 * (ha * c.point(a) + hb * c.point(b));
      EXPECT_EQ(relay_ml_decode(c, ha, hb, y, 4.0), (SymbolPair{a, b}));
    }
}

TEST(RelayDecode, SingularCollisionGoesToFirstRowMajorCandidate) {
  const auto c = make_psk(4);
  // At z = 1 the pairs (a, b) and (b, a) coincide.
  const Complex y = c.point(3) + c.point(1);
  const auto d = relay_ml_decode(c, 1.0, 1.0, y);
  EXPECT_EQ(d, (SymbolPair{1, 3}));
}

TEST(RelayDecode, PicksTheNearestCandidate) {
  const auto c = make_psk(4);
  const Complex ha(0.8, -0.1), hb(0.2, 0.5);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  for (int t = 0; t < 200; ++t) {
    const Complex y(n(rng), n(rng));
    double best = 1e300;
    SymbolPair arg;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const double d = std::norm(y - (ha * c.point(a) + hb * c.point(b)));
        if (d < best) {
          best = d;
          arg = {a, b};
        }
      }
    EXPECT_EQ(relay_ml_decode(c, ha, hb, y), arg);
  }
}

TEST(EndNodeDecode, NoiselessRecoversPartner) {
  const auto c = make_psk(4);
  const auto m = xor_map(4);
  const auto bc = psk_points(m.clusters());
  const Complex h(0.6, -0.4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Complex y = h * bc[static_cast<std::size_t>(m.label(a, b))];
      EXPECT_EQ(end_node_decode(m, bc, EndNode::A, a, h, y), b);
      EXPECT_EQ(end_node_decode(m, bc, EndNode::B, b, h, y), a);
      // With the XOR map the partner is the label XOR own symbol.
      EXPECT_EQ(end_node_decode(m, bc, EndNode::A, a, h, y), m.label(a, b) ^ a);
    }
}

TEST(EndNodeDecode, CorruptedSignalGoesToMatchingRowLabel) {
  const auto m = modulo_map(4);
  const auto bc = psk_points(4);
  // Node A owns symbol 1; the received point is the broadcast point of label 3,
  // which row 1 carries at column 2.
  EXPECT_EQ(end_node_decode(m, bc, EndNode::A, 1, 1.0, bc[3] * 1.01), 2);
  EXPECT_EQ(end_node_decode(m, bc, EndNode::B, 0, 1.0, bc[2]), 2);
}

TEST(Rng, SubstreamsAreDistinctAndReproducible) {
  EXPECT_EQ(derive_seed(1, {2, 3}), derive_seed(1, {2, 3}));
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(1, {3, 2}));
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(2, {2, 3}));
  auto a = make_engine(9, {1}), b = make_engine(9, {1});
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a(), b());
}

TEST(Rng, SeedFromEnvironment) {
  ::setenv("PNC_SEED", "0x2a", 1);
  EXPECT_EQ(seed_from_env(), std::optional<std::uint64_t>(42));
  ::setenv("PNC_SEED", "nope", 1);
  EXPECT_FALSE(seed_from_env().has_value());
  ::unsetenv("PNC_SEED");
  EXPECT_FALSE(seed_from_env().has_value());
}
