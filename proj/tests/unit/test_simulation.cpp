#include <gtest/gtest.h>

#include <cmath>

#include "pnc/channel.hpp"
#include "pnc/errors.hpp"
#include "pnc/simulation.hpp"

using namespace pnc;

namespace {

SimulationConfig config(Scheme scheme, std::vector<double> snr, std::uint64_t trials) {
  SimulationConfig cfg;
  cfg.scheme = scheme;
  cfg.snr_db = std::move(snr);
  cfg.max_trials = trials;
  cfg.target_errors = 1'000'000'000;
  return cfg;
}

bool same(const SerEstimate& a, const SerEstimate& b) {
  return a.trials == b.trials && a.errors_a == b.errors_a && a.errors_b == b.errors_b &&
         a.errors_union == b.errors_union && a.bit_errors == b.bit_errors;
}

}  // namespace

TEST(SimulateSer, SameSeedSameResultAnyWorkerCount) {
  const auto c = make_psk(4);
  const auto policy = make_policy(Scheme::AdaptiveAll, c);
  auto cfg = config(Scheme::AdaptiveAll, {5.0, 15.0}, 50'000);
  cfg.target_errors = 300;
  const auto one = simulate_ser(cfg, policy);
  cfg.workers = 3;
  const auto three = simulate_ser(cfg, policy);
  ASSERT_EQ(one.size(), three.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_TRUE(same(one[i], three[i]));
  cfg.seed = 2;
  const auto other = simulate_ser(cfg, policy);
  EXPECT_FALSE(same(one[1], other[1]));
}

TEST(SimulateSer, EarlyStopOnBlockBoundary) {
  const auto c = make_psk(4);
  auto cfg = config(Scheme::FixedModulo, {10.0}, 10'000'000);
  cfg.target_errors = 500;
  cfg.block_size = 1000;
  const auto r = simulate_ser(cfg, make_policy(Scheme::FixedModulo, c)).front();
  EXPECT_GE(r.errors_union, 500u);
  EXPECT_EQ(r.trials % 1000, 0u);
  EXPECT_LT(r.trials, 10'000'000u);
}

TEST(SimulateSer, TrialCapIsExact) {
  const auto c = make_psk(4);
  auto cfg = config(Scheme::FixedXor, {40.0}, 12'345);
  cfg.block_size = 1000;
  const auto r = simulate_ser(cfg, make_policy(Scheme::FixedXor, c)).front();
  EXPECT_EQ(r.trials, 12'345u);
}

TEST(SimulateSer, VeryLowSnrIsNearUniformGuessing) {
  const auto c = make_psk(4);
  const auto r = simulate_ser(config(Scheme::FixedModulo, {-30.0}, 200'000),
                              make_policy(Scheme::FixedModulo, c)).front();
  const double n = static_cast<double>(r.trials);
  EXPECT_NEAR(r.errors_a / n, 0.75, 0.01);
  EXPECT_NEAR(r.errors_b / n, 0.75, 0.01);
  // The two end nodes see independent noise.
  EXPECT_NEAR(r.ser, 1.0 - 1.0 / 16.0, 0.01);
  EXPECT_NEAR(r.ber, 0.5, 0.01);
}

TEST(SimulateSer, ErrorRateFallsWithSnr) {
  const auto c = make_psk(4);
  for (Scheme s : {Scheme::FixedModulo, Scheme::AdaptiveDominant}) {
    auto cfg = config(s, {0.0, 5.0, 10.0, 15.0, 20.0, 25.0}, 2'000'000);
    cfg.target_errors = 400;
    const auto r = simulate_ser(cfg, make_policy(s, c));
    for (std::size_t i = 1; i < r.size(); ++i) {
      const double se = std::hypot(r[i].std_error, r[i - 1].std_error);
      EXPECT_LE(r[i].ser, r[i - 1].ser + 3 * se);
    }
    for (const auto& e : r) {
      EXPECT_LE(e.errors_a, e.trials);
      EXPECT_LE(e.errors_union, e.errors_a + e.errors_b);
      EXPECT_GE(e.errors_union, std::max(e.errors_a, e.errors_b));
    }
  }
}

TEST(SimulateSer, RejectsMismatchedInputs) {
  const auto c = make_psk(4);
  const auto adaptive = make_policy(Scheme::AdaptiveAll, c);
  EXPECT_THROW(simulate_ser(config(Scheme::FixedModulo, {10.0}, 10), adaptive), InvalidArgument);
  EXPECT_THROW(simulate_ser(config(Scheme::AdaptiveAll, {}, 10), adaptive), InvalidArgument);
  EXPECT_THROW(simulate_ser(config(Scheme::AdaptiveAll, {10.0}, 0), adaptive), InvalidArgument);
  auto cfg = config(Scheme::AdaptiveAll, {10.0}, 10);
  cfg.order = 8;
  EXPECT_THROW(simulate_ser(cfg, adaptive), InvalidArgument);
}

TEST(Policy, SchemesCarryTheExpectedLibraries) {
  const auto c = make_psk(4);
  EXPECT_FALSE(make_policy(Scheme::FixedXor, c).adaptive());
  EXPECT_EQ(make_policy(Scheme::AdaptiveAll, c).map_count(), 13);
  EXPECT_EQ(make_policy(Scheme::AdaptiveDominant, c).map_count(), 6);
  EXPECT_EQ(make_policy(Scheme::AdaptiveOnlyS1, c).map_count(), 2);
  const auto but = make_policy(Scheme::AdaptiveAllButS1, c);
  EXPECT_EQ(but.map_count(), 12);
  for (int id = 0; id < but.map_count(); ++id) EXPECT_FALSE(removes(but.map(id), c, 1.0));
  for (Scheme s : all_schemes()) EXPECT_EQ(parse_scheme(to_string(s)), s);
  EXPECT_THROW(parse_scheme("adaptive-some"), InvalidArgument);
}

TEST(Policy, EffectiveRemovedStates) {
  const auto c = make_psk(4);
  EXPECT_TRUE(effective_removed_states(make_policy(Scheme::FixedModulo, c)).empty());
  EXPECT_EQ(effective_removed_states(make_policy(Scheme::AdaptiveAll, c)).size(), 12u);
  for (const auto& s : effective_removed_states(make_policy(Scheme::AdaptiveAllButS1, c)))
    EXPECT_GT(std::abs(s.value - 1.0), 1e-9);
}

// Plain Monte Carlo of the same event, without importance sampling.
double plain_pairwise(const RelayPolicy& policy, SymbolPair sent, SymbolPair decoded, double snr_db,
                      int draws, std::uint64_t seed) {
  const auto& c = policy.constellation();
  Engine rng(seed);
  RicianSampler rician(RicianParams{4.0});
  ComplexGaussian noise;
  const double sigma2 = std::pow(10.0, -snr_db / 10.0);
  int hits = 0;
  for (int t = 0; t < draws; ++t) {
    const Complex ha = rician(rng), hb = rician(rng);
    const Complex y = ha * c.point(sent.a) + hb * c.point(sent.b) + noise(rng, sigma2);
    if (relay_ml_decode(c, ha, hb, y) != decoded) continue;
    const auto& m = policy.map(policy.adaptive() ? policy.select(hb / ha) : 0);
    hits += m.label(sent.a, sent.b) != m.label(decoded.a, decoded.b);
  }
  return static_cast<double>(hits) / draws;
}

TEST(EstimatePairwise, ImportanceSamplingAgreesWithPlainMonteCarlo) {
  const auto c = make_psk(4);
  struct Case {
    Scheme scheme;
    SymbolPair sent, decoded;
  };
  const Case cases[] = {
      {Scheme::FixedModulo, {0, 2}, {2, 0}},     // s = 1 cross pair
      {Scheme::AdaptiveAll, {0, 1}, {1, 2}},     // cross pair, removed state
      {Scheme::AdaptiveAll, {0, 0}, {0, 1}},     // same x_A
      {Scheme::FixedModulo, {1, 3}, {2, 3}},     // same x_B
  };
  for (const auto& k : cases) {
    const auto policy = make_policy(k.scheme, c);
    SimulationConfig cfg;
    cfg.scheme = k.scheme;
    cfg.snr_db = {12.0};
    const auto is = estimate_pairwise(cfg, k.sent, k.decoded, policy, 400'000).front();
    const int draws = 2'000'000;
    const double plain = plain_pairwise(policy, k.sent, k.decoded, 12.0, draws, 77);
    const double plain_se = std::sqrt(std::max(plain, 1e-7) / draws);
    EXPECT_NEAR(is.probability, plain, 4.0 * std::hypot(is.std_error, plain_se))
        << to_string(k.scheme) << " IS=" << is.probability << " plain=" << plain;
  }
}

TEST(EstimatePairwise, DeterministicAndValidated) {
  const auto c = make_psk(4);
  const auto policy = make_policy(Scheme::AdaptiveAll, c);
  SimulationConfig cfg;
  cfg.snr_db = {30.0};
  const auto a = estimate_pairwise(cfg, {0, 1}, {1, 2}, policy, 20'000).front();
  cfg.workers = 4;
  const auto b = estimate_pairwise(cfg, {0, 1}, {1, 2}, policy, 20'000).front();
  EXPECT_EQ(a.probability, b.probability);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_THROW(estimate_pairwise(cfg, {0, 1}, {0, 1}, policy), InvalidArgument);
  EXPECT_THROW(estimate_pairwise(cfg, {0, 4}, {0, 1}, policy), InvalidArgument);
}
