#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "pnc/gain.hpp"

using namespace pnc;

namespace {

// Slope -1 curve with a rate of 10^(-offset_db/10) at 0 dB.
std::vector<CurvePoint> line(double offset_db, double slope = -1.0) {
  std::vector<CurvePoint> out;
  for (double s = 0.0; s <= 50.0; s += 2.5) out.push_back({s, std::pow(10.0, slope * (s + offset_db) / 10.0)});
  return out;
}

}  // namespace

TEST(SnrAtRate, InterpolatesInLogDomain) {
  const std::vector<CurvePoint> c{{10.0, 1e-2}, {20.0, 1e-4}};
  EXPECT_NEAR(*snr_at_rate(c, 1e-3), 15.0, 1e-12);
  EXPECT_NEAR(*snr_at_rate(c, 1e-2), 10.0, 1e-12);
  EXPECT_NEAR(*snr_at_rate(c, 1e-4), 20.0, 1e-12);
  EXPECT_FALSE(snr_at_rate(c, 1e-5).has_value());
  EXPECT_FALSE(snr_at_rate(c, 0.5).has_value());
  EXPECT_FALSE(snr_at_rate(c, 0.0).has_value());
}

TEST(SnrAtRate, SkipsZeroRatePoints) {
  const std::vector<CurvePoint> c{{0.0, 1e-1}, {10.0, 1e-3}, {20.0, 0.0}};
  EXPECT_NEAR(*snr_at_rate(c, 1e-2), 5.0, 1e-12);
  EXPECT_FALSE(snr_at_rate(c, 1e-4).has_value());
}

TEST(ExtractGain, IdenticalAndShifted) {
  const auto a = line(0.0);
  EXPECT_NEAR(*extract_gain(a, a, 1e-3).gain_db, 0.0, 1e-12);
  // Target is 3 dB better.
  const auto b = line(3.0);
  const auto g = extract_gain(b, a, 1e-3);
  ASSERT_TRUE(g.gain_db.has_value());
  EXPECT_NEAR(*g.gain_db, 3.0, 1e-12);
  EXPECT_NEAR(*g.target_slope, -1.0, 1e-12);
  EXPECT_NEAR(*g.reference_slope, -1.0, 1e-12);
  EXPECT_FALSE(extract_gain(b, a, 1e-9).gain_db.has_value());
}

TEST(ExtractGain, TranslationEquivariant) {
  auto a = line(1.0, -1.2), b = line(5.0, -0.9);
  const double g0 = *extract_gain(b, a, 1e-3).gain_db;
  for (auto* c : {&a, &b})
    for (auto& p : *c) p.snr_db += 7.0;
  EXPECT_NEAR(*extract_gain(b, a, 1e-3).gain_db, g0, 1e-12);
}

TEST(FitSlope, RangeAndDegenerateInput) {
  const auto c = line(0.0, -2.0);
  EXPECT_NEAR(*fit_slope(c, 25.0, 45.0), -2.0, 1e-12);
  EXPECT_NEAR(*top_slope(c, 10.0), -2.0, 1e-12);
  EXPECT_FALSE(fit_slope(c, 11.0, 12.0).has_value());
  const std::vector<CurvePoint> single{{10.0, 1e-3}};
  EXPECT_FALSE(top_slope(single).has_value());
}
