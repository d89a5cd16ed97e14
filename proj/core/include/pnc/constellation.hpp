#pragma once

#include <complex>
#include <span>
#include <vector>

namespace pnc {

using Complex = std::complex<double>;

/// Tolerance used when deduplicating complex values of order one.
inline constexpr double kDedupTolerance = 1e-9;

/// Unit-energy M-PSK signal set shared by both end nodes.
///
/// Points are ordered by phase index k, point k = exp(j(pi/M + 2 pi k/M)).
/// labels()[k] is the Gray-coded bit label carried by point k.
class Constellation {
 public:
  /// Builds M-PSK for M in {2, 4, 8, 16}; throws InvalidArgument otherwise.
  static Constellation psk(int order);

  int size() const { return static_cast<int>(points_.size()); }
  int bits_per_symbol() const { return bits_; }
  std::span<const Complex> points() const { return points_; }
  const Complex& point(int index) const { return points_[static_cast<std::size_t>(index)]; }
  std::span<const int> labels() const { return labels_; }

 private:
  Constellation(std::vector<Complex> points, std::vector<int> labels, int bits);

  std::vector<Complex> points_;
  std::vector<int> labels_;
  int bits_ = 0;
};

inline Constellation make_psk(int order) { return Constellation::psk(order); }

/// Unit-energy L-PSK points with phase offset pi/L, for any L >= 1.
/// Used as the relay's broadcast signal set, whose size need not be a power of two.
std::vector<Complex> psk_points(int order);

/// Minimum pairwise distance of unit-energy L-PSK: 2 sin(pi/L).
double psk_min_distance(int order);

/// Difference constellation {x - x'}: negation-closed and containing zero.
struct DifferenceSet {
  std::vector<Complex> values;

  bool contains(Complex value, double tol = kDedupTolerance) const;
};

DifferenceSet difference_set(const Constellation& c);

struct EffectivePoint {
  int a = 0;  // x_A index
  int b = 0;  // x_B index
  Complex value;
};

/// The M^2 superimposed points H_A x_A + H_B x_B, row-major in (x_A, x_B).
std::vector<EffectivePoint> effective_constellation(const Constellation& c, Complex ha,
                                                    Complex hb);

/// Minimum distance of the effective relay constellation, by brute force.
double min_distance(const Constellation& c, Complex ha, Complex hb);

}  // namespace pnc
