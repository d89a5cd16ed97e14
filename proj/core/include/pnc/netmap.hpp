#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "pnc/constellation.hpp"
#include "pnc/singular.hpp"

namespace pnc {

/// Network-coding map: an M x M table of cluster labels, rows indexed by the
/// x_A symbol index and columns by the x_B symbol index.
class ClusterMap {
 public:
  /// `labels` is row-major with order*order non-negative entries.
  ClusterMap(int order, std::vector<int> labels);

  int order() const { return order_; }
  /// Number of clusters L (one more than the largest label).
  int clusters() const { return clusters_; }
  int label(int a, int b) const {
    return labels_[static_cast<std::size_t>(a * order_ + b)];
  }
  std::span<const int> labels() const { return labels_; }

  friend bool operator==(const ClusterMap&, const ClusterMap&) = default;

 private:
  int order_;
  int clusters_;
  std::vector<int> labels_;
};

/// True iff no label repeats within any row or any column.
bool check_exclusive_law(const ClusterMap& m);

/// labels[i][j] = i XOR j. Requires order to be a power of two.
ClusterMap xor_map(int order);
/// labels[i][j] = (i + j) mod order.
ClusterMap modulo_map(int order);

struct ClusterDistanceProfile {
  Complex fade_state;
  double min_cluster_distance = 0.0;
  // Row-major cell indices (a * M + b) of a closest cross-cluster pair.
  int argmin_first = -1;
  int argmin_second = -1;
};

/// Minimum cluster distance of m at fade state z (distances normalized by
/// H_A), by brute force over all cross-cluster pairs. Throws InvalidArgument
/// if m violates the exclusive law.
ClusterDistanceProfile min_cluster_distance(const ClusterMap& m, const Constellation& c,
                                            Complex z);

inline constexpr double kRemovalTolerance = 1e-9;

/// True iff min_cluster_distance(m, c, s) > tol.
bool removes(const ClusterMap& m, const Constellation& c, Complex s,
             double tol = kRemovalTolerance);

/// Fast evaluator of a map's minimum cluster distance. Stores the distinct
/// cross-cluster difference pairs (up to sign) so one evaluation costs
/// O(#pairs) instead of O(M^4).
class ClusterDistance {
 public:
  ClusterDistance(const ClusterMap& m, const Constellation& c);

  double operator()(Complex z) const { return std::sqrt(squared(z)); }
  double squared(Complex z) const;
  /// Exact squared distance when it exceeds `bound`; otherwise some value <= bound
  /// (evaluation stops early).
  double squared_below(Complex z, double bound) const;

  std::size_t pair_count() const { return da_re_.size(); }

 private:
  std::vector<double> da_re_, da_im_, db_re_, db_im_;
};

struct RemovalOptions {
  /// States the constructed map must NOT remove.
  std::vector<Complex> keep_singular;
  /// Backtracking node budget per cluster count before moving to L + 1.
  std::size_t node_budget = 2'000'000;
};

/// Builds an exclusive-law map in which every generator pair of `s` shares a
/// cluster, so the map removes s. Cluster count is the smallest L reachable
/// by row-major backtracking with ascending colours. Throws
/// ConstructionInfeasible if s's constraints force a row/column clash, or if
/// no completion satisfies `options.keep_singular`.
ClusterMap build_removal_map(const Constellation& c, const SingularState& s,
                             const RemovalOptions& options = {});

}  // namespace pnc
