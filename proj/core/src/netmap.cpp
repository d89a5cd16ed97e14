#include "pnc/netmap.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "pnc/errors.hpp"

namespace pnc {

ClusterMap::ClusterMap(int order, std::vector<int> labels)
    : order_(order), clusters_(0), labels_(std::move(labels)) {
  if (order < 1) throw InvalidArgument("map order must be positive");
  if (labels_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
    throw InvalidArgument("map needs order*order labels");
  }
  for (int l : labels_) {
    if (l < 0) throw InvalidArgument("cluster labels must be non-negative");
    clusters_ = std::max(clusters_, l + 1);
  }
}

bool check_exclusive_law(const ClusterMap& m) {
  const int n = m.order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (m.label(i, j) == m.label(i, k)) return false;  // row
        if (m.label(j, i) == m.label(k, i)) return false;  // column
      }
    }
  }
  return true;
}

ClusterMap xor_map(int order) {
  if (order < 1 || !std::has_single_bit(static_cast<unsigned>(order))) {
    throw InvalidArgument("XOR map needs a power-of-two order");
  }
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(order * order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) labels.push_back(i ^ j);
  return ClusterMap(order, std::move(labels));
}

ClusterMap modulo_map(int order) {
  if (order < 1) throw InvalidArgument("modulo map needs a positive order");
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(order * order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) labels.push_back((i + j) % order);
  return ClusterMap(order, std::move(labels));
}

namespace {

void require_compatible(const ClusterMap& m, const Constellation& c) {
  if (m.order() != c.size()) throw InvalidArgument("map order does not match constellation size");
}

}  // namespace

ClusterDistanceProfile min_cluster_distance(const ClusterMap& m, const Constellation& c,
                                            Complex z) {
  require_compatible(m, c);
  if (!check_exclusive_law(m)) throw InvalidArgument("map violates the exclusive law");
  const int n = c.size();
  const int cells = n * n;
  ClusterDistanceProfile profile;
  profile.fade_state = z;
  profile.min_cluster_distance = std::numeric_limits<double>::infinity();
  for (int p = 0; p < cells; ++p) {
    for (int q = p + 1; q < cells; ++q) {
      const int a = p / n, b = p % n, ap = q / n, bp = q % n;
      if (m.label(a, b) == m.label(ap, bp)) continue;
      const double d = std::abs((c.point(a) - c.point(ap)) + z * (c.point(b) - c.point(bp)));
      if (d < profile.min_cluster_distance) {
        profile.min_cluster_distance = d;
        profile.argmin_first = p;
        profile.argmin_second = q;
      }
    }
  }
  return profile;
}

bool removes(const ClusterMap& m, const Constellation& c, Complex s, double tol) {
  return min_cluster_distance(m, c, s).min_cluster_distance > tol;
}

ClusterDistance::ClusterDistance(const ClusterMap& m, const Constellation& c) {
  require_compatible(m, c);
  const int n = c.size();
  const int cells = n * n;
  using Key = std::tuple<long long, long long, long long, long long>;
  std::set<Key> seen;
  auto quant = [](double v) { return std::llround(v * 1e8); };
  for (int p = 0; p < cells; ++p) {
    for (int q = p + 1; q < cells; ++q) {
      const int a = p / n, b = p % n, ap = q / n, bp = q % n;
      if (m.label(a, b) == m.label(ap, bp)) continue;
      Complex da = c.point(a) - c.point(ap);
      Complex db = c.point(b) - c.point(bp);
      Key key{quant(da.real()), quant(da.imag()), quant(db.real()), quant(db.imag())};
      // (da, db) and (-da, -db) give the same distance; keep one sign.
      const auto& [r0, i0, r1, i1] = key;
      const long long lead = r0 != 0 ? r0 : i0 != 0 ? i0 : r1 != 0 ? r1 : i1;
      if (lead < 0) {
        da = -da;
        db = -db;
        key = Key{-r0, -i0, -r1, -i1};
      }
      if (!seen.insert(key).second) continue;
      da_re_.push_back(da.real());
      da_im_.push_back(da.imag());
      db_re_.push_back(db.real());
      db_im_.push_back(db.imag());
    }
  }
}

double ClusterDistance::squared(Complex z) const {
  return squared_below(z, -1.0);
}

double ClusterDistance::squared_below(Complex z, double bound) const {
  const double zr = z.real(), zi = z.imag();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < da_re_.size(); ++k) {
    const double re = da_re_[k] + zr * db_re_[k] - zi * db_im_[k];
    const double im = da_im_[k] + zr * db_im_[k] + zi * db_re_[k];
    const double d = re * re + im * im;
    if (d < best) {
      best = d;
      if (best <= bound) return best;
    }
  }
  return best;
}

namespace {

// Disjoint-set forest over the M^2 cells.
class CellUnion {
 public:
  explicit CellUnion(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }

 private:
  std::vector<int> parent_;
};

std::vector<std::pair<int, int>> index_pairs_with_difference(const Constellation& c, Complex d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < c.size(); ++i)
    for (int k = 0; k < c.size(); ++k)
      if (std::abs(c.point(i) - c.point(k) - d) < kDedupTolerance) out.emplace_back(i, k);
  return out;
}

// Cell pairs that collide at fade state z (zero distance).
std::vector<std::pair<int, int>> collision_pairs(const Constellation& c, Complex z) {
  const int n = c.size();
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < n * n; ++p) {
    for (int q = p + 1; q < n * n; ++q) {
      const Complex d = (c.point(p / n) - c.point(q / n)) + z * (c.point(p % n) - c.point(q % n));
      if (std::abs(d) < kRemovalTolerance) out.emplace_back(p, q);
    }
  }
  return out;
}

class GroupColouring {
 public:
  GroupColouring(std::vector<std::vector<int>> adjacency,
                 std::vector<std::vector<std::pair<int, int>>> keep_pairs, std::size_t budget)
      : adjacency_(std::move(adjacency)), keep_pairs_(std::move(keep_pairs)), budget_(budget) {}

  // Colours groups 0..G-1 in order with at most `colours` colours.
  bool solve(int colours) {
    colours_ = colours;
    nodes_ = 0;
    colour_.assign(adjacency_.size(), -1);
    return extend(0, -1);
  }
  const std::vector<int>& colours() const { return colour_; }

 private:
  bool extend(std::size_t g, int max_used) {
    if (g == adjacency_.size()) return keeps_all();
    if (++nodes_ > budget_) return false;
    const int limit = std::min(colours_ - 1, max_used + 1);
    for (int col = 0; col <= limit; ++col) {
      bool clash = false;
      for (int other : adjacency_[g]) {
        if (colour_[static_cast<std::size_t>(other)] == col) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colour_[g] = col;
      if (extend(g + 1, std::max(max_used, col))) return true;
      if (nodes_ > budget_) break;
    }
    colour_[g] = -1;
    return false;
  }

  // Every kept state needs at least one colliding pair split across clusters.
  bool keeps_all() const {
    for (const auto& pairs : keep_pairs_) {
      bool split = false;
      for (const auto& [gp, gq] : pairs) {
        if (colour_[static_cast<std::size_t>(gp)] != colour_[static_cast<std::size_t>(gq)]) {
          split = true;
          break;
        }
      }
      if (!split) return false;
    }
    return true;
  }

  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<std::pair<int, int>>> keep_pairs_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  int colours_ = 0;
  std::vector<int> colour_;
};

std::string describe(Complex s) {
  return "(" + std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")";
}

}  // namespace

ClusterMap build_removal_map(const Constellation& c, const SingularState& s,
                             const RemovalOptions& options) {
  const int n = c.size();
  const int cells = n * n;
  if (s.generators.empty()) throw InvalidArgument("singular state has no generators");

  CellUnion forest(cells);
  for (const DifferencePair& g : s.generators) {
    const auto rows = index_pairs_with_difference(c, g.da);
    const auto cols = index_pairs_with_difference(c, g.db);
    for (const auto& [a, ap] : rows)
      for (const auto& [b, bp] : cols) forest.unite(a * n + b, ap * n + bp);
  }

  // Groups numbered by their first cell in row-major order.
  std::vector<int> group_of(static_cast<std::size_t>(cells), -1);
  std::vector<int> group_of_root(static_cast<std::size_t>(cells), -1);
  std::vector<std::vector<int>> members;
  for (int p = 0; p < cells; ++p) {
    const int root = forest.find(p);
    auto& g = group_of_root[static_cast<std::size_t>(root)];
    if (g < 0) {
      g = static_cast<int>(members.size());
      members.emplace_back();
    }
    group_of[static_cast<std::size_t>(p)] = g;
    members[static_cast<std::size_t>(g)].push_back(p);
  }

  const std::size_t groups = members.size();
  std::vector<std::vector<int>> adjacency(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    const auto& cells_g = members[g];
    for (std::size_t i = 0; i < cells_g.size(); ++i) {
      for (std::size_t k = i + 1; k < cells_g.size(); ++k) {
        const int p = cells_g[i], q = cells_g[k];
        if (p / n == q / n || p % n == q % n) {
          throw ConstructionInfeasible("singular state " + describe(s.value) +
                                       " forces two cells of one row or column into a cluster");
        }
      }
    }
  }
  for (int p = 0; p < cells; ++p) {
    for (int q = p + 1; q < cells; ++q) {
      if (p / n != q / n && p % n != q % n) continue;
      const int gp = group_of[static_cast<std::size_t>(p)];
      const int gq = group_of[static_cast<std::size_t>(q)];
      auto& adj = adjacency[static_cast<std::size_t>(std::max(gp, gq))];
      const int lower = std::min(gp, gq);
      if (std::find(adj.begin(), adj.end(), lower) == adj.end()) adj.push_back(lower);
    }
  }

  std::vector<std::vector<std::pair<int, int>>> keep_pairs;
  for (const Complex& z : options.keep_singular) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [p, q] : collision_pairs(c, z)) {
      pairs.emplace_back(group_of[static_cast<std::size_t>(p)], group_of[static_cast<std::size_t>(q)]);
    }
    keep_pairs.push_back(std::move(pairs));
  }

  GroupColouring colouring(std::move(adjacency), std::move(keep_pairs), options.node_budget);
  for (int colours = n; colours <= static_cast<int>(groups); ++colours) {
    if (!colouring.solve(colours)) continue;
    std::vector<int> labels(static_cast<std::size_t>(cells));
    for (int p = 0; p < cells; ++p) {
      labels[static_cast<std::size_t>(p)] =
          colouring.colours()[static_cast<std::size_t>(group_of[static_cast<std::size_t>(p)])];
    }
    return ClusterMap(n, std::move(labels));
  }
  throw ConstructionInfeasible("no exclusive-law completion removes " + describe(s.value) +
                               " while keeping the requested states");
}

}  // namespace pnc
