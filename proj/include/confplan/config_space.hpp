#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace confplan {

using Point = std::vector<double>;

/// Ordered tuple of k pairwise-distinct labeled points in R^n.
struct Configuration {
  int dim = 0;                 // ambient dimension n >= 2
  std::vector<Point> points;   // k points, each of size dim

  std::size_t size() const { return points.size(); }

  void validate() const {
    if (dim < 2) throw std::invalid_argument("Configuration: dim must be >= 2");
    if (points.empty()) throw std::invalid_argument("Configuration: k must be >= 1");
    for (const Point& p : points) {
      if (static_cast<int>(p.size()) != dim)
        throw std::invalid_argument("Configuration: point dimension mismatch");
    }
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (points[i] == points[j])
          throw std::invalid_argument("Configuration: points must be pairwise distinct");
  }

  bool operator==(const Configuration& other) const = default;
};

/// Bijection on {0,...,k-1} stored as the image list.
struct Permutation {
  std::vector<std::size_t> indices;

  std::size_t size() const { return indices.size(); }
  bool is_identity() const {
    for (std::size_t i = 0; i < indices.size(); ++i)
      if (indices[i] != i) return false;
    return true;
  }
  bool operator==(const Permutation& other) const = default;
};

/// Ordered sizes of the levels; parts sum to k.
struct Partition {
  std::vector<int> parts;

  int levels() const { return static_cast<int>(parts.size()); }
  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  bool operator==(const Partition& other) const = default;
};

/// Strictly increasing last-coordinate values of the levels.
struct LevelHeights {
  std::vector<double> heights;
  bool operator==(const LevelHeights& other) const = default;
};

/// Identifies the stratum a configuration belongs to.
struct StratumId {
  Partition partition;
  Permutation order;
  bool operator==(const StratumId& other) const = default;
};

enum class Ordering { less, equal, greater };

/// Reverse-lexicographic comparison: coordinate n first, then n-1, ..., then 1.
/// Restricts to the plane order "(b1,b2) <= (c1,c2) iff b2 < c2, or b2 = c2 and b1 <= c1".
inline Ordering lex_compare(const Point& p, const Point& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("lex_compare: dimension mismatch");
  for (std::size_t c = p.size(); c-- > 0;) {
    if (p[c] < q[c]) return Ordering::less;
    if (p[c] > q[c]) return Ordering::greater;
  }
  return Ordering::equal;
}

inline bool lex_less(const Point& p, const Point& q) {
  return lex_compare(p, q) == Ordering::less;
}

/// The unique sigma with x[sigma(0)] < x[sigma(1)] < ... in the reverse-lex order.
inline Permutation sort_permutation(const Configuration& x) {
  x.validate();
  Permutation sigma;
  sigma.indices.resize(x.size());
  std::iota(sigma.indices.begin(), sigma.indices.end(), std::size_t{0});
  std::sort(sigma.indices.begin(), sigma.indices.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(x.points[a], x.points[b]); });
  return sigma;
}

/// Groups the lex-sorted points by equal last coordinate (exact equality).
inline std::pair<Partition, LevelHeights> partition_of(const Configuration& x) {
  const Permutation sigma = sort_permutation(x);
  Partition part;
  LevelHeights lv;
  const std::size_t last = static_cast<std::size_t>(x.dim) - 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = x.points[sigma.indices[i]][last];
    if (lv.heights.empty() || h != lv.heights.back()) {
      lv.heights.push_back(h);
      part.parts.push_back(1);
    } else {
      ++part.parts.back();
    }
  }
  return {part, lv};
}

inline StratumId stratum_of(const Configuration& x) {
  return {partition_of(x).first, sort_permutation(x)};
}

/// i = |A_x| + |A_y|, the planning-domain index; 2 <= i <= 2k.
inline int domain_index(const Configuration& x, const Configuration& y) {
  if (x.size() != y.size() || x.dim != y.dim)
    throw std::invalid_argument("domain_index: configurations must share k and n");
  return partition_of(x).first.levels() + partition_of(y).first.levels();
}

/// Per-point level/rank bookkeeping derived from the sorted order.
struct LevelDecomposition {
  Permutation sigma;
  Partition partition;
  LevelHeights heights;
  std::vector<int> level_of;      // per label: 0-based level index
  std::vector<int> rank_in_level; // per label: 0-based lex rank within its level
};

inline LevelDecomposition decompose(const Configuration& x) {
  LevelDecomposition d;
  d.sigma = sort_permutation(x);
  auto [part, lv] = partition_of(x);
  d.partition = std::move(part);
  d.heights = std::move(lv);
  d.level_of.resize(x.size());
  d.rank_in_level.resize(x.size());
  std::size_t pos = 0;
  for (int level = 0; level < d.partition.levels(); ++level) {
    for (int r = 0; r < d.partition.parts[static_cast<std::size_t>(level)]; ++r, ++pos) {
      const std::size_t label = d.sigma.indices[pos];
      d.level_of[label] = level;
      d.rank_in_level[label] = r;
    }
  }
  return d;
}

/// Minimum gap between consecutive level heights (+inf for a single level).
inline double min_height_gap(const Configuration& x) {
  const auto lv = partition_of(x).second.heights;
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < lv.size(); ++i) g = std::min(g, lv[i] - lv[i - 1]);
  return g;
}

}  // namespace confplan
