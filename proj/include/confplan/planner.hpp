#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "confplan/config_space.hpp"
#include "confplan/path.hpp"

namespace confplan {

/// Level-1 stacking rule. `distance` follows the plane construction (heights
/// h1 - |x_i - x_{a1}|) and is only valid for n = 2, where the distances on a
/// level are automatically distinct; `rank` spaces points by lex rank with a
/// synthetic floor h0 = h1 - 2.
enum class StackStrategy { distance, rank };

enum class TransferMode { sequential, simultaneous };

struct StrategyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline StackStrategy default_strategy(int dim) {
  return dim == 2 ? StackStrategy::distance : StackStrategy::rank;
}

struct PlanResult {
  PiecewisePath path;
  int domain = 0;                         // |A_x| + |A_y|
  std::pair<StratumId, StratumId> strata;
  std::pair<double, double> line_abscissas;  // p+1 and p+2
};

/// Maximum first coordinate over all 2k points of the pair.
inline double p_line(const Configuration& x, const Configuration& y) {
  if (x.dim != y.dim || x.size() != y.size())
    throw std::invalid_argument("p_line: configurations must share k and n");
  double p = x.points[0][0];
  for (const Point& pt : x.points) p = std::max(p, pt[0]);
  for (const Point& pt : y.points) p = std::max(p, pt[0]);
  return p;
}

/// Stacking targets on the vertical line at the given abscissa. Every target
/// has first coordinate = abscissa, transverse coordinates 0, and a height
/// assigned per level: level 1 by the chosen strategy, higher levels spaced by
/// lex rank inside the band between the previous height and the level height.
/// Labels are preserved.
inline Configuration line_targets(const Configuration& x, double abscissa,
                                  StackStrategy strategy) {
  x.validate();
  for (const Point& pt : x.points)
    if (pt[0] >= abscissa)
      throw std::invalid_argument("line_targets: abscissa must exceed every first coordinate");
  if (strategy == StackStrategy::distance && x.dim != 2)
    throw StrategyError("line_targets: distance strategy requires n = 2");

  const LevelDecomposition d = decompose(x);
  const std::size_t k = x.size();
  const std::size_t last = static_cast<std::size_t>(x.dim) - 1;

  std::vector<double> target_height(k);
  for (std::size_t label = 0; label < k; ++label) {
    const int level = d.level_of[label];
    const int a = d.partition.parts[static_cast<std::size_t>(level)];
    const int r = d.rank_in_level[label];  // 0-based lex rank
    const double h = d.heights.heights[static_cast<std::size_t>(level)];
    if (level == 0 && strategy == StackStrategy::distance) {
      // top-of-level anchor: the lex-largest point of level 1
      const std::size_t anchor = d.sigma.indices[static_cast<std::size_t>(a) - 1];
      double dist2 = 0.0;
      for (std::size_t c = 0; c <= last; ++c) {
        const double dc = x.points[label][c] - x.points[anchor][c];
        dist2 += dc * dc;
      }
      target_height[label] = h - std::sqrt(dist2);
    } else if (a == 1) {
      target_height[label] = h;  // singleton level keeps its height
    } else {
      const double h_prev = level == 0 ? h - 2.0
                                       : d.heights.heights[static_cast<std::size_t>(level) - 1];
      // rank j in 1..a goes to h - (a - j)(h - h_prev) / (2(a - 1))
      target_height[label] =
          h - static_cast<double>(a - 1 - r) * (h - h_prev) / (2.0 * static_cast<double>(a - 1));
    }
  }

  Configuration out;
  out.dim = x.dim;
  out.points.assign(k, Point(static_cast<std::size_t>(x.dim), 0.0));
  for (std::size_t label = 0; label < k; ++label) {
    out.points[label][0] = abscissa;
    out.points[label][last] = target_height[label];
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (target_height[i] == target_height[j])
        throw StrategyError("line_targets: stacking produced duplicate heights");
  return out;
}

/// Simultaneous straight-line motion from x onto its stacking targets.
inline PiecewisePath approach_path(const Configuration& x, double abscissa,
                                   StackStrategy strategy) {
  PiecewisePath path;
  path.breakpoints.push_back({0.0, x});
  path.breakpoints.push_back({1.0, line_targets(x, abscissa, strategy)});
  return path;
}

namespace detail {

/// Straight-line transfer between two vertical-line configurations with
/// corresponding labels. Sequential mode moves one label per time slice, in
/// increasing height order of the source stack; the moving segment's interior
/// stays strictly inside the open strip between the lines while everything
/// else sits on them.
inline PiecewisePath line_transfer(const Configuration& from, const Configuration& to,
                                   TransferMode mode) {
  from.validate();
  to.validate();
  if (from.dim != to.dim || from.size() != to.size())
    throw std::invalid_argument("line_transfer: configurations must share k and n");
  const double c1 = from.points[0][0];
  const double c2 = to.points[0][0];
  for (const Point& pt : from.points)
    if (pt[0] != c1) throw std::invalid_argument("line_transfer: source not on one line");
  for (const Point& pt : to.points)
    if (pt[0] != c2) throw std::invalid_argument("line_transfer: target not on one line");
  if (c1 == c2) throw std::invalid_argument("line_transfer: lines must be distinct");

  PiecewisePath path;
  if (mode == TransferMode::simultaneous) {
    path.breakpoints.push_back({0.0, from});
    path.breakpoints.push_back({1.0, to});
    return path;
  }
  const Permutation order = sort_permutation(from);
  const std::size_t k = from.size();
  Configuration current = from;
  path.breakpoints.push_back({0.0, current});
  for (std::size_t m = 0; m < k; ++m) {
    const std::size_t label = order.indices[m];
    current.points[label] = to.points[label];
    path.breakpoints.push_back({static_cast<double>(m + 1) / static_cast<double>(k), current});
  }
  return path;
}

}  // namespace detail

/// Transfer between the planner's two lines (target line one unit to the right).
inline PiecewisePath transfer_path(const Configuration& from, const Configuration& to,
                                   TransferMode mode = TransferMode::sequential) {
  from.validate();
  to.validate();
  if (from.dim != to.dim || from.size() != to.size())
    throw std::invalid_argument("transfer_path: configurations must share k and n");
  if (to.points[0][0] != from.points[0][0] + 1.0)
    throw std::invalid_argument("transfer_path: target line must sit at source abscissa + 1");
  return detail::line_transfer(from, to, mode);
}

/// Full local rule: approach of x onto the line at p+1 over [0,1/4], sequential
/// transfer to y's stack on the line at p+2 over [1/4,3/4], reversed approach
/// of y over [3/4,1]. Endpoints are the inputs, coordinatewise exact.
inline PlanResult plan(const Configuration& x, const Configuration& y,
                       TransferMode mode = TransferMode::sequential) {
  x.validate();
  y.validate();
  if (x.dim != y.dim || x.size() != y.size())
    throw std::invalid_argument("plan: configurations must share k and n");
  const double p = p_line(x, y);
  const StackStrategy strategy = default_strategy(x.dim);
  const Configuration stack_x = line_targets(x, p + 1.0, strategy);
  const Configuration stack_y = line_targets(y, p + 2.0, strategy);

  PlanResult result;
  result.domain = domain_index(x, y);
  result.strata = {stratum_of(x), stratum_of(y)};
  result.line_abscissas = {p + 1.0, p + 2.0};

  PiecewisePath& path = result.path;
  path.breakpoints.push_back({0.0, x});
  path.breakpoints.push_back({0.25, stack_x});
  const PiecewisePath transfer = detail::line_transfer(stack_x, stack_y, mode);
  for (std::size_t b = 1; b < transfer.breakpoints.size(); ++b)
    path.breakpoints.push_back(
        {0.25 + 0.5 * transfer.breakpoints[b].t, transfer.breakpoints[b].config});
  path.breakpoints.push_back({1.0, y});
  return result;
}

/// Concatenation of plan() legs through every waypoint, uniformly rescaled.
inline PiecewisePath plan_multi(std::span<const Configuration> waypoints,
                                TransferMode mode = TransferMode::sequential) {
  if (waypoints.size() < 2)
    throw std::invalid_argument("plan_multi: need at least two waypoints");
  std::vector<PiecewisePath> legs;
  legs.reserve(waypoints.size() - 1);
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
    legs.push_back(plan(waypoints[i], waypoints[i + 1], mode).path);
  return concatenate(legs);
}

}  // namespace confplan
