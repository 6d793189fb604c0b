#pragma once

#include <cstddef>
#include <stdexcept>

#include "confplan/config_space.hpp"
#include "confplan/path.hpp"
#include "confplan/planner.hpp"

namespace confplan {

/// Index of the categorical cover member containing x: the level count |A_x|.
struct CoverIndex {
  int i = 1;
};

inline CoverIndex cover_index(const Configuration& x) {
  return {partition_of(x).first.levels()};
}

/// Fixed base configuration: k points stacked on the z_n-axis at heights
/// 0, 1, ..., k-1.
inline Configuration canonical_base(int n, int k) {
  if (n < 2) throw std::invalid_argument("canonical_base: n must be >= 2");
  if (k < 1) throw std::invalid_argument("canonical_base: k must be >= 1");
  Configuration out;
  out.dim = n;
  out.points.assign(static_cast<std::size_t>(k), Point(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < k; ++i)
    out.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(n) - 1] =
        static_cast<double>(i);
  return out;
}

/// Null homotopy of x inside the configuration space, ending exactly at
/// canonical_base(n, k). Phases: stack onto the line at p(x,x)+1; renormalize
/// heights to 0..k-1 in stacking order (linear interpolation of strictly
/// increasing height lists stays increasing); translate the stack to abscissa
/// 1; sequential transfer onto the base's axis in canonical label order.
inline PiecewisePath contraction_path(const Configuration& x) {
  x.validate();
  const int n = x.dim;
  const std::size_t k = x.size();
  const std::size_t last = static_cast<std::size_t>(n) - 1;
  const double abscissa = p_line(x, x) + 1.0;

  const Configuration stacked = line_targets(x, abscissa, default_strategy(n));
  const Permutation order = sort_permutation(stacked);

  Configuration renormalized = stacked;
  for (std::size_t m = 0; m < k; ++m)
    renormalized.points[order.indices[m]][last] = static_cast<double>(m);

  Configuration shifted = renormalized;
  for (std::size_t i = 0; i < k; ++i) shifted.points[i][0] = 1.0;

  const Configuration base = canonical_base(n, static_cast<int>(k));
  const PiecewisePath transfer = detail::line_transfer(shifted, base, TransferMode::sequential);

  PiecewisePath path;
  path.breakpoints.push_back({0.0, x});
  path.breakpoints.push_back({0.25, stacked});
  path.breakpoints.push_back({0.5, renormalized});
  path.breakpoints.push_back({0.75, shifted});
  for (std::size_t b = 1; b < transfer.breakpoints.size(); ++b)
    path.breakpoints.push_back(
        {0.75 + 0.25 * transfer.breakpoints[b].t, transfer.breakpoints[b].config});
  return path;
}

}  // namespace confplan
