#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "confplan/config_space.hpp"

namespace confplan {

/// Time-stamped sequence of configurations with linear interpolation between
/// breakpoints. Times are strictly increasing from 0 to 1.
struct PiecewisePath {
  struct Breakpoint {
    double t = 0.0;
    Configuration config;
    bool operator==(const Breakpoint&) const = default;
  };

  std::vector<Breakpoint> breakpoints;

  std::size_t segments() const {
    return breakpoints.size() < 2 ? 0 : breakpoints.size() - 1;
  }

  void validate() const {
    if (breakpoints.size() < 2)
      throw std::invalid_argument("PiecewisePath: need at least two breakpoints");
    if (breakpoints.front().t != 0.0 || breakpoints.back().t != 1.0)
      throw std::invalid_argument("PiecewisePath: times must span [0,1]");
    const Configuration& first = breakpoints.front().config;
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
      if (i > 0 && breakpoints[i].t <= breakpoints[i - 1].t)
        throw std::invalid_argument("PiecewisePath: times must strictly increase");
      const Configuration& c = breakpoints[i].config;
      c.validate();
      if (c.dim != first.dim || c.size() != first.size())
        throw std::invalid_argument("PiecewisePath: configurations must share k and n");
    }
  }

  /// Position at time t by coordinatewise linear interpolation.
  Configuration at(double t) const {
    if (breakpoints.empty()) throw std::invalid_argument("PiecewisePath: empty");
    if (t <= breakpoints.front().t) return breakpoints.front().config;
    if (t >= breakpoints.back().t) return breakpoints.back().config;
    std::size_t hi = 1;
    while (breakpoints[hi].t < t) ++hi;
    const Breakpoint& a = breakpoints[hi - 1];
    const Breakpoint& b = breakpoints[hi];
    const double s = (t - a.t) / (b.t - a.t);
    Configuration out = a.config;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (int c = 0; c < out.dim; ++c) {
        const std::size_t cc = static_cast<std::size_t>(c);
        out.points[i][cc] = (1.0 - s) * a.config.points[i][cc] + s * b.config.points[i][cc];
      }
    return out;
  }

  bool operator==(const PiecewisePath&) const = default;
};

/// Concatenates paths end to end; each piece gets an equal share of [0,1].
/// Junction configurations must match exactly and are kept once.
inline PiecewisePath concatenate(const std::vector<PiecewisePath>& pieces) {
  if (pieces.empty()) throw std::invalid_argument("concatenate: no pieces");
  PiecewisePath out;
  const double span = 1.0 / static_cast<double>(pieces.size());
  for (std::size_t m = 0; m < pieces.size(); ++m) {
    const double t0 = static_cast<double>(m) * span;
    for (std::size_t b = 0; b < pieces[m].breakpoints.size(); ++b) {
      if (m > 0 && b == 0) continue;  // junction already emitted
      double t = t0 + pieces[m].breakpoints[b].t * span;
      if (m + 1 == pieces.size() && b + 1 == pieces[m].breakpoints.size()) t = 1.0;
      out.breakpoints.push_back({t, pieces[m].breakpoints[b].config});
    }
  }
  return out;
}

}  // namespace confplan
