#pragma once

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "confplan/config_space.hpp"
#include "confplan/path.hpp"

namespace confplan {

/// Absolute epsilon for the "coordinate is zero" tests of the crossing
/// detector. Overridable via CONFPLAN_EPS.
inline double default_collision_epsilon() {
  if (const char* env = std::getenv("CONFPLAN_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return 1e-12;
}

struct CollisionWitness {
  std::size_t segment = 0;  // breakpoint interval index
  std::size_t i = 0;        // colliding pair, i < j
  std::size_t j = 0;
  double t = 0.0;           // time within the segment, in [0,1]
};

struct CollisionReport {
  bool colliding = false;
  std::vector<CollisionWitness> witnesses;
  double min_clearance = std::numeric_limits<double>::infinity();

  void merge(const CollisionReport& other) {
    colliding = colliding || other.colliding;
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    min_clearance = std::min(min_clearance, other.min_clearance);
  }
};

namespace detail {

/// Minimum of |(1-t) d0 + t d1| over t in [0,1]; quadratic evaluated at the
/// endpoints and the clamped unconstrained minimizer.
inline double pair_min_distance(const Point& d0, const Point& d1) {
  double a = 0.0;  // |d1 - d0|^2
  double b = 0.0;  // d0 . (d1 - d0)
  double n0 = 0.0, n1 = 0.0;
  for (std::size_t c = 0; c < d0.size(); ++c) {
    const double dd = d1[c] - d0[c];
    a += dd * dd;
    b += d0[c] * dd;
    n0 += d0[c] * d0[c];
    n1 += d1[c] * d1[c];
  }
  double best = std::min(n0, n1);
  if (a > 0.0) {
    const double t = std::clamp(-b / a, 0.0, 1.0);
    double v = 0.0;
    for (std::size_t c = 0; c < d0.size(); ++c) {
      const double dc = (1.0 - t) * d0[c] + t * d1[c];
      v += dc * dc;
    }
    best = std::min(best, v);
  }
  return std::sqrt(best);
}

/// Whether (1-t) d0 + t d1 vanishes for some t in [0,1]. The crossing
/// parameter must be consistent across every coordinate that actually moves;
/// coordinates with no relative motion must already be zero.
inline bool pair_crossing(const Point& d0, const Point& d1, double eps, double& t_out) {
  double best_dd = 0.0;
  double t = 0.0;
  bool moving = false;
  for (std::size_t c = 0; c < d0.size(); ++c) {
    const double dd = d0[c] - d1[c];
    if (std::abs(dd) > std::abs(best_dd)) {
      best_dd = dd;
      t = d0[c] / dd;
      moving = true;
    }
  }
  if (!moving || std::abs(best_dd) <= eps) {
    // relative displacement is (numerically) constant
    for (std::size_t c = 0; c < d0.size(); ++c)
      if (std::abs(d0[c]) > eps) return false;
    t_out = 0.0;
    return true;
  }
  if (t < -eps || t > 1.0 + eps) return false;
  for (std::size_t c = 0; c < d0.size(); ++c) {
    const double dd = d0[c] - d1[c];
    if (std::abs(dd) > eps) {
      if (std::abs(d0[c] - t * dd) > eps * std::max(1.0, std::abs(dd))) return false;
    } else {
      if (std::abs(d0[c]) > eps) return false;
    }
  }
  t_out = std::clamp(t, 0.0, 1.0);
  return true;
}

}  // namespace detail

/// Exact collision check for the simultaneous linear motion from c0 to c1.
inline CollisionReport segment_collision(const Configuration& c0, const Configuration& c1,
                                         double eps = default_collision_epsilon()) {
  if (c0.dim != c1.dim || c0.size() != c1.size())
    throw std::invalid_argument("segment_collision: configurations must share k and n");
  CollisionReport report;
  const std::size_t n = static_cast<std::size_t>(c0.dim);
  Point d0(n), d1(n);
  for (std::size_t i = 0; i < c0.size(); ++i) {
    for (std::size_t j = i + 1; j < c0.size(); ++j) {
      for (std::size_t c = 0; c < n; ++c) {
        d0[c] = c0.points[i][c] - c0.points[j][c];
        d1[c] = c1.points[i][c] - c1.points[j][c];
      }
      double t = 0.0;
      if (detail::pair_crossing(d0, d1, eps, t)) {
        report.colliding = true;
        report.witnesses.push_back({0, i, j, t});
        report.min_clearance = 0.0;
      } else {
        report.min_clearance = std::min(report.min_clearance, detail::pair_min_distance(d0, d1));
      }
    }
  }
  if (report.colliding) report.min_clearance = 0.0;
  return report;
}

/// Minimum over pairs and t in [0,1] of the inter-point distance.
inline double min_pair_clearance(const Configuration& c0, const Configuration& c1) {
  if (c0.dim != c1.dim || c0.size() != c1.size())
    throw std::invalid_argument("min_pair_clearance: configurations must share k and n");
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = static_cast<std::size_t>(c0.dim);
  Point d0(n), d1(n);
  for (std::size_t i = 0; i < c0.size(); ++i)
    for (std::size_t j = i + 1; j < c0.size(); ++j) {
      for (std::size_t c = 0; c < n; ++c) {
        d0[c] = c0.points[i][c] - c0.points[j][c];
        d1[c] = c1.points[i][c] - c1.points[j][c];
      }
      best = std::min(best, detail::pair_min_distance(d0, d1));
    }
  return best;
}

/// Aggregates segment_collision over all breakpoint intervals.
inline CollisionReport verify_path(const PiecewisePath& path,
                                   double eps = default_collision_epsilon()) {
  path.validate();
  CollisionReport report;
  for (std::size_t s = 0; s < path.segments(); ++s) {
    CollisionReport r = segment_collision(path.breakpoints[s].config,
                                          path.breakpoints[s + 1].config, eps);
    for (CollisionWitness& w : r.witnesses) w.segment = s;
    report.merge(r);
  }
  return report;
}

}  // namespace confplan
