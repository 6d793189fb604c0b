#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "confplan/config_space.hpp"

namespace confplan {

/// Symmetry group of the ambient space used for orbit distinctness.
enum class GroupSpec { trivial, antipodal, full_orthogonal };

/// Ambient-space variant: puncturing, obstacles, and the acting group.
struct SpaceSpec {
  int dim = 2;
  GroupSpec group = GroupSpec::trivial;
  bool puncture_origin = false;
  std::vector<Point> obstacles;

  void validate() const {
    if (dim < 2) throw std::invalid_argument("SpaceSpec: dim must be >= 2");
    if (group != GroupSpec::trivial && !puncture_origin)
      throw std::invalid_argument("SpaceSpec: nontrivial group requires punctured origin");
    for (const Point& q : obstacles)
      if (static_cast<int>(q.size()) != dim)
        throw std::invalid_argument("SpaceSpec: obstacle dimension mismatch");
    for (std::size_t i = 0; i < obstacles.size(); ++i)
      for (std::size_t j = i + 1; j < obstacles.size(); ++j)
        if (obstacles[i] == obstacles[j])
          throw std::invalid_argument("SpaceSpec: obstacles must be pairwise distinct");
  }
};

/// Tuple of unit vectors, a point of (S^{n-1})^j.
struct UnitTuple {
  int dim = 2;
  std::vector<Point> vectors;

  void validate() const {
    if (dim < 2) throw std::invalid_argument("UnitTuple: dim must be >= 2");
    for (const Point& v : vectors) {
      if (static_cast<int>(v.size()) != dim)
        throw std::invalid_argument("UnitTuple: vector dimension mismatch");
      double n2 = 0.0;
      for (double c : v) n2 += c * c;
      if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
        throw std::invalid_argument("UnitTuple: vector is not unit length");
    }
  }
};

inline double norm(const Point& v) {
  double n2 = 0.0;
  for (double c : v) n2 += c * c;
  return std::sqrt(n2);
}

/// N(y) = y / |y|.
inline Point normalize(const Point& v) {
  const double n = norm(v);
  if (n <= 0.0) throw std::invalid_argument("normalize: zero vector");
  Point out = v;
  for (double& c : out) c /= n;
  return out;
}

/// The section into the configuration space: partial sums with weights 3^j.
/// punctured = false prepends the origin (k = |u| + 1); punctured = true makes
/// every component a nonzero partial sum of strictly increasing norm (k = |u|).
inline Configuration sphere_to_config(const UnitTuple& u, bool punctured) {
  u.validate();
  if (u.vectors.empty()) throw std::invalid_argument("sphere_to_config: empty tuple");
  Configuration out;
  out.dim = u.dim;
  Point sum(static_cast<std::size_t>(u.dim), 0.0);
  if (!punctured) out.points.push_back(sum);
  double weight = 1.0;
  for (const Point& v : u.vectors) {
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += weight * v[c];
    out.points.push_back(sum);
    weight *= 3.0;
  }
  return out;
}

/// The retraction back onto the product of spheres: normalized consecutive
/// differences, prefixed by N(y_1) in the punctured variant.
inline UnitTuple config_to_sphere(const Configuration& x, bool punctured) {
  x.validate();
  UnitTuple out;
  out.dim = x.dim;
  if (punctured) out.vectors.push_back(normalize(x.points[0]));
  for (std::size_t i = 1; i < x.size(); ++i) {
    Point diff = x.points[i];
    for (std::size_t c = 0; c < diff.size(); ++c) diff[c] -= x.points[i - 1][c];
    out.vectors.push_back(normalize(diff));
  }
  return out;
}

namespace detail {

inline bool same_orbit(const Point& a, const Point& b, GroupSpec group) {
  switch (group) {
    case GroupSpec::trivial:
      return a == b;
    case GroupSpec::antipodal: {
      if (a == b) return true;
      for (std::size_t c = 0; c < a.size(); ++c)
        if (a[c] != -b[c]) return false;
      return true;
    }
    case GroupSpec::full_orthogonal:
      return norm(a) == norm(b);
  }
  return false;
}

}  // namespace detail

/// Whether x lies in the configuration space described by `space`:
/// pairwise distinct G-orbits, nonzero points when punctured, obstacles avoided.
inline bool membership(const Configuration& x, const SpaceSpec& space) {
  space.validate();
  if (x.dim != space.dim)
    throw std::invalid_argument("membership: dimension mismatch");
  const Point origin(static_cast<std::size_t>(space.dim), 0.0);
  for (const Point& p : x.points) {
    if (space.puncture_origin && p == origin) return false;
    for (const Point& q : space.obstacles)
      if (p == q) return false;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (detail::same_orbit(x.points[i], x.points[j], space.group)) return false;
  return true;
}

}  // namespace confplan
