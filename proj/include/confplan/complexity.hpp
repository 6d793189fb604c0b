#pragma once

#include <stdexcept>

namespace confplan {

/// Query for a parameter regime not covered by the closed-form table.
struct UncoveredError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameters of the space whose TC / cat value is requested.
struct SpaceQuery {
  int dim = 2;                  // ambient dimension n >= 2
  int k = 2;                    // number of points >= 2
  int r = 0;                    // obstacle count >= 0
  bool group_free_odd = false;  // finite G acting freely on R^n \ {0}, n odd

  void validate() const {
    if (dim < 2) throw std::invalid_argument("SpaceQuery: dim must be >= 2");
    if (k < 2) throw std::invalid_argument("SpaceQuery: k must be >= 2");
    if (r < 0) throw std::invalid_argument("SpaceQuery: r must be >= 0");
    if (group_free_odd && dim % 2 == 0)
      throw std::invalid_argument("SpaceQuery: free group actions need odd dimension");
  }
};

/// Topological complexity of the queried configuration space.
inline int tc_value(const SpaceQuery& q) {
  q.validate();
  if (q.group_free_odd) return 2 * q.k + 1;
  if (q.r == 0) return q.dim % 2 == 1 ? 2 * q.k - 1 : 2 * q.k - 2;
  if (q.dim % 2 == 1) return 2 * q.k + 1;
  throw UncoveredError("tc_value: even dimension with obstacles is not covered");
}

/// Lusternik-Schnirelmann category of the queried space.
inline int cat_value(const SpaceQuery& q) {
  q.validate();
  if (q.group_free_odd) return q.k + 1;
  return q.r == 0 ? q.k : q.k + 1;
}

/// Higher topological complexity TC_s (s - 2 prescribed intermediate stages).
inline int tcn_value(int order, const SpaceQuery& q) {
  q.validate();
  if (order < 2) throw std::invalid_argument("tcn_value: order must be >= 2");
  if (q.dim % 2 == 0)
    throw UncoveredError("tcn_value: even dimension is not covered");
  if (q.group_free_odd || q.r > 0) return order * q.k + 1;
  return order * (q.k - 1) + 1;
}

/// Number of local planning rules of the explicit planner: 2k - 1.
inline int domain_count(int k) {
  if (k < 1) throw std::invalid_argument("domain_count: k must be >= 1");
  return 2 * k - 1;
}

}  // namespace confplan
