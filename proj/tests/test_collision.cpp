#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "confplan/collision.hpp"
#include "test_helpers.hpp"

using namespace confplan;
using confplan::testing::random_configuration;
using confplan::testing::sampled_segment_check;

TEST_CASE("symmetric crossing collides at t = 1/2") {
  const Configuration c0 = {2, {{0.0, 0.0}, {1.0, 0.0}}};  // d0 = (-1, 0)
  const Configuration c1 = {2, {{1.0, 0.0}, {0.0, 0.0}}};  // d1 = (1, 0)
  const CollisionReport report = segment_collision(c0, c1);
  REQUIRE(report.colliding);
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0].t == Catch::Approx(0.5).margin(1e-12));
  CHECK(report.min_clearance == 0.0);
}

TEST_CASE("stationary distinct points have clearance = pairwise distance") {
  const Configuration c = {2, {{0.0, 0.0}, {3.0, 4.0}, {0.0, 1.0}}};
  const CollisionReport report = segment_collision(c, c);
  CHECK_FALSE(report.colliding);
  CHECK(report.min_clearance == Catch::Approx(1.0));
}

TEST_CASE("parallel translation keeps the static clearance") {
  const Configuration c0 = {3, {{0.0, 0.0, 0.0}, {0.0, 0.0, 2.0}}};
  Configuration c1 = c0;
  for (Point& p : c1.points) {
    p[0] += 7.0;
    p[1] -= 3.0;
  }
  CHECK(min_pair_clearance(c0, c1) == Catch::Approx(2.0));
  CHECK_FALSE(segment_collision(c0, c1).colliding);
}

TEST_CASE("random segments agree with the dense-sampling oracle") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % 3);
    const Configuration c0 = random_configuration(rng, dim, k, -2.0, 2.0);
    const Configuration c1 = random_configuration(rng, dim, k, -2.0, 2.0);
    const CollisionReport report = segment_collision(c0, c1);
    const auto sampled = sampled_segment_check(c0, c1, 4096, 1e-9);
    if (sampled.min_distance > 1e-3) {
      // clearly separated: verdicts agree; the clearance lower-bounds the
      // sampled minimum and matches it up to the grid resolution
      CHECK_FALSE(report.colliding);
      const double clearance = min_pair_clearance(c0, c1);
      CHECK(clearance <= sampled.min_distance + 1e-9);
      double speed2 = 0.0;
      for (std::size_t i = 0; i < c0.size(); ++i)
        for (std::size_t j = i + 1; j < c0.size(); ++j) {
          double s2 = 0.0;
          for (int c = 0; c < dim; ++c) {
            const std::size_t cc = static_cast<std::size_t>(c);
            const double rel = (c1.points[i][cc] - c1.points[j][cc]) -
                               (c0.points[i][cc] - c0.points[j][cc]);
            s2 += rel * rel;
          }
          speed2 = std::max(speed2, s2);
        }
      const double grid_err = speed2 / (4.0 * 4096.0 * 4096.0) / (clearance + sampled.min_distance);
      CHECK(sampled.min_distance - clearance <= grid_err + 1e-6);
    }
    if (report.colliding) CHECK(sampled.min_distance < 1e-3);
  }
}

TEST_CASE("engineered crossings are detected, sampled oracle confirms") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 3);
    // two points crossing exactly at a random t*, plus exact detection of t*
    const double tstar = 0.1 + 0.8 * std::generate_canonical<double, 53>(rng);
    Point meet(static_cast<std::size_t>(dim)), v(static_cast<std::size_t>(dim));
    for (double& c : meet) c = coord(rng);
    double n2 = 0.0;
    for (double& c : v) {
      c = coord(rng);
      n2 += c * c;
    }
    if (n2 < 1e-6) continue;
    Configuration c0{dim, {meet, meet}}, c1{dim, {meet, meet}};
    for (int c = 0; c < dim; ++c) {
      const std::size_t cc = static_cast<std::size_t>(c);
      // point 0 travels through `meet` at t*, point 1 stays put
      c0.points[0][cc] = meet[cc] - tstar * v[cc];
      c1.points[0][cc] = meet[cc] + (1.0 - tstar) * v[cc];
    }
    const CollisionReport report = segment_collision(c0, c1);
    REQUIRE(report.colliding);
    CHECK(report.witnesses[0].t == Catch::Approx(tstar).margin(1e-9));
  }
}

TEST_CASE("reversing a segment preserves verdict and clearance") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Configuration c0 = random_configuration(rng, 3, 4, -2.0, 2.0);
    const Configuration c1 = random_configuration(rng, 3, 4, -2.0, 2.0);
    const CollisionReport fwd = segment_collision(c0, c1);
    const CollisionReport rev = segment_collision(c1, c0);
    CHECK(fwd.colliding == rev.colliding);
    CHECK(fwd.min_clearance == Catch::Approx(rev.min_clearance).margin(1e-12));
  }
}

TEST_CASE("uniform translation leaves the report unchanged") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Configuration c0 = random_configuration(rng, 3, 3, -2.0, 2.0);
    const Configuration c1 = random_configuration(rng, 3, 3, -2.0, 2.0);
    Point shift(3);
    for (double& c : shift) c = coord(rng);
    Configuration d0 = c0, d1 = c1;
    for (Point& p : d0.points)
      for (int c = 0; c < 3; ++c) p[static_cast<std::size_t>(c)] += shift[static_cast<std::size_t>(c)];
    for (Point& p : d1.points)
      for (int c = 0; c < 3; ++c) p[static_cast<std::size_t>(c)] += shift[static_cast<std::size_t>(c)];
    const CollisionReport a = segment_collision(c0, c1);
    const CollisionReport b = segment_collision(d0, d1);
    CHECK(a.colliding == b.colliding);
    CHECK(a.min_clearance == Catch::Approx(b.min_clearance).margin(1e-9));
  }
}

TEST_CASE("verify_path flags a height swap on one line") {
  PiecewisePath path;
  path.breakpoints.push_back({0.0, {2, {{0.0, -1.0}, {0.0, 0.0}}}});
  path.breakpoints.push_back({1.0, {2, {{0.0, 0.0}, {0.0, -1.0}}}});
  const CollisionReport report = verify_path(path);
  REQUIRE(report.colliding);
  CHECK(report.witnesses[0].t == Catch::Approx(0.5).margin(1e-12));
  CHECK(report.witnesses[0].segment == 0);
}

TEST_CASE("constant path clearance equals the static minimum distance") {
  const Configuration c = {2, {{0.0, 0.0}, {0.0, 5.0}, {0.0, 7.0}}};
  PiecewisePath path;
  path.breakpoints.push_back({0.0, c});
  path.breakpoints.push_back({1.0, c});
  const CollisionReport report = verify_path(path);
  CHECK_FALSE(report.colliding);
  CHECK(report.min_clearance == Catch::Approx(2.0));
}

TEST_CASE("single-point paths have infinite clearance") {
  const CollisionReport report =
      segment_collision({2, {{0.0, 0.0}}}, {2, {{1.0, 1.0}}});
  CHECK_FALSE(report.colliding);
  CHECK(std::isinf(report.min_clearance));
}

TEST_CASE("CONFPLAN_EPS overrides the default epsilon") {
  CHECK(default_collision_epsilon() == 1e-12);
  setenv("CONFPLAN_EPS", "1e-6", 1);
  CHECK(default_collision_epsilon() == 1e-6);
  setenv("CONFPLAN_EPS", "not-a-number", 1);
  CHECK(default_collision_epsilon() == 1e-12);
  unsetenv("CONFPLAN_EPS");
}

TEST_CASE("malformed paths are rejected") {
  PiecewisePath path;
  path.breakpoints.push_back({0.0, {2, {{0.0, 0.0}}}});
  CHECK_THROWS_AS(verify_path(path), std::invalid_argument);
  path.breakpoints.push_back({0.5, {2, {{1.0, 0.0}}}});
  CHECK_THROWS_AS(verify_path(path), std::invalid_argument);  // does not end at 1
  CHECK_THROWS_AS(segment_collision({2, {{0.0, 0.0}}}, {3, {{0.0, 0.0, 0.0}}}),
                  std::invalid_argument);
}
