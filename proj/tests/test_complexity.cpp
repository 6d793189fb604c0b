#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "confplan/complexity.hpp"
#include "confplan/config_space.hpp"

using namespace confplan;

TEST_CASE("tc_value cases") {
  CHECK(tc_value({3, 5, 0, false}) == 9);   // 2k-1, odd dimension
  CHECK(tc_value({3, 5, 2, false}) == 11);  // 2k+1 with obstacles
  CHECK(tc_value({2, 3, 0, false}) == 4);   // 2k-2, even dimension
  CHECK(tc_value({5, 2, 0, false}) == 3);
  CHECK(tc_value({3, 4, 0, true}) == 9);    // free group action: 2k+1
  CHECK_THROWS_AS(tc_value({2, 3, 1, false}), UncoveredError);
  CHECK_THROWS_AS(tc_value({1, 3, 0, false}), std::invalid_argument);
  CHECK_THROWS_AS(tc_value({3, 1, 0, false}), std::invalid_argument);
  CHECK_THROWS_AS(tc_value({4, 3, 0, true}), std::invalid_argument);
}

TEST_CASE("cat_value cases") {
  CHECK(cat_value({2, 4, 0, false}) == 4);  // cat = k
  CHECK(cat_value({3, 4, 1, false}) == 5);  // k+1 with obstacles
  CHECK(cat_value({2, 4, 3, false}) == 5);  // obstacle case holds in any dimension
  CHECK(cat_value({3, 4, 0, true}) == 5);   // group case: k+1
}

TEST_CASE("tcn_value cases") {
  CHECK(tcn_value(2, {3, 5, 0, false}) == tc_value({3, 5, 0, false}));
  CHECK(tcn_value(3, {3, 4, 0, false}) == 10);  // s(k-1)+1
  CHECK(tcn_value(3, {3, 4, 1, false}) == 13);  // sk+1
  CHECK(tcn_value(4, {5, 3, 0, true}) == 13);   // group case: sk+1
  CHECK_THROWS_AS(tcn_value(3, {2, 4, 0, false}), UncoveredError);
  CHECK_THROWS_AS(tcn_value(1, {3, 4, 0, false}), std::invalid_argument);
}

TEST_CASE("tcn_value with order 2 agrees with tc_value on covered odd queries") {
  for (int k = 2; k <= 8; ++k)
    for (int dim : {3, 5, 7})
      for (int r : {0, 1, 4}) {
        CHECK(tcn_value(2, {dim, k, r, false}) == tc_value({dim, k, r, false}));
        CHECK(tcn_value(2, {dim, k, r, true}) == tc_value({dim, k, r, true}));
      }
}

TEST_CASE("domain_count") {
  CHECK(domain_count(3) == 5);
  CHECK(domain_count(1) == 1);
  CHECK(domain_count(6) == 11);
  CHECK_THROWS_AS(domain_count(0), std::invalid_argument);
}

namespace {

// all compositions (ordered partitions) of k
void compositions(int k, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (int part = 1; part <= k; ++part) {
    current.push_back(part);
    compositions(k - part, current, out);
    current.pop_back();
  }
}

// a planar configuration realizing the given composition as its partition
Configuration realize(const std::vector<int>& parts) {
  Configuration x;
  x.dim = 2;
  double h = 0.0;
  for (int a : parts) {
    for (int i = 0; i < a; ++i) x.points.push_back({static_cast<double>(i), h});
    h += 1.0;
  }
  return x;
}

}  // namespace

TEST_CASE("domain_count matches the enumerated range of domain_index") {
  for (int k = 1; k <= 8; ++k) {
    std::vector<std::vector<int>> parts;
    std::vector<int> scratch;
    compositions(k, scratch, parts);
    std::set<int> indices;
    for (const auto& a : parts) {
      const Configuration x = realize(a);
      REQUIRE(partition_of(x).first.parts == a);
      for (const auto& b : parts) indices.insert(domain_index(x, realize(b)));
    }
    CHECK(static_cast<int>(indices.size()) == domain_count(k));
    CHECK(*indices.begin() == 2);
    CHECK(*indices.rbegin() == 2 * k);
  }
}

TEST_CASE("planner realizes the odd-dimension TC value") {
  for (int k = 2; k <= 8; ++k) CHECK(domain_count(k) == tc_value({3, k, 0, false}));
}
