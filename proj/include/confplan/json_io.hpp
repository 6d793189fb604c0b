#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "confplan/collision.hpp"
#include "confplan/config_space.hpp"
#include "confplan/path.hpp"
#include "confplan/retraction.hpp"

namespace confplan {

// Configuration JSON: {"dim": n, "points": [[c1,...,cn], ...]}
inline nlohmann::json to_json(const Configuration& x) {
  return {{"dim", x.dim}, {"points", x.points}};
}

inline Configuration configuration_from_json(const nlohmann::json& j) {
  Configuration x;
  x.dim = j.at("dim").get<int>();
  x.points = j.at("points").get<std::vector<Point>>();
  x.validate();
  return x;
}

// Path JSON: {"breakpoints": [{"t": 0.0, "config": {...}}, ...]}
inline nlohmann::json to_json(const PiecewisePath& path) {
  nlohmann::json breakpoints = nlohmann::json::array();
  for (const auto& b : path.breakpoints)
    breakpoints.push_back({{"t", b.t}, {"config", to_json(b.config)}});
  return {{"breakpoints", breakpoints}};
}

inline PiecewisePath path_from_json(const nlohmann::json& j) {
  PiecewisePath path;
  for (const auto& b : j.at("breakpoints"))
    path.breakpoints.push_back(
        {b.at("t").get<double>(), configuration_from_json(b.at("config"))});
  path.validate();
  return path;
}

inline nlohmann::json to_json(const UnitTuple& u) {
  return {{"dim", u.dim}, {"vectors", u.vectors}};
}

inline UnitTuple unit_tuple_from_json(const nlohmann::json& j) {
  UnitTuple u;
  u.dim = j.at("dim").get<int>();
  u.vectors = j.at("vectors").get<std::vector<Point>>();
  u.validate();
  return u;
}

inline nlohmann::json to_json(const CollisionReport& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const CollisionWitness& w : report.witnesses)
    witnesses.push_back({{"segment", w.segment},
                         {"pair", {w.i + 1, w.j + 1}},
                         {"t", w.t}});
  nlohmann::json j = {{"colliding", report.colliding}, {"witnesses", witnesses}};
  if (std::isfinite(report.min_clearance))
    j["min_clearance"] = report.min_clearance;
  else
    j["min_clearance"] = nullptr;  // single point, no pairs
  return j;
}

// Classification report; permutation indices are 1-based on the wire.
inline nlohmann::json classification_json(const Configuration& x) {
  const auto [partition, heights] = partition_of(x);
  const Permutation sigma = sort_permutation(x);
  std::vector<std::size_t> one_based;
  for (std::size_t i : sigma.indices) one_based.push_back(i + 1);
  return {{"partition", partition.parts},
          {"levels", partition.levels()},
          {"heights", heights.heights},
          {"permutation", one_based},
          {"identity_order", sigma.is_identity()}};
}

}  // namespace confplan
