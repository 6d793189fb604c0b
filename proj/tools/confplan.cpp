// confplan: command-line front end for configuration-space motion planning.
//
// Exit codes: 0 success, 1 usage/parse error, 2 collision found,
// 3 formula query outside the covered parameter regimes.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "confplan/collision.hpp"
#include "confplan/complexity.hpp"
#include "confplan/config_space.hpp"
#include "confplan/cover.hpp"
#include "confplan/json_io.hpp"
#include "confplan/planner.hpp"
#include "confplan/retraction.hpp"
#include "confplan/svg.hpp"

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

confplan::Configuration figure_configuration() {
  // the 8-point configuration with partition (3,2,1,2)
  return {2,
          {{0.4, 0.0},
           {1.2, 0.0},
           {2.0, 0.0},
           {0.8, 1.0},
           {1.8, 1.0},
           {1.5, 1.5},
           {1.5, 2.5},
           {2.5, 2.5}}};
}

confplan::Configuration swap_start() { return {2, {{0.0, 0.0}, {1.0, 0.0}}}; }
confplan::Configuration swap_goal() { return {2, {{1.0, 0.0}, {0.0, 0.0}}}; }

confplan::Configuration random_configuration(std::mt19937& rng, int dim, int k) {
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  confplan::Configuration x;
  x.dim = dim;
  while (true) {
    x.points.clear();
    for (int i = 0; i < k; ++i) {
      confplan::Point p(static_cast<std::size_t>(dim));
      for (double& c : p) c = coord(rng);
      x.points.push_back(std::move(p));
    }
    try {
      x.validate();
      return x;
    } catch (const std::invalid_argument&) {
      // coincident sample, retry
    }
  }
}

void maybe_write_svg(const confplan::PiecewisePath& path, const std::string& svg_path,
                     std::optional<std::pair<double, double>> lines, int samples) {
  if (svg_path.empty()) return;
  confplan::SvgOptions opts;
  opts.samples_per_segment = samples;
  opts.lines = lines;
  if (path.breakpoints.front().config.dim > 2) opts.projection = {{0, path.breakpoints.front().config.dim - 1}};
  write_file(svg_path, confplan::export_svg(path, opts));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit motion planners on configuration spaces F(R^n,k)"};
  app.require_subcommand(1);

  std::string config_path, x_path, y_path, path_path, input_path;
  std::vector<std::string> waypoint_paths;
  std::string svg_path;
  std::string mode = "plain";
  std::string fixture = "figure";
  bool simultaneous = false, emit_path = false, group_free = false;
  int dim = 3, k_points = 2, obstacles = 0, order = 2, samples = 8;
  unsigned seed = 1;

  auto* classify = app.add_subcommand("classify", "partition, permutation and level count");
  classify->add_option("config", config_path, "configuration JSON")->required();

  auto* plan_cmd = app.add_subcommand("plan", "plan a collision-free path from x to y");
  plan_cmd->add_option("x", x_path, "start configuration JSON")->required();
  plan_cmd->add_option("y", y_path, "goal configuration JSON")->required();
  plan_cmd->add_flag("--simultaneous", simultaneous, "simultaneous transfer (may collide)");
  plan_cmd->add_option("--svg", svg_path, "write an SVG trace");
  plan_cmd->add_option("--samples", samples, "SVG samples per segment");

  auto* plan_multi_cmd = app.add_subcommand("plan-multi", "plan through waypoints in order");
  plan_multi_cmd->add_option("waypoints", waypoint_paths, "configuration JSON files")
      ->expected(2, -1);
  plan_multi_cmd->add_option("--svg", svg_path, "write an SVG trace");
  plan_multi_cmd->add_option("--samples", samples, "SVG samples per segment");

  auto* verify_cmd = app.add_subcommand("verify", "check a path for collisions");
  verify_cmd->add_option("path", path_path, "path JSON")->required();

  auto* retract_cmd = app.add_subcommand("retract", "sphere-product retraction maps");
  retract_cmd->add_option("--mode", mode, "plain | punctured")
      ->check(CLI::IsMember({"plain", "punctured"}));
  retract_cmd->add_option("--dim", dim, "ambient dimension");
  retract_cmd->add_option("input", input_path, "unit tuple or configuration JSON")->required();

  auto* cover_cmd = app.add_subcommand("cover", "LS cover index and contraction");
  cover_cmd->add_option("config", config_path, "configuration JSON")->required();
  cover_cmd->add_flag("--emit-path", emit_path, "emit the contraction path JSON");

  auto* tc_cmd = app.add_subcommand("tc", "closed-form TC / cat / TC_s values");
  tc_cmd->add_option("--dim", dim, "ambient dimension")->required();
  tc_cmd->add_option("--k", k_points, "number of points")->required();
  tc_cmd->add_option("--r", obstacles, "obstacle count");
  tc_cmd->add_flag("--group-free", group_free, "finite free group action, origin removed");
  tc_cmd->add_option("--order", order, "higher TC order s (2 = plain TC)");
  bool want_cat = false;
  tc_cmd->add_flag("--cat", want_cat, "print cat instead of TC");

  auto* demo_cmd = app.add_subcommand("demo", "built-in fixtures");
  demo_cmd->add_option("--fixture", fixture, "figure | swap | random")
      ->check(CLI::IsMember({"figure", "swap", "random"}));
  demo_cmd->add_option("--seed", seed, "RNG seed for the random fixture");
  demo_cmd->add_option("--dim", dim, "dimension for the random fixture");
  demo_cmd->add_option("--k", k_points, "points for the random fixture");
  demo_cmd->add_option("--svg", svg_path, "write an SVG trace");
  demo_cmd->add_option("--samples", samples, "SVG samples per segment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (classify->parsed()) {
      const auto x = confplan::configuration_from_json(read_json(config_path));
      json out = confplan::classification_json(x);
      out["cover_index"] = confplan::cover_index(x).i;
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (plan_cmd->parsed()) {
      const auto x = confplan::configuration_from_json(read_json(x_path));
      const auto y = confplan::configuration_from_json(read_json(y_path));
      const auto mode_sel = simultaneous ? confplan::TransferMode::simultaneous
                                         : confplan::TransferMode::sequential;
      const confplan::PlanResult result = confplan::plan(x, y, mode_sel);
      std::cerr << "domain i=" << result.domain << " lines at " << result.line_abscissas.first
                << ", " << result.line_abscissas.second << "\n";
      maybe_write_svg(result.path, svg_path, result.line_abscissas, samples);
      std::cout << confplan::to_json(result.path).dump(2) << "\n";
      return 0;
    }

    if (plan_multi_cmd->parsed()) {
      std::vector<confplan::Configuration> waypoints;
      for (const std::string& p : waypoint_paths)
        waypoints.push_back(confplan::configuration_from_json(read_json(p)));
      const confplan::PiecewisePath path = confplan::plan_multi(waypoints);
      maybe_write_svg(path, svg_path, std::nullopt, samples);
      std::cout << confplan::to_json(path).dump(2) << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      const auto path = confplan::path_from_json(read_json(path_path));
      const confplan::CollisionReport report = confplan::verify_path(path);
      std::cout << confplan::to_json(report).dump(2) << "\n";
      return report.colliding ? 2 : 0;
    }

    if (retract_cmd->parsed()) {
      const bool punctured = mode == "punctured";
      const json in = read_json(input_path);
      json out;
      if (in.contains("vectors")) {
        const auto u = confplan::unit_tuple_from_json(in);
        const auto image = confplan::sphere_to_config(u, punctured);
        const auto back = confplan::config_to_sphere(image, punctured);
        double max_err = 0.0;
        for (std::size_t i = 0; i < u.vectors.size(); ++i)
          for (std::size_t c = 0; c < u.vectors[i].size(); ++c)
            max_err = std::max(max_err, std::abs(u.vectors[i][c] - back.vectors[i][c]));
        out["image"] = confplan::to_json(image);
        out["roundtrip_max_error"] = max_err;
        out["roundtrip_ok"] = max_err <= 1e-12;
      } else {
        const auto x = confplan::configuration_from_json(in);
        out["image"] = confplan::to_json(confplan::config_to_sphere(x, punctured));
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (cover_cmd->parsed()) {
      const auto x = confplan::configuration_from_json(read_json(config_path));
      json out = {{"cover_index", confplan::cover_index(x).i}};
      if (emit_path) out["contraction"] = confplan::to_json(confplan::contraction_path(x));
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (tc_cmd->parsed()) {
      confplan::SpaceQuery q{dim, k_points, obstacles, group_free};
      try {
        int value = 0;
        if (want_cat)
          value = confplan::cat_value(q);
        else if (order != 2)
          value = confplan::tcn_value(order, q);
        else
          value = confplan::tc_value(q);
        std::cout << value << "\n";
        return 0;
      } catch (const confplan::UncoveredError& e) {
        std::cout << "uncovered\n";
        std::cerr << e.what() << "\n";
        return 3;
      }
    }

    if (demo_cmd->parsed()) {
      if (fixture == "figure") {
        const auto x = figure_configuration();
        const auto path =
            confplan::approach_path(x, confplan::p_line(x, x) + 1.0, confplan::StackStrategy::distance);
        maybe_write_svg(path, svg_path, std::nullopt, samples);
        json out = {{"config", confplan::to_json(x)},
                    {"classification", confplan::classification_json(x)},
                    {"approach", confplan::to_json(path)}};
        std::cout << out.dump(2) << "\n";
        return 0;
      }
      if (fixture == "swap") {
        const auto x = swap_start();
        const auto y = swap_goal();
        const auto seq = confplan::plan(x, y, confplan::TransferMode::sequential);
        const auto sim = confplan::plan(x, y, confplan::TransferMode::simultaneous);
        maybe_write_svg(seq.path, svg_path, seq.line_abscissas, samples);
        json out = {{"x", confplan::to_json(x)},
                    {"y", confplan::to_json(y)},
                    {"sequential", confplan::to_json(confplan::verify_path(seq.path))},
                    {"simultaneous", confplan::to_json(confplan::verify_path(sim.path))},
                    {"sequential_path", confplan::to_json(seq.path)}};
        std::cout << out.dump(2) << "\n";
        return 0;
      }
      std::mt19937 rng(seed);
      const auto x = random_configuration(rng, dim, k_points);
      const auto y = random_configuration(rng, dim, k_points);
      const auto result = confplan::plan(x, y);
      maybe_write_svg(result.path, svg_path, result.line_abscissas, samples);
      json out = {{"x", confplan::to_json(x)},
                  {"y", confplan::to_json(y)},
                  {"report", confplan::to_json(confplan::verify_path(result.path))},
                  {"path", confplan::to_json(result.path)}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
