#pragma once

#include <algorithm>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "confplan/path.hpp"

namespace confplan {

struct SvgOptions {
  int samples_per_segment = 8;
  // coordinate indices drawn as (horizontal, vertical); defaults to the first
  // coordinate and the height
  std::optional<std::pair<int, int>> projection;
  // planner line abscissas, drawn as dashed verticals when set
  std::optional<std::pair<double, double>> lines;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace detail

/// Renders one polyline per labeled point with breakpoint markers.
/// Deterministic: identical inputs produce byte-identical documents.
inline std::string export_svg(const PiecewisePath& path, const SvgOptions& options = {}) {
  path.validate();
  if (options.samples_per_segment < 1)
    throw std::invalid_argument("export_svg: samples_per_segment must be >= 1");
  const Configuration& first = path.breakpoints.front().config;
  int px = 0, py = first.dim - 1;
  if (options.projection) {
    px = options.projection->first;
    py = options.projection->second;
    if (px < 0 || py < 0 || px >= first.dim || py >= first.dim || px == py)
      throw std::invalid_argument("export_svg: bad projection indices");
  } else if (first.dim != 2) {
    throw std::invalid_argument("export_svg: projection indices required for n > 2");
  }

  // sample each label's trace
  const std::size_t k = first.size();
  std::vector<std::vector<std::pair<double, double>>> traces(k);
  for (std::size_t s = 0; s < path.segments(); ++s) {
    const int steps = options.samples_per_segment;
    for (int m = (s == 0 ? 0 : 1); m <= steps; ++m) {
      const double t = path.breakpoints[s].t +
                       (path.breakpoints[s + 1].t - path.breakpoints[s].t) *
                           static_cast<double>(m) / static_cast<double>(steps);
      const Configuration c = path.at(t);
      for (std::size_t i = 0; i < k; ++i)
        traces[i].push_back({c.points[i][static_cast<std::size_t>(px)],
                             c.points[i][static_cast<std::size_t>(py)]});
    }
  }

  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  for (const auto& trace : traces)
    for (const auto& [vx, vy] : trace) {
      lo_x = std::min(lo_x, vx);
      hi_x = std::max(hi_x, vx);
      lo_y = std::min(lo_y, vy);
      hi_y = std::max(hi_y, vy);
    }
  if (options.lines) {
    lo_x = std::min({lo_x, options.lines->first, options.lines->second});
    hi_x = std::max({hi_x, options.lines->first, options.lines->second});
  }
  const double pad = 0.05 * std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  lo_x -= pad;
  hi_x += pad;
  lo_y -= pad;
  hi_y += pad;
  const double width = 640.0;
  const double scale = width / (hi_x - lo_x);
  const double height = (hi_y - lo_y) * scale;
  const auto X = [&](double v) { return (v - lo_x) * scale; };
  const auto Y = [&](double v) { return height - (v - lo_y) * scale; };  // y up

  static const char* palette[] = {"#1b6ca8", "#c0392b", "#27ae60", "#8e44ad",
                                  "#d35400", "#16a085", "#7f8c8d", "#2c3e50"};
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt(width) +
         "\" height=\"" + detail::fmt(height) + "\" viewBox=\"0 0 " + detail::fmt(width) + " " +
         detail::fmt(height) + "\">\n";
  if (options.lines) {
    for (double a : {options.lines->first, options.lines->second}) {
      svg += "  <line x1=\"" + detail::fmt(X(a)) + "\" y1=\"0\" x2=\"" + detail::fmt(X(a)) +
             "\" y2=\"" + detail::fmt(height) +
             "\" stroke=\"#999999\" stroke-dasharray=\"6 4\"/>\n";
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const char* color = palette[i % (sizeof(palette) / sizeof(palette[0]))];
    if (traces[i].size() > 1) {
      svg += "  <polyline fill=\"none\" stroke=\"";
      svg += color;
      svg += "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t m = 0; m < traces[i].size(); ++m) {
        if (m) svg += " ";
        svg += detail::fmt(X(traces[i][m].first)) + "," + detail::fmt(Y(traces[i][m].second));
      }
      svg += "\"/>\n";
    }
  }
  // breakpoint markers
  for (const auto& b : path.breakpoints) {
    for (std::size_t i = 0; i < k; ++i) {
      const char* color = palette[i % (sizeof(palette) / sizeof(palette[0]))];
      svg += "  <circle cx=\"" +
             detail::fmt(X(b.config.points[i][static_cast<std::size_t>(px)])) + "\" cy=\"" +
             detail::fmt(Y(b.config.points[i][static_cast<std::size_t>(py)])) +
             "\" r=\"3\" fill=\"";
      svg += color;
      svg += "\"/>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace confplan
