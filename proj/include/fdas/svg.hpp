#pragma once

#include <string>
#include <vector>

namespace fdas {

struct ChartSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartSpec {
  std::string x_label;
  std::string y_label;
  std::vector<ChartSeries> series;
};

/// Renders a static SVG 1.1 line chart on a fixed 800x520 canvas: axes with
/// tick labels, one polyline per series from a fixed color palette, and a
/// legend listing the series names in order.  Output is a pure function of
/// the spec (no timestamps, ids or randomness), so rendering never perturbs
/// any other artifact and re-renders are byte-identical.
std::string render_line_chart(const ChartSpec& spec);

}  // namespace fdas
