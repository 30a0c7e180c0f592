#include "fdas/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace fdas {

namespace {

constexpr double kWidth = 800, kHeight = 520;
constexpr double kLeft = 70, kRight = 770, kTop = 20, kBottom = 460;
constexpr int kTicks = 5;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#8c564b"};

struct Range {
  double lo = 0.0, hi = 1.0;
  double clip(double v) const { return std::min(hi, std::max(lo, v)); }
};

Range span(const std::vector<ChartSeries>& series, bool use_y) {
  Range r{std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};
  for (const auto& s : series) {
    for (double v : use_y ? s.y : s.x) {
      r.lo = std::min(r.lo, v);
      r.hi = std::max(r.hi, v);
    }
  }
  if (!(r.lo <= r.hi)) return {0.0, 1.0};
  if (r.lo == r.hi) return {r.lo - 1.0, r.hi + 1.0};
  // A little headroom keeps the curves off the frame.
  const double pad = use_y ? 0.05 * (r.hi - r.lo) : 0.0;
  return {r.lo - pad, r.hi + pad};
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string px(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_line_chart(const ChartSpec& spec) {
  for (const auto& s : spec.series) {
    if (s.x.size() != s.y.size()) {
      throw std::invalid_argument("render_line_chart: x/y length mismatch");
    }
  }
  const Range xr = span(spec.series, false);
  const Range yr = span(spec.series, true);
  const auto map_x = [&](double v) {
    return kLeft + (xr.clip(v) - xr.lo) / (xr.hi - xr.lo) * (kRight - kLeft);
  };
  const auto map_y = [&](double v) {
    return kBottom - (yr.clip(v) - yr.lo) / (yr.hi - yr.lo) * (kBottom - kTop);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"800\" height=\"520\" viewBox=\"0 0 800 520\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"520\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" +
         px(kRight - kLeft) + "\" height=\"" + px(kBottom - kTop) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";

  for (int k = 0; k <= kTicks; ++k) {
    const double fx = xr.lo + (xr.hi - xr.lo) * k / kTicks;
    const double fy = yr.lo + (yr.hi - yr.lo) * k / kTicks;
    const double gx = map_x(fx);
    const double gy = map_y(fy);
    svg += "<line x1=\"" + px(gx) + "\" y1=\"" + px(kBottom) + "\" x2=\"" +
           px(gx) + "\" y2=\"" + px(kBottom + 6) +
           "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + px(gx) + "\" y=\"" + px(kBottom + 22) +
           "\" font-size=\"13\" text-anchor=\"middle\">" + num(fx) +
           "</text>\n";
    svg += "<line x1=\"" + px(kLeft - 6) + "\" y1=\"" + px(gy) + "\" x2=\"" +
           px(kLeft) + "\" y2=\"" + px(gy) + "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + px(kLeft - 10) + "\" y=\"" + px(gy + 4) +
           "\" font-size=\"13\" text-anchor=\"end\">" + num(fy) + "</text>\n";
  }

  svg += "<text x=\"" + px((kLeft + kRight) / 2) + "\" y=\"" +
         px(kHeight - 14) + "\" font-size=\"15\" text-anchor=\"middle\">" +
         escape(spec.x_label) + "</text>\n";
  svg += "<text x=\"18\" y=\"" + px((kTop + kBottom) / 2) +
         "\" font-size=\"15\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "18 " +
         px((kTop + kBottom) / 2) + ")\">" + escape(spec.y_label) +
         "</text>\n";

  for (std::size_t s = 0; s < spec.series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(*kPalette))];
    std::string points;
    for (std::size_t k = 0; k < spec.series[s].x.size(); ++k) {
      if (k) points += " ";
      points += px(map_x(spec.series[s].x[k])) + "," +
                px(map_y(spec.series[s].y[k]));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
  }

  // Legend, top-right corner of the plot area.
  const double lx = kRight - 150, ly0 = kTop + 16;
  for (std::size_t s = 0; s < spec.series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(*kPalette))];
    const double ly = ly0 + 20.0 * double(s);
    svg += "<line x1=\"" + px(lx) + "\" y1=\"" + px(ly) + "\" x2=\"" +
           px(lx + 26) + "\" y2=\"" + px(ly) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + px(lx + 32) + "\" y=\"" + px(ly + 4) +
           "\" font-size=\"13\">" + escape(spec.series[s].name) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace fdas
