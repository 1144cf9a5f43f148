#pragma once

// Minimal hand-emitted SVG line charts: axes, tick grid, one polyline per
// series, and a text legend.  No plotting dependency, and no volatile
// content (timestamps, generated ids) — identical inputs give identical
// bytes, so chart outputs can be diffed and committed.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

namespace svg_chart {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 960;
  int height = 600;
};

namespace detail {

inline std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return std::string(buf);
}

inline std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void grow(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(lo <= hi)) {  // no finite data at all
      lo = 0.0;
      hi = 1.0;
      return;
    }
    const double span = hi - lo;
    const double margin = span > 0.0 ? 0.05 * span : 0.5;
    lo -= margin;
    hi += margin;
  }
};

}  // namespace detail

/// Fixed palette; series beyond its length cycle through it.
inline const char* series_color(std::size_t i) {
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  return kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
}

inline std::string render(const ChartSpec& spec,
                          const std::vector<Series>& series) {
  using detail::fmt;
  const double w = spec.width;
  const double h = spec.height;
  const double left = 80.0, right = 30.0, top = 50.0, bottom = 60.0;
  const double plot_w = w - left - right;
  const double plot_h = h - top - bottom;

  detail::Range xr, yr;
  for (const Series& s : series) {
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
        xr.grow(s.x[i]);
        yr.grow(s.y[i]);
      }
    }
  }
  xr.pad();
  yr.pad();

  const auto px = [&](double x) {
    return left + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto py = [&](double y) {
    return top + (yr.hi - y) / (yr.hi - yr.lo) * plot_h;
  };

  std::string out;
  out.reserve(4096);
  out += fmt(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
      "viewBox=\"0 0 %d %d\">\n",
      spec.width, spec.height, spec.width, spec.height);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out += fmt(
      "<text x=\"%.1f\" y=\"28\" font-family=\"sans-serif\" font-size=\"18\" "
      "text-anchor=\"middle\">%s</text>\n",
      left + plot_w / 2.0, detail::escape(spec.title).c_str());

  // Tick grid and labels.
  constexpr int kTicks = 6;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    const double gx = px(fx);
    const double gy = py(fy);
    out += fmt(
        "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
        "stroke=\"#dddddd\" stroke-width=\"1\"/>\n",
        gx, top, gx, top + plot_h);
    out += fmt(
        "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
        "stroke=\"#dddddd\" stroke-width=\"1\"/>\n",
        left, gy, left + plot_w, gy);
    out += fmt(
        "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
        "font-size=\"12\" text-anchor=\"middle\">%.6g</text>\n",
        gx, top + plot_h + 18.0, fx);
    out += fmt(
        "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
        "font-size=\"12\" text-anchor=\"end\">%.6g</text>\n",
        left - 8.0, gy + 4.0, fy);
  }

  // Axes on top of the grid.
  out += fmt(
      "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
      "fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n",
      left, top, plot_w, plot_h);
  out += fmt(
      "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
      "font-size=\"14\" text-anchor=\"middle\">%s</text>\n",
      left + plot_w / 2.0, h - 14.0, detail::escape(spec.x_label).c_str());
  out += fmt(
      "<text x=\"20\" y=\"%.1f\" font-family=\"sans-serif\" font-size=\"14\" "
      "text-anchor=\"middle\" transform=\"rotate(-90 20 %.1f)\">%s</text>\n",
      top + plot_h / 2.0, top + plot_h / 2.0,
      detail::escape(spec.y_label).c_str());

  for (std::size_t s = 0; s < series.size(); ++s) {
    const Series& ser = series[s];
    const std::size_t n = std::min(ser.x.size(), ser.y.size());
    std::string points;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(ser.x[i]) || !std::isfinite(ser.y[i])) continue;
      points += fmt("%.2f,%.2f ", px(ser.x[i]), py(ser.y[i]));
    }
    if (!points.empty()) points.pop_back();
    out += fmt(
        "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.8\" "
        "points=\"%s\"/>\n",
        series_color(s), points.c_str());
  }

  // Legend, top-right corner of the plot area.
  for (std::size_t s = 0; s < series.size(); ++s) {
    const double ly = top + 16.0 + 18.0 * static_cast<double>(s);
    out += fmt(
        "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
        "stroke=\"%s\" stroke-width=\"2.5\"/>\n",
        left + plot_w - 150.0, ly - 4.0, left + plot_w - 126.0, ly - 4.0,
        series_color(s));
    out += fmt(
        "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
        "font-size=\"12\">%s</text>\n",
        left + plot_w - 120.0, ly, detail::escape(series[s].label).c_str());
  }

  out += "</svg>\n";
  return out;
}

}  // namespace svg_chart
