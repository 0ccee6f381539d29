#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace seqconv::svg {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 770.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 460.0;
constexpr int kTicks = 5;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string fmt(const char* spec, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, value);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series) {
  if (series.empty()) throw std::invalid_argument("render_line_chart: no series");
  for (const Series& s : series) {
    if (s.points.size() < 2)
      throw std::invalid_argument("render_line_chart: a series needs at least 2 points");
  }

  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = x_min, y_max = -x_min;
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (x_min == x_max) {
    x_min -= 1.0;
    x_max += 1.0;
  }
  if (y_min == y_max) {
    y_min -= 1.0;
    y_max += 1.0;
  }

  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft); };
  auto py = [&](double y) { return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt("%.0f", kWidth) +
         " " + fmt("%.0f", kHeight) + "\" font-family=\"monospace\" font-size=\"13\">\n";
  out += "<rect width=\"" + fmt("%.0f", kWidth) + "\" height=\"" + fmt("%.0f", kHeight) +
         "\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt("%.1f", (kLeft + kRight) / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + escape(title) + "</text>\n";

  // axes
  out += "<line x1=\"" + fmt("%.1f", kLeft) + "\" y1=\"" + fmt("%.1f", kBottom) + "\" x2=\"" +
         fmt("%.1f", kRight) + "\" y2=\"" + fmt("%.1f", kBottom) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + fmt("%.1f", kLeft) + "\" y1=\"" + fmt("%.1f", kTop) + "\" x2=\"" +
         fmt("%.1f", kLeft) + "\" y2=\"" + fmt("%.1f", kBottom) + "\" stroke=\"black\"/>\n";

  for (int t = 0; t < kTicks; ++t) {
    double frac = static_cast<double>(t) / (kTicks - 1);
    double xv = x_min + frac * (x_max - x_min);
    double yv = y_min + frac * (y_max - y_min);
    double xp = px(xv);
    double yp = py(yv);
    out += "<line x1=\"" + fmt("%.2f", xp) + "\" y1=\"" + fmt("%.1f", kBottom) + "\" x2=\"" +
           fmt("%.2f", xp) + "\" y2=\"" + fmt("%.1f", kBottom + 6) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt("%.2f", xp) + "\" y=\"" + fmt("%.1f", kBottom + 22) +
           "\" text-anchor=\"middle\">" + fmt("%.6g", xv) + "</text>\n";
    out += "<line x1=\"" + fmt("%.1f", kLeft - 6) + "\" y1=\"" + fmt("%.2f", yp) + "\" x2=\"" +
           fmt("%.1f", kLeft) + "\" y2=\"" + fmt("%.2f", yp) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt("%.1f", kLeft - 10) + "\" y=\"" + fmt("%.2f", yp + 4) +
           "\" text-anchor=\"end\">" + fmt("%.6g", yv) + "</text>\n";
  }

  out += "<text x=\"" + fmt("%.1f", (kLeft + kRight) / 2) + "\" y=\"" +
         fmt("%.1f", kHeight - 14) + "\" text-anchor=\"middle\">" + escape(x_label) +
         "</text>\n";
  out += "<text x=\"20\" y=\"" + fmt("%.1f", (kTop + kBottom) / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         fmt("%.1f", (kTop + kBottom) / 2) + ")\">" + escape(y_label) + "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"";
    bool head = true;
    for (const auto& [x, y] : series[i].points) {
      if (!head) out += ' ';
      head = false;
      out += fmt("%.2f", px(x)) + "," + fmt("%.2f", py(y));
    }
    out += "\"/>\n";
    if (!series[i].label.empty()) {
      double ly = kTop + 16.0 * static_cast<double>(i);
      out += "<text x=\"" + fmt("%.1f", kRight - 4) + "\" y=\"" + fmt("%.1f", ly) +
             "\" text-anchor=\"end\" fill=\"";
      out += color;
      out += "\">" + escape(series[i].label) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace seqconv::svg
