#pragma once
// svg.hpp - Dependency-free SVG line charts. Output is a pure function of
// the input (fixed layout, fixed number formatting), so identical series
// produce byte-identical documents and can be golden-file tested.

#include <string>
#include <utility>
#include <vector>

namespace seqconv::svg {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

// One polyline per series, with axes and tick labels. Every series needs at
// least 2 points; throws std::invalid_argument otherwise.
std::string render_line_chart(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series);

}  // namespace seqconv::svg
