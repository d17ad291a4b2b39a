#pragma once

#include <string>
#include <vector>

namespace infref {

struct Series {
  std::string name;
  std::vector<double> y;
};

/// Static SVG line chart of several series over a shared x axis.
std::string line_chart_svg(const std::string& title, const std::vector<double>& x, const std::vector<Series>& series);

}  // namespace infref
