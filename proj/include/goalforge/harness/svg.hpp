#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "goalforge/harness/aggregate.hpp"

namespace goalforge {

struct SvgSeries {
  std::string label;
  CurveSummary summary;
};

// Success-rate curves as a standalone SVG: one median polyline plus one
// shaded interquartile band per series, with axes and a legend. Output is
// deterministic byte-for-byte for identical inputs.
void write_curves_svg(const std::filesystem::path& file, const std::string& title,
                      const std::vector<SvgSeries>& series);

}  // namespace goalforge
