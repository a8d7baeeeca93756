#pragma once

#include <string>
#include <vector>

#include "aperiodic/tiling.hpp"
#include "aperiodic/validator.hpp"

namespace aperiodic {

struct SvgOptions {
  bool draw_bars = false;           // schematic bar chords through edge midpoints
  int colour_family = -1;           // >= 0: colour vertices by that height
  std::vector<Violation> violations;
  std::vector<std::vector<std::int64_t>> heights;  // per family, per vertex
};

/// Renders a planar tiling document as standalone SVG.
std::string render_svg(const Tiling& t, const SvgOptions& opt = {});

}  // namespace aperiodic
