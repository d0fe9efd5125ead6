#pragma once

#include "euphotic/hessenberg.hpp"

#include <string>
#include <vector>

namespace euphotic {

struct PlotPoint {
    RatVec y;  // value coordinates
    bool highlighted = false;
};

struct PlotOptions {
    int walls = 3;  // draw α + n = 0 for |n| ≤ walls
    std::vector<PlotPoint> points;
    Region region;  // strips outlined in red
    std::string title;
};

/// SVG 1.1 drawing of the apartment of a rank-two group: wall lines, the
/// fundamental alcove in grey, region strips and marked points. Output is
/// deterministic. Throws CapabilityError unless rank = 2, InputError for
/// walls < 0.
std::string render_svg(const RootSystem& rs, const PlotOptions& opts);

} // namespace euphotic
