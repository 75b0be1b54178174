#pragma once

// Deterministic SVG rendering of scenes.
//
// Fixed transform: 100 pixels per unit, y axis flipped so the drawing matches
// the usual mathematical orientation.  Obstacles (segments / polygon
// boundaries) are one stroke class, optional visibility edges a second, and
// every scene vertex is drawn as a dot.  Output is byte-identical for
// identical inputs and options.

#include "udvg/scene.hpp"

#include <string>

namespace udvg {

struct RenderOptions {
    bool disks = false;  // draw the unit-diameter disk around every vertex
    bool edges = false;  // draw the UDVG (Closed policy) as a second stroke class
};

std::string render_svg(const Scene& scene, const RenderOptions& opts = {});

}  // namespace udvg
