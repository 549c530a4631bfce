#pragma once

#include "geom/space.hpp"

#include <string>
#include <vector>

namespace geom {

// Deterministic SVG rendering of named planar objects. Points, segments
// and lines are drawn in an affine chart of the drawing plane; lines are
// clipped to the viewport (object bounding box padded by 10%).
struct SvgItem {
    enum class Kind { Point, Segment, Line };
    Kind kind;
    std::string name;
    Point a;  // the point / first segment endpoint / line base
    Point b;  // segment second endpoint; line: base + dir
};

struct SvgScene {
    Plane plane;
    std::vector<SvgItem> items;
};

std::string render_svg(const SvgScene& scene);

}  // namespace geom
