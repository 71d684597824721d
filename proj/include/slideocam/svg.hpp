#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slideocam/cam_geometry.hpp"

namespace slideocam {

using Polyline = std::vector<Point2>;

struct SegmentCrossing {
    std::size_t first;  ///< index of the segment starting at point `first`
    std::size_t second; ///< index of the later segment
    Point2 point;
};

/// Proper crossings between non-adjacent segments of a closed polyline
/// (the closing segment runs from the last point back to the first).
std::vector<SegmentCrossing> self_intersections(const Polyline& closed);

/// Cuts every loop off a closed polyline: for each crossing the points
/// between the two segments are replaced by the crossing point. The outer
/// envelope of a lap-back cam profile is what remains.
Polyline trim_loops(Polyline closed);

/// Full closed outline of cam 0 (all lobes), trimmed of lap-back loops.
/// `samples_per_lobe` points are taken over each lobe span.
Polyline cam_outline(const DesignParams& params, std::size_t samples_per_lobe);

/// SVG document with one closed path per conjugate cam; user units are mm,
/// v is drawn upward.
std::string render_cam_assembly_svg(const DesignParams& params, std::size_t samples_per_lobe);

} // namespace slideocam
