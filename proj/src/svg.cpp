#include "slideocam/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "slideocam/format.hpp"

namespace slideocam {

namespace {

double cross(Point2 o, Point2 a, Point2 b)
{
    return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

bool boxes_overlap(Point2 a, Point2 b, Point2 c, Point2 d)
{
    return std::max(a.u, b.u) >= std::min(c.u, d.u) && std::max(c.u, d.u) >= std::min(a.u, b.u) &&
           std::max(a.v, b.v) >= std::min(c.v, d.v) && std::max(c.v, d.v) >= std::min(a.v, b.v);
}

double signed_area(const Polyline& poly)
{
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2 a = poly[i];
        const Point2 b = poly[(i + 1) % poly.size()];
        twice += a.u * b.v - b.u * a.v;
    }
    return 0.5 * twice;
}

std::string path_data(const Polyline& poly)
{
    std::ostringstream d;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        d << (i == 0 ? "M" : " L") << format_number(poly[i].u) << ' ' << format_number(-poly[i].v);
    }
    d << " Z";
    return d.str();
}

} // namespace

std::vector<SegmentCrossing> self_intersections(const Polyline& closed)
{
    std::vector<SegmentCrossing> crossings;
    const std::size_t count = closed.size();
    if (count < 4) return crossings;
    for (std::size_t i = 0; i < count; ++i) {
        const Point2 a = closed[i];
        const Point2 b = closed[(i + 1) % count];
        for (std::size_t j = i + 2; j < count; ++j) {
            if (i == 0 && j + 1 == count) continue; // adjacent through the closing segment
            const Point2 c = closed[j];
            const Point2 d = closed[(j + 1) % count];
            if (!boxes_overlap(a, b, c, d)) continue;
            const double d1 = cross(a, b, c);
            const double d2 = cross(a, b, d);
            const double d3 = cross(c, d, a);
            const double d4 = cross(c, d, b);
            if ((d1 > 0.0) != (d2 > 0.0) && (d3 > 0.0) != (d4 > 0.0) && d1 != 0.0 && d2 != 0.0 &&
                d3 != 0.0 && d4 != 0.0) {
                const double t = d3 / (d3 - d4);
                crossings.push_back({i, j, {a.u + t * (b.u - a.u), a.v + t * (b.v - a.v)}});
            }
        }
    }
    return crossings;
}

Polyline trim_loops(Polyline closed)
{
    // Each cut removes at least one point, so this terminates.
    while (true) {
        const auto crossings = self_intersections(closed);
        if (crossings.empty()) return closed;
        const auto& x = crossings.front();

        Polyline inner{x.point};
        inner.insert(inner.end(), closed.begin() + static_cast<std::ptrdiff_t>(x.first + 1),
                     closed.begin() + static_cast<std::ptrdiff_t>(x.second + 1));
        Polyline outer{x.point};
        outer.insert(outer.end(), closed.begin() + static_cast<std::ptrdiff_t>(x.second + 1),
                     closed.end());
        outer.insert(outer.end(), closed.begin(),
                     closed.begin() + static_cast<std::ptrdiff_t>(x.first + 1));

        closed = std::abs(signed_area(inner)) > std::abs(signed_area(outer)) ? std::move(inner)
                                                                             : std::move(outer);
    }
}

Polyline cam_outline(const DesignParams& params, std::size_t samples_per_lobe)
{
    const auto span = lobe_span(params);
    const double step = (span.end - span.start) / static_cast<double>(samples_per_lobe - 1);
    Polyline outline;
    outline.reserve(samples_per_lobe * static_cast<std::size_t>(params.n()));
    for (int lobe = 0; lobe < params.n(); ++lobe) {
        const double turn = -lobe * params.lobe_period();
        // The last sample of a lobe coincides with the first of the next.
        for (std::size_t i = 0; i + 1 < samples_per_lobe; ++i) {
            const double psi = span.start + step * static_cast<double>(i);
            outline.push_back(rotate(cam_profile_point(params, psi), turn));
        }
    }
    return trim_loops(std::move(outline));
}

std::string render_cam_assembly_svg(const DesignParams& params, std::size_t samples_per_lobe)
{
    const Polyline base = cam_outline(params, samples_per_lobe);
    const auto offsets = conjugate_offsets(params);

    std::vector<Polyline> cams;
    double lo_x = std::numeric_limits<double>::infinity();
    double lo_y = lo_x;
    double hi_x = -lo_x;
    double hi_y = -lo_x;
    for (double offset : offsets) {
        Polyline cam;
        cam.reserve(base.size());
        for (const auto& pt : base) {
            const Point2 q = rotate(pt, offset);
            cam.push_back(q);
            lo_x = std::min(lo_x, q.u);
            hi_x = std::max(hi_x, q.u);
            lo_y = std::min(lo_y, -q.v);
            hi_y = std::max(hi_y, -q.v);
        }
        cams.push_back(std::move(cam));
    }

    const double margin = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y);
    const double x0 = lo_x - margin;
    const double y0 = lo_y - margin;
    const double width = hi_x - lo_x + 2.0 * margin;
    const double height = hi_y - lo_y + 2.0 * margin;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(width)
        << "mm\" height=\"" << format_number(height) << "mm\" viewBox=\"" << format_number(x0)
        << ' ' << format_number(y0) << ' ' << format_number(width) << ' ' << format_number(height)
        << "\">\n"
        << "  <desc>Slide-o-Cam assembly p=" << format_number(params.p())
        << " e=" << format_number(params.e()) << " a4=" << format_number(params.a4())
        << " n=" << params.n() << " m=" << params.m() << "</desc>\n";
    for (std::size_t k = 0; k < cams.size(); ++k) {
        svg << "  <path id=\"cam" << k << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
            << format_number(0.002 * width) << "\" d=\"" << path_data(cams[k]) << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace slideocam
