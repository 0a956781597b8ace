#include "rblock/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "rblock/errors.hpp"

namespace rblock {

namespace {

constexpr double kSide = 36.0;              // pixels per unit edge
constexpr double kColWidth = kSide * 0.8660254037844386; // sqrt(3)/2
constexpr double kMargin = 18.0;

struct Mapper {
    int min_x, max_u;
    double px(int x) const { return kMargin + (x - min_x) * kColWidth; }
    double py(int u) const { return kMargin + (max_u - u) * kSide / 2.0; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void polygon(std::ostream& out, const Mapper& map,
             const std::vector<std::pair<int, int>>& pts, const char* style) {
    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ' ';
        out << fmt(map.px(pts[i].first)) << ',' << fmt(map.py(pts[i].second));
    }
    out << "\" " << style << "/>\n";
}

std::vector<std::pair<int, int>> triangle_points(const Triangle& t) {
    int apex_x = t.pointing == Pointing::left ? t.x - 1 : t.x + 1;
    return {{t.x, t.u}, {t.x, t.u + 2}, {apex_x, t.u + 1}};
}

std::vector<std::pair<int, int>> lozenge_points(const Lozenge& l) {
    switch (l.kind()) {
    case LozengeKind::horizontal:
        return {{l.left.x - 1, l.left.u + 1},
                {l.left.x, l.left.u},
                {l.right.x + 1, l.right.u + 1},
                {l.left.x, l.left.u + 2}};
    case LozengeKind::negative:
        return {{l.left.x, l.left.u},
                {l.left.x, l.left.u + 2},
                {l.right.x, l.right.u + 2},
                {l.right.x, l.right.u}};
    case LozengeKind::positive:
        return {{l.left.x, l.left.u},
                {l.left.x, l.left.u + 2},
                {l.right.x, l.right.u + 2},
                {l.right.x, l.right.u}};
    }
    throw internal_error("unreachable lozenge kind");
}

} // namespace

void emit_svg(const Tiling& tiling, const TriangleSet& region, std::ostream& out) {
    if (region.triangles.empty())
        throw invalid_input("refusing to render an empty region");
    if (!tiles_region(tiling, region))
        throw invalid_input("tiling does not tile the given region");

    int min_x = 1, max_x = -1, min_u = 0, max_u = 0;
    bool first = true;
    auto grow = [&](const Triangle& t) {
        if (first) {
            min_x = t.x - 1;
            max_x = t.x + 1;
            min_u = t.u;
            max_u = t.u + 2;
            first = false;
            return;
        }
        min_x = std::min(min_x, t.x - 1);
        max_x = std::max(max_x, t.x + 1);
        min_u = std::min(min_u, t.u);
        max_u = std::max(max_u, t.u + 2);
    };
    for (const Triangle& t : region.triangles) grow(t);
    for (const Triangle& t : region.dents) grow(t);
    Mapper map{min_x, max_u};
    double width = (max_x - min_x) * kColWidth + 2 * kMargin;
    double height = (max_u - min_u) * kSide / 2.0 + 2 * kMargin;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' '
        << fmt(height) << "\">\n";
    out << "  <title>" << region.label << "</title>\n";

    // Faint lattice: outline of every region triangle.
    for (const Triangle& t : region.triangles)
        polygon(out, map, triangle_points(t),
                "fill=\"none\" stroke=\"#cccccc\" stroke-width=\"0.6\"");

    for (const Lozenge& l : tiling.lozenges) {
        const char* style =
            l.kind() == LozengeKind::negative
                ? "fill=\"#8fa8c8\" stroke=\"#000000\" stroke-width=\"1.4\" "
                  "class=\"lozenge negative\""
                : "fill=\"#ffffff\" fill-opacity=\"0.0\" stroke=\"#000000\" "
                  "stroke-width=\"1.4\" class=\"lozenge\"";
        polygon(out, map, lozenge_points(l), style);
    }

    for (const Triangle& t : region.dents)
        polygon(out, map, triangle_points(t),
                "fill=\"#444444\" fill-opacity=\"0.35\" stroke=\"#444444\" "
                "stroke-width=\"1.0\" stroke-dasharray=\"3,2\" class=\"dent\"");

    out << "</svg>\n";
}

void emit_svg_file(const Tiling& tiling, const TriangleSet& region,
                   const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input("cannot open output file: " + path);
    emit_svg(tiling, region, out);
    if (!out.good()) throw invalid_input("write failed: " + path);
}

} // namespace rblock
