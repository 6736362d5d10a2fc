#include "hohoho/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hohoho {

namespace {

std::string num(double v) {
    if (v == 0) v = 0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void line(std::ostringstream& out, const char* cls, Vec2 a, Vec2 b) {
    out << "    <line class=\"" << cls << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y)
        << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
}

void circle(std::ostringstream& out, const char* cls, Vec2 c, double r) {
    out << "    <circle class=\"" << cls << "\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
        << "\" r=\"" << num(r) << "\"/>\n";
}

// Elements carry model coordinates (y up); a single scale(1,-1) group maps
// them into the y-down viewBox.
void open_svg(std::ostringstream& out, double min_x, double min_y, double max_x, double max_y,
              int px_w, int px_h) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px_w
        << "\" height=\"" << px_h << "\" viewBox=\"" << num(min_x) << " " << num(-max_y) << " "
        << num(max_x - min_x) << " " << num(max_y - min_y) << "\">\n";
}

}  // namespace

std::string render_tree_svg(const TreeCalc& tree, std::optional<std::pair<double, double>> chord) {
    const double n = tree.max_scale;
    if (!(n > 0)) throw DomainError("tree scale must be positive");
    std::optional<ChordLine> lametta;
    if (chord) lametta = tree_line(chord->first, chord->second, tree);

    const double top = n * n;
    const double pad_x = 1.0, pad_y = top * 0.03 + 0.5;
    std::ostringstream out;
    open_svg(out, -n - pad_x, -pad_y, n + pad_x, top + pad_y, 480, 640);
    out << "  <style>\n"
        << "    .hull{fill:none;stroke:#b22222;stroke-width:0.12}\n"
        << "    .trunk{stroke:#6b4423;stroke-width:0.2}\n"
        << "    .tick{stroke:#6b4423;stroke-width:0.05}\n"
        << "    .axis{stroke:#444;stroke-width:0.06}\n"
        << "    .ball{fill:#c62828;stroke:none}\n"
        << "    .chosen{fill:#1565c0}\n"
        << "    .lametta{stroke:#c0a000;stroke-width:0.1}\n"
        << "    .product{fill:#1b5e20}\n"
        << "  </style>\n";
    out << "  <g transform=\"scale(1,-1)\">\n";
    // convex hull: y = x^2 is exactly the quadratic Bezier through
    // (-n, n^2), (0, -n^2), (n, n^2)
    out << "    <path class=\"hull\" d=\"M " << num(-n) << " " << num(top) << " Q 0 " << num(-top)
        << " " << num(n) << " " << num(top) << "\"/>\n";
    line(out, "axis", {-n - pad_x, 0}, {n + pad_x, 0});
    line(out, "trunk", {0, 0}, {0, top});
    for (int k = 1; k <= static_cast<int>(top); ++k) {
        line(out, "tick", {-0.15, static_cast<double>(k)}, {0.15, static_cast<double>(k)});
    }
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        const double v = k;
        circle(out, "ball", {-v, v * v}, 0.18);
        circle(out, "ball", {v, v * v}, 0.18);
    }
    if (chord) {
        const auto [a, b] = *chord;
        circle(out, "ball chosen", {-a, a * a}, 0.22);
        circle(out, "ball chosen", {b, b * b}, 0.22);
        line(out, "lametta", {-a, a * a}, {b, b * b});
        circle(out, "product", {0, lametta->intercept}, 0.25);
    }
    out << "  </g>\n</svg>\n";
    return out.str();
}

std::string render_linkage_svg(const Linkage& linkage, double pose_x) {
    const LinkageJoints j = linkage_joints(pose_x, linkage);
    const double reach = linkage.leg_length + linkage.half_arm();
    std::ostringstream out;
    open_svg(out, -1.5 * reach, -1.5 * reach, 1.5 * reach, 1.5 * reach, 560, 560);
    out << "  <style>\n"
        << "    .baseline{stroke:#444;stroke-width:0.02}\n"
        << "    .track{stroke:#bbb;stroke-width:0.015;stroke-dasharray:0.08 0.08}\n"
        << "    .leg{stroke:#8d6e63;stroke-width:0.05;stroke-linecap:round}\n"
        << "    .arm{stroke:#5d4037;stroke-width:0.05;stroke-linecap:round}\n"
        << "    .joint{fill:#37474f}\n"
        << "    .indicator{fill:#c62828}\n"
        << "  </style>\n";
    out << "  <g transform=\"scale(1,-1)\">\n";
    line(out, "baseline", {-1.4 * reach, 0}, {1.4 * reach, 0});
    // indicator track of a calibrated build: the slope-1 line through the origin
    line(out, "track", {-1.2 * reach, -1.2 * reach}, {1.2 * reach, 1.2 * reach});
    line(out, "leg", j.foot_left, j.hip);
    line(out, "leg", j.foot_right, j.hip);
    line(out, "arm", j.hip, j.elbow_left);
    line(out, "arm", j.elbow_left, j.indicator);
    line(out, "arm", j.hip, j.elbow_right);
    line(out, "arm", j.elbow_right, j.indicator);
    for (Vec2 p : {j.foot_left, j.foot_right, j.hip, j.elbow_left, j.elbow_right}) {
        circle(out, "joint", p, 0.035);
    }
    circle(out, "indicator", j.indicator, 0.05);
    out << "  </g>\n</svg>\n";
    return out.str();
}

}  // namespace hohoho
