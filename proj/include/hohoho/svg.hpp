#pragma once

#include <optional>
#include <string>

#include "hohoho/mechcalc.hpp"

namespace hohoho {

/// SVG 1.1 schematic of the tree multiplier: parabola hull, integer ball
/// marks, trunk scale, and optionally the chord for (a, b) with the product
/// mark at the trunk crossing. Model units map straight into the viewBox.
std::string render_tree_svg(const TreeCalc& tree,
                            std::optional<std::pair<double, double>> chord = std::nullopt);

/// SVG 1.1 schematic of the linkage at indicator abscissa pose_x: baseline,
/// legs, folded arm pair and the indicator point.
std::string render_linkage_svg(const Linkage& linkage, double pose_x);

}  // namespace hohoho
