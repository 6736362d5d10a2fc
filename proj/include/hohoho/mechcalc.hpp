#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hohoho/errors.hpp"

namespace hohoho {

struct Vec2 {
    double x = 0;
    double y = 0;
};

/// The parabola-hull multiplier: balls for value v sit at (-v, v^2) on the
/// left branch and (v, v^2) on the right branch; the trunk is the y-axis.
struct TreeCalc {
    double max_scale = 10.0;  // balls at x in (0, max_scale] on both sides
};

struct ChordLine {
    double slope = 0;
    double intercept = 0;  // trunk crossing
};

/// Straight line ("Lametta") through the balls for a (left) and b (right),
/// computed from the two ball points. Throws DomainError for negative input,
/// a=b=0, or values beyond the scale.
ChordLine tree_line(double a, double b, const TreeCalc& t);

/// Trunk crossing of the chord; equals a*b. (0,0) is 0 by continuity.
double tree_multiply(double a, double b, const TreeCalc& t);

/// Symmetric linkage of the mechanical monkey multiplier: two legs of length
/// `leg_length` meet at the hip; each arm half (length arm_length/2) hangs at
/// the fixed angle from its leg, and the arm pair folds to the indicator.
struct Linkage {
    double arm_length = 2.0;                 // c
    double leg_length = 1.4142135623730951;  // b
    double fixed_angle = 0.7853981633974483; // alpha, radians

    double half_arm() const { return arm_length / 2; }          // a = c/2
    double leg_ratio() const { return leg_length / half_arm(); } // f = b/a

    static Linkage calibrated(double half_arm = 1.0);
};

/// Indicator height for indicator abscissa x:
///   y = (b - 2a cos(alpha)) cos(gamma) + 2a sin(alpha) x/b,  gamma = asin(x/b).
/// Throws DomainError when |x| > leg length.
double linkage_indicator_y(double x, const Linkage& L);

/// True iff |cos(alpha) - b/2a| <= tol and |sin(alpha) - b/2a| <= tol,
/// jointly forcing alpha = pi/4 and b:a = sqrt(2).
bool linkage_is_calibrated(const Linkage& L, double tol);

/// Explicit joint coordinates for a pose, left foot at the origin.
struct LinkageJoints {
    Vec2 foot_left, foot_right, hip, elbow_left, elbow_right, indicator;
};
LinkageJoints linkage_joints(double x, const Linkage& L);

/// Table lookup of the product cell addressed by ((i+j)/2, |i-j|); well
/// defined because the address determines the unordered pair {i, j}.
/// Throws RangeError outside 1..12, DomainError for an uncalibrated linkage.
int monkey_multiply(int i, int j, const Linkage& L);

}  // namespace hohoho
