#include "hohoho/mechcalc.hpp"

#include <cmath>
#include <map>

namespace hohoho {

namespace {

constexpr double kMonkeyCalibrationTol = 1e-6;
constexpr int kMonkeyScaleMin = 1;
constexpr int kMonkeyScaleMax = 12;

void check_tree_inputs(double a, double b, const TreeCalc& t) {
    if (!(a >= 0) || !(b >= 0)) {
        throw DomainError("tree values must be non-negative, got a=" + std::to_string(a) +
                          " b=" + std::to_string(b));
    }
    if (a > t.max_scale || b > t.max_scale) {
        throw DomainError("tree values exceed the scale (max " + std::to_string(t.max_scale) + ")");
    }
}

}  // namespace

ChordLine tree_line(double a, double b, const TreeCalc& t) {
    check_tree_inputs(a, b, t);
    if (a + b == 0) throw DomainError("a=b=0 leaves no chord to draw");
    const Vec2 left{-a, a * a};
    const Vec2 right{b, b * b};
    ChordLine line;
    line.slope = (right.y - left.y) / (right.x - left.x);
    // two-point interpolation at x=0; commutative in (a, b) down to the bit
    line.intercept = (left.y * right.x - right.y * left.x) / (right.x - left.x);
    return line;
}

double tree_multiply(double a, double b, const TreeCalc& t) {
    check_tree_inputs(a, b, t);
    if (a + b == 0) return 0.0;  // degenerate chord, closed by continuity
    return tree_line(a, b, t).intercept;
}

Linkage Linkage::calibrated(double half_arm) {
    Linkage L;
    L.arm_length = 2 * half_arm;
    L.leg_length = std::sqrt(2.0) * half_arm;
    L.fixed_angle = std::atan(1.0);  // pi/4
    return L;
}

double linkage_indicator_y(double x, const Linkage& L) {
    const double a = L.half_arm();
    const double b = L.leg_length;
    if (std::abs(x) > b) {
        throw DomainError("indicator abscissa |x|=" + std::to_string(std::abs(x)) +
                          " exceeds leg length " + std::to_string(b));
    }
    const double gamma = std::asin(x / b);
    return (b - 2 * a * std::cos(L.fixed_angle)) * std::cos(gamma) +
           2 * a * std::sin(L.fixed_angle) * (x / b);
}

bool linkage_is_calibrated(const Linkage& L, double tol) {
    if (!(tol > 0)) throw DomainError("calibration tolerance must be positive");
    const double ratio = L.leg_length / (2 * L.half_arm());
    return std::abs(std::cos(L.fixed_angle) - ratio) <= tol &&
           std::abs(std::sin(L.fixed_angle) - ratio) <= tol;
}

LinkageJoints linkage_joints(double x, const Linkage& L) {
    const double a = L.half_arm();
    const double b = L.leg_length;
    if (std::abs(x) > b) {
        throw DomainError("pose |x|=" + std::to_string(std::abs(x)) + " exceeds leg length " +
                          std::to_string(b));
    }
    const double gamma = std::asin(x / b);
    const double s = b * std::cos(gamma);
    const double half_h = a * std::cos(L.fixed_angle + gamma);
    const double spread = a * std::sin(L.fixed_angle + gamma);
    LinkageJoints j;
    j.foot_left = {0, 0};
    j.foot_right = {2 * x, 0};
    j.hip = {x, s};
    j.elbow_left = {x - spread, s - half_h};
    j.elbow_right = {x + spread, s - half_h};
    j.indicator = {x, s - 2 * half_h};
    return j;
}

int monkey_multiply(int i, int j, const Linkage& L) {
    if (i < kMonkeyScaleMin || i > kMonkeyScaleMax || j < kMonkeyScaleMin || j > kMonkeyScaleMax) {
        throw RangeError("feet go on the 1..12 scale, got " + std::to_string(i) + " and " +
                         std::to_string(j));
    }
    if (!linkage_is_calibrated(L, kMonkeyCalibrationTol)) {
        throw DomainError("linkage is not calibrated (needs alpha=pi/4, leg:half-arm=sqrt(2))");
    }
    // Diamond table addressed by (midpoint, separation), built exhaustively.
    // Doubled midpoint keeps the address integral.
    static const std::map<std::pair<int, int>, int> table = [] {
        std::map<std::pair<int, int>, int> t;
        for (int p = kMonkeyScaleMin; p <= kMonkeyScaleMax; ++p) {
            for (int q = kMonkeyScaleMin; q <= kMonkeyScaleMax; ++q) {
                auto address = std::make_pair(p + q, std::abs(p - q));
                auto [it, inserted] = t.try_emplace(address, p * q);
                if (!inserted && it->second != p * q) {
                    throw std::logic_error("diamond table address collision");
                }
            }
        }
        return t;
    }();
    return table.at({i + j, std::abs(i - j)});
}

}  // namespace hohoho
