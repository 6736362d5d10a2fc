#include "hohoho/svg.hpp"

#include <cmath>

#include "doctest.h"
#include "xml_lint.hpp"

using namespace hohoho;
using doctest::Approx;

namespace {

// Pulls attribute values off the first element whose class list contains cls.
struct Element {
    std::string tag;
    std::string attrs;

    double attr(const std::string& name) const {
        auto pos = attrs.find(name + "=\"");
        REQUIRE(pos != std::string::npos);
        pos += name.size() + 2;
        return std::stod(attrs.substr(pos));
    }
};

Element find_by_class(const std::string& svg, const std::string& cls) {
    std::size_t pos = 0;
    while ((pos = svg.find("class=\"", pos)) != std::string::npos) {
        std::size_t end = svg.find('"', pos + 7);
        std::string classes = svg.substr(pos + 7, end - pos - 7);
        if ((" " + classes + " ").find(" " + cls + " ") != std::string::npos) {
            std::size_t open = svg.rfind('<', pos);
            std::size_t close = svg.find('>', pos);
            std::size_t tag_end = svg.find_first_of(" \t", open);
            return {svg.substr(open + 1, tag_end - open - 1), svg.substr(open, close - open)};
        }
        pos = end;
    }
    FAIL("no element with class ", cls);
    return {};
}

}  // namespace

TEST_CASE("tree SVG") {
    TreeCalc tree{10.0};
    std::string svg = render_tree_svg(tree, std::make_pair(5.0, 3.0));

    SUBCASE("well-formed XML") {
        auto err = testsupport::xml_error(svg);
        if (err) FAIL("xml error: ", *err);
    }
    SUBCASE("the chord crosses the trunk at the product") {
        Element lametta = find_by_class(svg, "lametta");
        double x1 = lametta.attr("x1"), y1 = lametta.attr("y1");
        double x2 = lametta.attr("x2"), y2 = lametta.attr("y2");
        CHECK(x1 == Approx(-5.0));
        CHECK(y1 == Approx(25.0));
        CHECK(x2 == Approx(3.0));
        CHECK(y2 == Approx(9.0));
        double slope = (y2 - y1) / (x2 - x1);
        double at_trunk = y1 - slope * x1;
        CHECK(std::abs(at_trunk - 15.0) <= 1e-9);

        Element mark = find_by_class(svg, "product");
        CHECK(mark.attr("cx") == Approx(0.0));
        CHECK(std::abs(mark.attr("cy") - 15.0) <= 1e-9);
    }
    SUBCASE("static figure without a chord") {
        std::string bare = render_tree_svg(tree, std::nullopt);
        CHECK_FALSE(testsupport::xml_error(bare).has_value());
        CHECK(bare.find("class=\"lametta\"") == std::string::npos);
        CHECK(bare.find("hull") != std::string::npos);
        CHECK(bare.find("trunk") != std::string::npos);
    }
    SUBCASE("chord inputs are validated") {
        CHECK_THROWS_AS(render_tree_svg(tree, std::make_pair(-1.0, 3.0)), DomainError);
        CHECK_THROWS_AS(render_tree_svg(tree, std::make_pair(11.0, 3.0)), DomainError);
    }
}

TEST_CASE("linkage SVG") {
    Linkage L = Linkage::calibrated();

    SUBCASE("calibrated pose x = 0 puts the indicator at the origin") {
        std::string svg = render_linkage_svg(L, 0.0);
        CHECK_FALSE(testsupport::xml_error(svg).has_value());
        Element ind = find_by_class(svg, "indicator");
        CHECK(std::abs(ind.attr("cx")) <= 1e-12);
        CHECK(std::abs(ind.attr("cy")) <= 1e-12);
    }
    SUBCASE("the drawn chain meets the indicator computed by the closed form") {
        double x = 0.4 * L.leg_length;
        std::string svg = render_linkage_svg(L, x);
        CHECK_FALSE(testsupport::xml_error(svg).has_value());
        Element ind = find_by_class(svg, "indicator");
        CHECK(ind.attr("cx") == Approx(x).epsilon(1e-9));
        CHECK(ind.attr("cy") == Approx(linkage_indicator_y(x, L)).epsilon(1e-9));
        // both legs drawn foot -> hip
        Element leg = find_by_class(svg, "leg");
        double dx = leg.attr("x2") - leg.attr("x1");
        double dy = leg.attr("y2") - leg.attr("y1");
        CHECK(std::hypot(dx, dy) == Approx(L.leg_length).epsilon(1e-9));
    }
    SUBCASE("poses beyond the leg reach are rejected") {
        CHECK_THROWS_AS(render_linkage_svg(L, L.leg_length * 1.5), DomainError);
    }
}
