#include "euphotic/errors.hpp"
#include "euphotic/plot.hpp"

#include <gtest/gtest.h>

using namespace euphotic;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

std::string walls_group(const std::string& svg) {
    const auto a = svg.find("<g id=\"walls\"");
    return svg.substr(a, svg.find("</g>", a) - a);
}

} // namespace

TEST(Plot, ThroughOriginWallsOnly) {
    auto a2 = RootSystem::build("A2");
    PlotOptions o;
    o.walls = 0;
    EXPECT_EQ(count(walls_group(render_svg(a2, o)), "<line"), 3u);
    auto g2 = RootSystem::build("G2");
    EXPECT_EQ(count(walls_group(render_svg(g2, o)), "<line"), 6u);
}

TEST(Plot, WallFamilies) {
    auto a2 = RootSystem::build("A2");
    PlotOptions o;
    o.walls = 2;
    // Three families, five parallel walls each, all inside the window.
    EXPECT_EQ(count(walls_group(render_svg(a2, o)), "<line"), 15u);
}

TEST(Plot, RegionPointsAndDeterminism) {
    auto g2 = RootSystem::build("G2");
    PlotOptions o;
    o.region = {{{1, 0}, Rat(0), true, Rat(1), true}, {{1, 3}, Rat(0), true, Rat(1), true}};
    o.points = {{{Rat(1, 2), Rat(0)}, true}, {{Rat(0), Rat(1, 4)}, false}};
    const std::string svg = render_svg(g2, o);
    EXPECT_EQ(svg, render_svg(g2, o));
    EXPECT_EQ(count(svg, "stroke=\"red\""), 4u);
    EXPECT_EQ(count(svg, "<circle"), 2u);
    EXPECT_EQ(count(svg, "fill=\"#c8c8c8\""), 1u);
}

TEST(Plot, RankTwoOnly) {
    EXPECT_THROW(render_svg(RootSystem::build("A3"), {}), CapabilityError);
    PlotOptions o;
    o.walls = -1;
    EXPECT_THROW(render_svg(RootSystem::build("A2"), o), InputError);
}
