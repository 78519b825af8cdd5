#include <doctest.h>

#include "imprec/errors.hpp"
#include "imprec/plot.hpp"
#include "test_util.hpp"

using namespace imprec;
using testutil::pv;
using testutil::rat;

TEST_CASE("barycentric embedding of the corners") {
  const auto [gx, gy] = barycentric_point(pv({"0", "1", "0"}));
  CHECK(gx == 0);
  CHECK(gy == 0);
  const auto [bx, by] = barycentric_point(pv({"0", "0", "1"}));
  CHECK(bx == 1);
  CHECK(by == 0);
  const auto [rx, ry] = barycentric_point(pv({"1", "0", "0"}));
  CHECK(rx == rat("1/2"));
  CHECK(ry == rat("866025/1000000"));
  CHECK_THROWS_AS(barycentric_point(pv({"1", "0"})), DomainError);
}

TEST_CASE("a singleton renders as a point") {
  const std::string svg = simplex_svg(CredalSet::singleton(pv({"1/3", "1/3", "1/3"})));
  CHECK(svg.find("<circle class=\"region\"") != std::string::npos);
  CHECK(svg.find("<polyline") == std::string::npos);
}

TEST_CASE("two extreme points render as a segment") {
  const std::string svg =
      simplex_svg(CredalSet(3, {pv({"1", "0", "0"}), pv({"0", "1/2", "1/2"})}));
  CHECK(svg.find("<polyline class=\"region\"") != std::string::npos);
  CHECK(svg.find("280.000000,455.692000") != std::string::npos);
  CHECK(svg.find("280.000000,40.000000") != std::string::npos);
}

TEST_CASE("the full simplex renders as the whole triangle") {
  const std::string svg = simplex_svg(CredalSet::full_simplex(3));
  const std::string corners = "40.000000,455.692000 520.000000,455.692000 280.000000,40.000000";
  // outline and region share the same three vertices
  CHECK(svg.find("class=\"simplex\" points=\"" + corners + "\"") != std::string::npos);
  const auto region_at = svg.find("<polygon class=\"region\"");
  REQUIRE(region_at != std::string::npos);
  CHECK(svg.find("40.000000,455.692000", region_at) != std::string::npos);
  CHECK(svg.find("520.000000,455.692000", region_at) != std::string::npos);
  CHECK(svg.find("280.000000,40.000000", region_at) != std::string::npos);
}
