#include "doctest.h"

#include <cmath>
#include <sstream>

#include "bergman/tracer.hpp"

using namespace bergman;
using doctest::Approx;

TEST_CASE("circle control case") {
  auto family = named_family("circle");
  family.window = {-2, 2, -2, 2};
  const auto set = trace(family);
  REQUIRE(set.curves.size() == 1);
  CHECK(set.curves[0].simple);
  CHECK(std::abs(set.curves[0].signed_area - pi) < 1e-4);
  for (const auto& v : set.curves[0].vertices) {
    CHECK(std::abs(std::abs(v) - 1.0) < 1e-9);
  }
  const auto d = to_domain(set, 0);
  CHECK(area(d) == Approx(pi).epsilon(1e-4));
}

TEST_CASE("circle area converges at second order") {
  auto family = named_family("circle");
  // Offset window so the grid is not aligned with the circle's symmetry.
  family.window = {-1.7, 1.9, -1.8, 1.8};
  double previous = 0.0;
  for (int res : {256, 512, 1024}) {
    family.resolution = res;
    const double err = std::abs(trace(family).curves.at(0).signed_area - pi);
    if (previous > 0.0) CHECK(previous / err >= 3.5);
    previous = err;
  }
}

TEST_CASE("fig3.1 is a three-fold symmetric Jordan domain") {
  const auto set = trace(named_family("fig3.1"));
  REQUIRE(set.curves.size() == 1);
  CHECK(set.curves[0].simple);
  CHECK(rotational_symmetry_defect(set.curves[0], 3) < 1e-3);
  // Not symmetric under a quarter turn.
  CHECK(rotational_symmetry_defect(set.curves[0], 4) > 1e-2);
  const auto d = to_domain_outer_with_holes(set);
  CHECK(d.hole_count() == 0);
}

TEST_CASE("power families inherit k+1 fold symmetry") {
  const auto s2 = trace(named_family("fig3.2"));
  const auto s3 = trace(named_family("fig3.3"));
  CHECK(rotational_symmetry_defect(s2.curves.at(0), 4) < 1e-3);
  CHECK(rotational_symmetry_defect(s3.curves.at(0), 5) < 1e-3);
  // Unbounded sectors are clipped by the window and reported.
  CHECK(s2.discarded_open_chains > 0);
  CHECK_FALSE(s2.warnings.empty());
}

TEST_CASE("level function is negative inside traced components") {
  for (const auto& name : named_family_names()) {
    const auto family = named_family(name);
    const auto set = trace(family);
    const auto d = to_domain_outer_with_holes(set);
    const auto pts = interior_sample(d, 20, 0.02, 5);
    for (const auto& p : pts) CHECK(family.level(p) < 0.0);
  }
}

TEST_CASE("fig3.9 domain excludes the pole") {
  const auto set = trace(named_family("fig3.9"));
  const auto d = to_domain_outer_with_holes(set);
  CHECK(d.winding_number(0.0) == 0);
  CHECK(d.hole_count() >= 1);
  for (const auto& c : set.curves) {
    for (const auto& v : c.vertices) CHECK(std::abs(v) > 1e-3);
  }
}

TEST_CASE("fig3.4 and fig3.5 differ in connectivity") {
  const auto d4 = to_domain_outer_with_holes(trace(named_family("fig3.4")));
  const auto d5 = to_domain_outer_with_holes(trace(named_family("fig3.5")));
  CHECK(d4.hole_count() == 0);
  CHECK(d5.hole_count() == 2);
  CHECK(d4.winding_number(0.0) == 0);
  CHECK(d4.winding_number(0.5) == 0);
}

TEST_CASE("round trips") {
  const auto circle = roundtrip(named_family("circle"), {.degree = 10, .hole_pole_order = 0, .poles = {}});
  CHECK(circle.pointwise_error < 1e-6);
  const auto f31 = roundtrip(named_family("fig3.1"), {.degree = 10, .hole_pole_order = 0, .poles = {}});
  CHECK(f31.pointwise_error < 5e-3);
  const auto f34 = roundtrip(named_family("fig3.4"),
                             {.degree = 10, .hole_pole_order = 0, .poles = {{0.0, 1}, {0.5, 1}}});
  CHECK(f34.pointwise_error < 5e-3);
  CHECK(f34.defect < 1e-3);
}

TEST_CASE("tracer errors") {
  auto family = named_family("circle");
  family.resolution = 32;
  CHECK_THROWS_AS(trace(family), Error);
  family.resolution = 128;
  family.window = {2, 3, 2, 3};
  try {
    trace(family);
    FAIL("expected empty trace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::empty_trace);
  }
  CHECK_THROWS_AS(named_family("fig9.9"), Error);
}

TEST_CASE("curve output") {
  auto family = named_family("circle");
  family.resolution = 64;
  const auto set = trace(family);
  std::ostringstream csv, svg;
  write_curves_csv(csv, set);
  write_curves_svg(svg, set);
  CHECK(csv.str().rfind("curve,vertex,x,y\n", 0) == 0);
  CHECK(svg.str().find("viewBox=\"-2.5 -2.5 5 5\"") != std::string::npos);
  CHECK(svg.str().find("<path id=\"curve0\"") != std::string::npos);
}
