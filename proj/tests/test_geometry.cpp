#include "doctest.h"

#include <cmath>

#include "bergman/geometry.hpp"
#include "oracles.hpp"

using namespace bergman;
using doctest::Approx;

TEST_CASE("areas of built-in shapes") {
  CHECK(area(make_disk()) == Approx(pi).epsilon(1e-13));
  CHECK(area(make_annulus(0.0, 0.5, 1.0)) == Approx(0.75 * pi).epsilon(1e-13));
  CHECK(area(make_ellipse(0.0, 2.0, 1.0)) == Approx(2 * pi).epsilon(1e-13));
  CHECK(area(make_rectangle(0.0, 2.0, 2.0)) == Approx(4.0).epsilon(1e-14));
  const auto rotated = make_ellipse(Complex(0.3, -0.2), 2.0, 1.0, 0.7);
  CHECK(area(rotated) == Approx(2 * pi).epsilon(1e-13));
  CHECK(area_from_coordinates(rotated) == Approx(area(rotated)).epsilon(1e-12));
}

TEST_CASE("perimeter and diameter") {
  CHECK(perimeter(make_disk(0.0, 2.0)) == Approx(4 * pi).epsilon(1e-12));
  CHECK(perimeter(make_rectangle(0.0, 2.0, 1.0)) == Approx(6.0).epsilon(1e-13));
  CHECK(make_disk().diameter() == Approx(2.0).epsilon(1e-3));
  CHECK(make_rectangle(0.0, 2.0, 1.0).diameter() ==
        Approx(std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("centroid") {
  const auto d = make_disk(Complex(0.25, -1.0), 0.5);
  CHECK(std::abs(d.centroid() - Complex(0.25, -1.0)) < 1e-12);
  const Complex tri[] = {0.0, 3.0, Complex(0, 3)};
  const auto t = make_polygon(tri);
  CHECK(std::abs(t.centroid() - Complex(1, 1)) < 1e-12);
}

TEST_CASE("boundary quadrature reproduces loop integral of conj(z)") {
  const auto nodes = boundary_quadrature(make_disk(), 16);
  Complex s = 0.0;
  for (const auto& n : nodes) s += std::conj(n.z) * n.dz;
  CHECK(std::abs(s - Complex(0, 2 * pi)) < 1e-12);
}

TEST_CASE("membership") {
  const auto ann = make_annulus(0.0, 0.5, 1.0);
  CHECK(contains(ann, Complex(0.75, 0.0)));
  CHECK_FALSE(contains(ann, Complex(0.1, 0.1)));
  CHECK_FALSE(contains(ann, Complex(1.5, 0.0)));
  CHECK(contains(ann, Complex(0.0, -0.9)));
  CHECK(ann.winding_number(Complex(0.0, 0.0)) == 0);
  CHECK_THROWS_AS(contains(ann, Complex(1.0, 0.0)), Error);
  try {
    contains(make_disk(), Complex(std::cos(0.3), std::sin(0.3)));
    FAIL("expected ambiguous membership");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ambiguous_membership);
  }
}

TEST_CASE("orientation is normalized") {
  const Complex cw[] = {0.0, Complex(0, 1), Complex(1, 1), 1.0};
  const auto sq = make_polygon(cw);
  CHECK(sq.components()[0].signed_area() == Approx(1.0));
  CHECK(area(sq) == Approx(1.0));
}

TEST_CASE("invalid geometry is rejected") {
  const Complex bowtie[] = {0.0, Complex(1, 1), Complex(1, 0), Complex(0, 1)};
  CHECK_THROWS_AS(make_polygon(bowtie), Error);
  CHECK_THROWS_AS(make_disk(0.0, -1.0), Error);
  // Hole not inside the outer loop.
  CHECK_THROWS_AS(
      Domain(circle_loop(0.0, 1.0), {circle_loop(Complex(3, 0), 0.5)},
             {Complex(3, 0)}),
      Error);
  // Hole marker outside its hole.
  CHECK_THROWS_AS(Domain(circle_loop(0.0, 1.0), {circle_loop(0.0, 0.5)},
                         {Complex(0.75, 0)}),
                  Error);
  // Holes that overlap.
  CHECK_THROWS_AS(
      Domain(circle_loop(0.0, 2.0),
             {circle_loop(Complex(-0.3, 0), 0.5), circle_loop(Complex(0.3, 0), 0.5)},
             {Complex(-0.5, 0), Complex(0.5, 0)}),
      Error);
}

TEST_CASE("interior grid integrates the area") {
  const auto d = make_disk();
  const auto cells = interior_grid(d, 1.0 / 256);
  double a = 0.0;
  for (const auto& c : cells) a += c.area;
  CHECK(a == Approx(pi).epsilon(2e-3));
}

TEST_CASE("transformations") {
  const auto r = make_rectangle(0.0, 2.0, 1.0);
  const auto moved = r.translated(Complex(1, 2));
  CHECK(std::abs(moved.centroid() - Complex(1, 2)) < 1e-12);
  const auto scaled = r.transformed(2.0, Complex(0, 1));
  CHECK(area(scaled) == Approx(8.0));
  CHECK(scaled.xmax() - scaled.xmin() == Approx(2.0).epsilon(1e-9));
}
