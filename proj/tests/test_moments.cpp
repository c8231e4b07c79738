#include "doctest.h"

#include <cmath>
#include <sstream>

#include "bergman/moments.hpp"
#include "oracles.hpp"

using namespace bergman;
using doctest::Approx;

TEST_CASE("disk moments") {
  const auto d = make_disk();
  CHECK(std::abs(complex_moment(d, 0, 0) - pi) < 1e-12);
  CHECK(std::abs(complex_moment(d, 1, 1) - pi / 2) < 1e-12);
  CHECK(std::abs(complex_moment(d, 2, 1)) < 1e-12);
  CHECK(std::abs(complex_moment(d, 3, 3) - pi / 4) < 1e-12);
}

TEST_CASE("ellipse moments against polar-free oracle") {
  const auto e = make_ellipse(0.0, 2.0, 1.0);
  // integral of conj(z)^2 over the ellipse = pi a b (a^2 - b^2) / 4.
  CHECK(std::abs(complex_moment(e, 0, 2) - 1.5 * pi) < 1e-11);
  CHECK(std::abs(complex_moment(e, 1, 1) - 2.5 * pi) < 1e-11);
}

TEST_CASE("moment table against direct area quadrature") {
  const auto r = make_rectangle(Complex(0.2, 0.1), 1.0, 0.5);
  const MomentTable table(r, 4, Complex(0.1, 0.0));
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      const Complex c(0.1, 0.0);
      const Complex ref = oracle::box_integral(
          [&](Complex z) {
            return std::pow(z - c, m) * std::pow(std::conj(z - c), n);
          },
          -0.3, 0.7, -0.15, 0.35, 200);
      CHECK(std::abs(table(m, n) - ref) < 1e-10);
    }
  }
  std::ostringstream csv;
  table.write_csv(csv);
  CHECK(csv.str().rfind("m,n,center_re,center_im,re,im\n", 0) == 0);
}

TEST_CASE("log cut on the annulus") {
  const auto ann = make_annulus(0.0, 0.5, 1.0);
  const auto cut = make_log_cut(ann, 0.0);
  REQUIRE(cut.segments.size() == 1);
  CHECK(std::abs(cut.segments[0].first - 0.5) < 1e-12);
  CHECK(std::abs(cut.segments[0].second - 1.0) < 1e-12);
}

TEST_CASE("inner products with poles on the annulus") {
  const auto ann = make_annulus(0.0, 0.5, 1.0);
  const auto p1 = BasisElement::pole(0.0, 1);
  const auto p2 = BasisElement::pole(0.0, 2);
  const auto one = BasisElement::monomial(0.0, 1.0, 0);
  const auto z = BasisElement::monomial(0.0, 1.0, 1);
  CHECK(std::abs(inner_product(ann, p1, p1) - 2 * pi * std::log(2.0)) < 1e-11);
  CHECK(std::abs(inner_product(ann, p2, p2) - 3 * pi) < 1e-10);
  CHECK(std::abs(inner_product(ann, p1, p2)) < 1e-11);
  CHECK(std::abs(inner_product(ann, one, p1)) < 1e-11);
  CHECK(std::abs(zbar_inner_product(ann, p1) - 0.75 * pi) < 1e-11);
  CHECK(std::abs(zbar_inner_product(ann, z)) < 1e-11);
}

TEST_CASE("off-center pole against polar oracle") {
  // Pole at 0.1 inside the hole of an annulus centered at 0.
  const auto ann = make_annulus(0.0, 0.5, 1.0);
  const Complex a(0.1, 0.05);
  const auto p1 = BasisElement::pole(a, 1);
  const auto z2 = BasisElement::monomial(0.0, 1.0, 2);
  const auto check = [&](const BasisElement& f, const BasisElement& g) {
    const Complex ref = oracle::polar_integral(
        [&](Complex w) { return f(w) * std::conj(g(w)); }, 0.0, 0.5, 1.0, 400);
    CHECK(std::abs(inner_product(ann, f, g) - ref) < 1e-9);
  };
  check(p1, p1);
  check(z2, p1);
  check(p1, z2);
  const Complex ref = oracle::polar_integral(
      [&](Complex w) { return std::conj(w) * std::conj(p1(w)); }, 0.0, 0.5,
      1.0, 400);
  CHECK(std::abs(zbar_inner_product(ann, p1) - ref) < 1e-9);
}

TEST_CASE("pole to the left of the centroid uses the opposite cut") {
  const auto ann = make_annulus(Complex(1.0, 0.0), 0.5, 1.0);
  const Complex a(0.9, -0.1);
  CHECK(cut_direction(ann, a) == -1);
  const auto p1 = BasisElement::pole(a, 1);
  const Complex ref = oracle::polar_integral(
      [&](Complex w) { return p1(w) * std::conj(p1(w)); }, Complex(1.0, 0.0),
      0.5, 1.0, 400);
  CHECK(std::abs(inner_product(ann, p1, p1) - ref) < 1e-9);
}

TEST_CASE("projection system is Hermitian and consistent") {
  const auto e = make_ellipse(0.0, 2.0, 1.0);
  std::vector<BasisElement> basis;
  for (int k = 0; k <= 4; ++k) basis.push_back(BasisElement::monomial(0.0, 1.0, k));
  const auto sys = assemble_projection_system(e, basis, 0.0);
  CHECK((sys.gram - sys.gram.adjoint()).norm() < 1e-14);
  CHECK(sys.area == Approx(2 * pi).epsilon(1e-13));
  CHECK(sys.wbar_norm_sq == Approx(2.5 * pi).epsilon(1e-12));
  // <conj z, z> = integral of conj(z)^2 = 3 pi / 2.
  CHECK(std::abs(sys.wbar(1) - 1.5 * pi) < 1e-11);
}

TEST_CASE("quadrature failure is reported") {
  const auto d = make_disk();
  const auto near = BasisElement::pole(Complex(1.0 + 1e-4, 0.0), 3);
  QuadratureOptions opts;
  opts.max_order = 32;
  try {
    inner_product(d, near, near, opts);
    FAIL("expected accuracy error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::accuracy);
  }
}
