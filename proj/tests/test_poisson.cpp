#include "doctest.h"

#include <cmath>
#include <sstream>

#include "bergman/poisson.hpp"
#include "oracles.hpp"

using namespace bergman;
using doctest::Approx;

namespace {
const double square_rho = oracle::square_torsion(1.0);
}

TEST_CASE("J0 and its first zero") {
  CHECK(bessel_j0(0.0) == 1.0);
  const double j0 = bessel_j0_first_zero<double>();
  CHECK(std::abs(j0 - oracle::j0_first_zero()) < 1e-12);
  CHECK(std::abs(j0 - 2.404825557695773) < 1e-12);
  CHECK(std::abs(bessel_j0(j0)) < 1e-12);
  for (double x : {0.3, 1.0, 2.0, 3.7, 6.0}) {
    CHECK(bessel_j0(x) == Approx(oracle::j0_series(x)).epsilon(1e-13));
  }
  const long double jl = bessel_j0_first_zero<long double>();
  CHECK(std::abs(double(jl) - j0) < 1e-14);
}

TEST_CASE("square torsion oracle agrees with the tanh series") {
  // rho = a^4 (1/3 - (64 / pi^5) sum over odd k of tanh(k pi / 2) / k^5)
  double s = 0.0;
  for (int k = 1; k < 20001; k += 2) s += std::tanh(k * pi / 2) / std::pow(k, 5);
  const double tanh_series = 1.0 / 3.0 - 64.0 / std::pow(pi, 5) * s;
  CHECK(square_rho == Approx(tanh_series).epsilon(1e-10));
  CHECK(tanh_series == Approx(0.14057701495515372).epsilon(1e-13));
}

TEST_CASE("grid problem structure") {
  const auto d = make_disk();
  const auto grid = build_grid_problem(d, 1.0 / 32);
  const Eigen::SparseMatrix<double> t = grid.laplacian.transpose();
  CHECK((grid.laplacian - t).norm() == 0.0);
  for (const auto& a : grid.arms) {
    CHECK(a.minCoeff() > 0.0);
    CHECK(a.maxCoeff() <= 1.0);
  }
  // Cells of exterior nodes are not counted, so the weights fall short of
  // the area by O(perimeter * h).
  CHECK(std::abs(grid.weights.sum() - pi) < 2 * pi / 32);
  CHECK_THROWS_AS(build_grid_problem(d, 0.1), Error);
}

TEST_CASE("disk rigidity") {
  const auto r = torsional_rigidity(make_disk(), 2.0 / 128);
  CHECK(r.rho == Approx(pi / 2).epsilon(5e-3));
  CHECK(std::abs(r.rho - pi / 2) <= r.error_estimate);
  CHECK(r.min_u > 0.0);
  CHECK(std::abs(r.rho - r.rho_energy) <= r.error_estimate);
  CHECK(std::abs(r.extrapolated - pi / 2) < std::abs(r.rho - pi / 2));
}

TEST_CASE("square and ellipse rigidity") {
  const auto sq = make_rectangle(0.0, 1.0, 1.0);
  const auto rs = torsional_rigidity(sq, sq.diameter() / 128);
  CHECK(rs.rho == Approx(square_rho).epsilon(5e-3));
  CHECK(std::abs(rs.rho - square_rho) <= rs.error_estimate);
  const auto e = make_ellipse(0.0, 2.0, 1.0);
  const auto re = torsional_rigidity(e, e.diameter() / 128);
  CHECK(re.rho == Approx(8 * pi / 5).epsilon(5e-3));
  CHECK(std::abs(re.rho - 8 * pi / 5) <= re.error_estimate);
  CHECK(re.min_u > 0.0);
}

TEST_CASE("ellipse stress function matches the closed form") {
  // u = (a^2 b^2 / (a^2 + b^2)) (1 - x^2/a^2 - y^2/b^2)
  const double a = 2.0, b = 1.0;
  const auto e = make_ellipse(0.0, a, b);
  const auto grid = build_grid_problem(e, e.diameter() / 128);
  const auto u = stress_function(grid);
  double worst = 0.0;
  for (Eigen::Index k = 0; k < grid.unknowns(); ++k) {
    const Complex z = grid.node(k);
    const double exact = a * a * b * b / (a * a + b * b) *
                         (1 - z.real() * z.real() / (a * a) - z.imag() * z.imag() / (b * b));
    worst = std::max(worst, std::abs(u(k) - exact));
  }
  CHECK(worst < 1e-3);
}

TEST_CASE("rigidity is monotone under inclusion") {
  const auto small = torsional_rigidity(make_disk(0.0, 0.9), 2.0 / 128, false);
  const auto large = torsional_rigidity(make_disk(0.0, 1.0), 2.0 / 128, false);
  CHECK(small.rho < large.rho);
}

TEST_CASE("ground eigenvalues") {
  const double j0 = bessel_j0_first_zero<double>();
  const auto disk = dirichlet_ground_eigenvalue(make_disk(), 2.0 / 64);
  CHECK(disk.value == Approx(j0 * j0).epsilon(5e-3));
  CHECK(std::abs(disk.value - j0 * j0) <= disk.error_estimate);
  const auto sq = make_rectangle(0.0, 1.0, 1.0);
  const auto s = dirichlet_ground_eigenvalue(sq, sq.diameter() / 64);
  CHECK(s.value == Approx(2 * pi * pi).epsilon(5e-3));
  const auto rect = make_rectangle(0.0, 2.0, 1.0);
  const auto r = dirichlet_ground_eigenvalue(rect, rect.diameter() / 64);
  CHECK(r.value == Approx(pi * pi * 1.25).epsilon(5e-3));
}

TEST_CASE("grid CSV") {
  const auto grid = build_grid_problem(make_disk(), 1.0 / 16);
  const auto u = stress_function(grid);
  std::ostringstream out;
  write_grid_csv(out, grid, u);
  CHECK(out.str().rfind("i,j,x,y,u\n", 0) == 0);
}
