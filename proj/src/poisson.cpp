#include "bergman/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <Eigen/IterativeLinearSolvers>

namespace bergman {

namespace {

/// Nodes closer than this fraction of h to the boundary are treated as
/// boundary points (u = 0) rather than unknowns.
constexpr double kMinArm = 1e-6;

bool inside_by_crossings(const std::vector<Crossing>& xs, double position) {
  int winding = 0;
  for (const auto& x : xs) {
    if (x.position > position) winding += x.sign;
  }
  return winding == 1;
}

/// Arms towards the nearest crossings on either side along one grid line,
/// as fractions of h capped at 1.
std::pair<double, double> arms_along(const std::vector<Crossing>& xs,
                                     double position, double h) {
  double up = 1.0, down = 1.0;
  for (const auto& x : xs) {
    const double d = x.position - position;
    if (d >= 0.0) up = std::min(up, d / h);
    if (d <= 0.0) down = std::min(down, -d / h);
  }
  return {up, down};
}

}  // namespace

GridProblem build_grid_problem(const Domain& domain, double h) {
  if (!(h > 0.0) || h > domain.diameter() / 32.0) {
    throw Error(ErrorKind::input, "poisson",
                "grid spacing must lie in (0, diameter / 32]");
  }
  GridProblem grid;
  grid.h = h;
  grid.nx = int(std::ceil((domain.xmax() - domain.xmin()) / h));
  grid.ny = int(std::ceil((domain.ymax() - domain.ymin()) / h));
  grid.x0 = domain.xmin() + 0.5 * h;
  grid.y0 = domain.ymin() + 0.5 * h;
  const int nx = grid.nx, ny = grid.ny;

  std::vector<char> inside(std::size_t(nx) * ny, 0);
  std::vector<Eigen::Vector4d> arm(std::size_t(nx) * ny, Eigen::Vector4d::Ones());
  for (int j = 0; j < ny; ++j) {
    const auto xs = domain.crossings_horizontal(grid.y0 + j * h);
    if (xs.empty()) continue;
    for (int i = 0; i < nx; ++i) {
      const double x = grid.x0 + i * h;
      const std::size_t id = std::size_t(j) * nx + i;
      if (!inside_by_crossings(xs, x)) continue;
      const auto [east, west] = arms_along(xs, x, h);
      arm[id](0) = east;
      arm[id](1) = west;
      inside[id] = 1;
    }
  }
  for (int i = 0; i < nx; ++i) {
    const auto ys = domain.crossings_vertical(grid.x0 + i * h);
    for (int j = 0; j < ny; ++j) {
      const std::size_t id = std::size_t(j) * nx + i;
      if (!inside[id]) continue;
      const auto [north, south] = arms_along(ys, grid.y0 + j * h, h);
      arm[id](2) = north;
      arm[id](3) = south;
      if (arm[id].minCoeff() < kMinArm) inside[id] = 0;
    }
  }

  grid.index.assign(std::size_t(nx) * ny, -1);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t id = std::size_t(j) * nx + i;
      if (!inside[id]) continue;
      grid.index[id] = int(grid.node_i.size());
      grid.node_i.push_back(i);
      grid.node_j.push_back(j);
      grid.arms.push_back(arm[id]);
    }
  }
  const Eigen::Index n = grid.unknowns();
  if (n == 0) {
    throw Error(ErrorKind::geometry, "poisson", "grid has no interior nodes");
  }

  const double h2 = h * h;
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(std::size_t(5 * n));
  grid.weights.resize(n);
  const int di[4] = {1, -1, 0, 0};
  const int dj[4] = {0, 0, 1, -1};
  for (Eigen::Index k = 0; k < n; ++k) {
    const int i = grid.node_i[k], j = grid.node_j[k];
    auto& a = grid.arms[k];
    double diag = 0.0;
    for (int dir = 0; dir < 4; ++dir) {
      const int ni = i + di[dir], nj = j + dj[dir];
      int neighbour = -1;
      if (ni >= 0 && ni < nx && nj >= 0 && nj < ny) {
        neighbour = grid.index[std::size_t(nj) * nx + ni];
      }
      if (a(dir) >= 1.0 && neighbour >= 0) {
        diag += 1.0 / h2;
        triplets.emplace_back(k, neighbour, -1.0 / h2);
      } else {
        // Boundary value 0 at distance arm * h (a full arm whose neighbour
        // was dropped as a near-boundary node also lands here).
        a(dir) = std::min(a(dir), 1.0);
        diag += 1.0 / (a(dir) * h2);
      }
    }
    triplets.emplace_back(k, k, diag);
    const double fx = std::min(a(0), 0.5) + std::min(a(1), 0.5);
    const double fy = std::min(a(2), 0.5) + std::min(a(3), 0.5);
    grid.weights(k) = fx * fy * h2;
  }
  grid.laplacian.resize(n, n);
  grid.laplacian.setFromTriplets(triplets.begin(), triplets.end());
  return grid;
}

Eigen::VectorXd solve_grid(const GridProblem& grid, const Eigen::VectorXd& rhs,
                           const Eigen::VectorXd* guess) {
  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                           Eigen::DiagonalPreconditioner<double>>
      cg;
  cg.setTolerance(1e-10);
  const auto cap = Eigen::Index(std::ceil(50.0 * std::sqrt(double(grid.unknowns()))));
  cg.setMaxIterations(std::max<Eigen::Index>(cap, 1));
  cg.compute(grid.laplacian);
  Eigen::VectorXd x;
  if (guess) {
    x = cg.solveWithGuess(rhs, *guess);
  } else {
    x = cg.solve(rhs);
  }
  if (cg.info() != Eigen::Success || !(cg.error() <= 1e-10)) {
    throw Error(ErrorKind::solver, "poisson",
                "conjugate gradient stopped at relative residual " +
                    std::to_string(cg.error()) + " after " +
                    std::to_string(cg.iterations()) + " iterations",
                cg.error());
  }
  return x;
}

Eigen::VectorXd stress_function(const GridProblem& grid) {
  return solve_grid(grid, Eigen::VectorXd::Constant(grid.unknowns(), 2.0));
}

namespace {

RigidityResult rigidity_on_grid(const GridProblem& grid) {
  const Eigen::VectorXd u = stress_function(grid);
  RigidityResult r;
  r.h = grid.h;
  r.u_integral = grid.weights.dot(u);
  r.rho = 2.0 * r.u_integral;
  r.gradient_energy = grid.h * grid.h * u.dot(grid.laplacian * u);
  r.rho_energy = 4.0 * r.u_integral * r.u_integral / r.gradient_energy;
  r.min_u = u.minCoeff();
  return r;
}

}  // namespace

RigidityResult torsional_rigidity(const Domain& domain, double h,
                                  bool richardson) {
  RigidityResult r = rigidity_on_grid(build_grid_problem(domain, h));
  if (richardson) {
    const RigidityResult fine = rigidity_on_grid(build_grid_problem(domain, 0.5 * h));
    r.rho_half = fine.rho;
    r.extrapolated = (4.0 * fine.rho - r.rho) / 3.0;
    r.error_estimate = 2.0 * std::abs(r.rho - fine.rho);
  }
  return r;
}

double ground_eigenvalue_on_grid(const GridProblem& grid, int* iterations) {
  const Eigen::Index n = grid.unknowns();
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n).normalized();
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  double previous = 0.0;
  for (int iter = 1; iter <= 500; ++iter) {
    const Eigen::VectorXd guess = previous > 0.0 ? Eigen::VectorXd(x / previous) : y;
    y = solve_grid(grid, x, &guess);
    x = y.normalized();
    const double rq = x.dot(grid.laplacian * x);
    if (previous > 0.0 && std::abs(rq - previous) < 1e-8 * rq) {
      if (iterations) *iterations = iter;
      return rq;
    }
    previous = rq;
  }
  throw Error(ErrorKind::solver, "poisson",
              "inverse iteration did not converge in 500 steps");
}

EigenvalueResult dirichlet_ground_eigenvalue(const Domain& domain, double h,
                                             bool richardson) {
  EigenvalueResult r;
  r.h = h;
  r.value = ground_eigenvalue_on_grid(build_grid_problem(domain, h), &r.iterations);
  if (richardson) {
    r.value_half = ground_eigenvalue_on_grid(build_grid_problem(domain, 0.5 * h));
    r.extrapolated = (4.0 * r.value_half - r.value) / 3.0;
    r.error_estimate = 2.0 * std::abs(r.value - r.value_half);
  }
  return r;
}

void write_grid_csv(std::ostream& out, const GridProblem& grid,
                    const Eigen::VectorXd& u) {
  const auto precision = out.precision(17);
  out << "i,j,x,y,u\n";
  for (Eigen::Index k = 0; k < grid.unknowns(); ++k) {
    const Complex z = grid.node(k);
    out << grid.node_i[k] << ',' << grid.node_j[k] << ',' << z.real() << ','
        << z.imag() << ',' << u(k) << '\n';
  }
  out.precision(precision);
}

}  // namespace bergman
