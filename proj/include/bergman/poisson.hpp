#pragma once

#include <cmath>
#include <iosfwd>
#include <limits>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "bergman/geometry.hpp"

namespace bergman {

/// Cell-centred grid over the bounding box with cut-cell arms. Arm lengths
/// are fractions of h in (0, 1]; 1 means the neighbour is an unknown.
struct GridProblem {
  double h = 0.0;
  int nx = 0, ny = 0;
  double x0 = 0.0, y0 = 0.0;          // first node centre
  std::vector<int> index;             // nx * ny, -1 outside
  std::vector<int> node_i, node_j;    // per unknown
  std::vector<Eigen::Vector4d> arms;  // per unknown: east, west, north, south
  Eigen::SparseMatrix<double> laplacian;  // -Laplace, symmetric positive definite
  Eigen::VectorXd weights;                // quadrature weights for integral u dA

  Eigen::Index unknowns() const { return Eigen::Index(node_i.size()); }
  Complex node(Eigen::Index k) const {
    return Complex(x0 + node_i[k] * h, y0 + node_j[k] * h);
  }
};

/// Shortley-Weller style grid in the symmetric form: a cut arm of length
/// theta*h contributes 1/(theta h^2) to the diagonal and nothing off it.
/// Requires h <= diameter / 32.
GridProblem build_grid_problem(const Domain& domain, double h);

/// Preconditioned CG (diagonal), relative residual 1e-10, at most
/// 50 sqrt(n) iterations; throws Error(solver) otherwise.
Eigen::VectorXd solve_grid(const GridProblem& grid, const Eigen::VectorXd& rhs,
                           const Eigen::VectorXd* guess = nullptr);

struct RigidityResult {
  double rho = 0.0;              // 2 * integral of u at spacing h
  double u_integral = 0.0;
  double gradient_energy = 0.0;  // integral of |grad u|^2
  double rho_energy = 0.0;       // 4 (integral u)^2 / gradient energy
  double h = 0.0;
  double rho_half = std::numeric_limits<double>::quiet_NaN();  // at h / 2
  double extrapolated = std::numeric_limits<double>::quiet_NaN();
  double error_estimate = std::numeric_limits<double>::quiet_NaN();
  double min_u = 0.0;
};

/// Stress function -Laplace u = 2, u = 0 on the boundary. With
/// `richardson`, a second solve at h/2 supplies the extrapolated value and
/// the error estimate 2 |rho(h) - rho(h/2)| for rho(h).
RigidityResult torsional_rigidity(const Domain& domain, double h,
                                  bool richardson = true);

/// Stress function values on the grid (for the CSV dump and tests).
Eigen::VectorXd stress_function(const GridProblem& grid);

struct EigenvalueResult {
  double value = 0.0;  // at spacing h
  double h = 0.0;
  double value_half = std::numeric_limits<double>::quiet_NaN();
  double extrapolated = std::numeric_limits<double>::quiet_NaN();
  double error_estimate = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
};

/// Smallest eigenvalue of the discrete Dirichlet Laplacian by inverse power
/// iteration until the Rayleigh quotient changes by < 1e-8 relative.
EigenvalueResult dirichlet_ground_eigenvalue(const Domain& domain, double h,
                                             bool richardson = true);
double ground_eigenvalue_on_grid(const GridProblem& grid, int* iterations = nullptr);

/// Rows "i,j,x,y,u".
void write_grid_csv(std::ostream& out, const GridProblem& grid,
                    const Eigen::VectorXd& u);

/// J0 from its power series, terms summed smallest first with Kahan
/// compensation.
template <typename Scalar>
Scalar bessel_j0(Scalar x) {
  const Scalar q = (x / 2) * (x / 2);
  std::vector<Scalar> terms{Scalar(1)};
  Scalar term = 1;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (Scalar(k) * Scalar(k));
    terms.push_back(term);
    if (Scalar(k) > x && std::abs(term) < std::numeric_limits<Scalar>::epsilon() *
                                              std::numeric_limits<Scalar>::epsilon()) {
      break;
    }
  }
  Scalar sum = 0, carry = 0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Scalar y = *it - carry;
    const Scalar t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

/// First positive zero of J0 by bisection on [2, 3].
template <typename Scalar>
Scalar bessel_j0_first_zero() {
  Scalar lo = 2, hi = 3;
  Scalar flo = bessel_j0(lo);
  for (int iter = 0; iter < 200 && hi - lo > 0; ++iter) {
    const Scalar mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    const Scalar fm = bessel_j0(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace bergman
