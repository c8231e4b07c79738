#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bergman/basis.hpp"
#include "bergman/geometry.hpp"
#include "bergman/poisson.hpp"
#include "bergman/projection.hpp"

namespace bergman {

/// sqrt(rho) <= lambda <= area / sqrt(2 pi).
struct SandwichReport {
  std::string label;
  double area = 0.0;
  double perimeter = 0.0;
  double rho = 0.0;            // Richardson-extrapolated rigidity
  double rho_error = 0.0;
  double sqrt_rho = 0.0;
  double sqrt_rho_error = 0.0;
  double lambda = 0.0;
  double lambda_error = 0.0;   // change from dropping the top two monomials
  double upper = 0.0;
  double lower_margin = 0.0;   // lambda - sqrt_rho
  double upper_margin = 0.0;   // upper - lambda
  bool ordered = false;        // both inequalities within the error estimates
  std::size_t basis_size = 0;
  double h = 0.0;
};

/// `h <= 0` selects diameter / 256.
SandwichReport sandwich(const Domain& domain, const BasisSpec& basis,
                        double h = 0.0, std::string label = {});

/// rho <= area^2 / (2 pi) for simply connected domains, together with the
/// coarser bound 4 area^2 / (j0^2 pi).
struct StVenantReport {
  double rho = 0.0;
  double rho_error = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - rho
  bool holds = false;
  double coarse_bound = 0.0;
  bool coarse_is_weaker = false;
};

/// Throws Error(input) for domains with holes.
StVenantReport st_venant_check(const Domain& domain, double h = 0.0);

/// 2 / sqrt(Lambda_1) <= (2 / j0) sqrt(area / pi).
struct FaberKrahnReport {
  double lambda1 = 0.0;  // Richardson-extrapolated
  double lambda1_error = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

FaberKrahnReport faber_krahn_check(const Domain& domain, double h = 0.0);

/// (1/pi) * integral over the domain of dA(z) / (z - zeta), evaluated as
/// (1 / 2 pi i) * loop integral of (conj z - conj zeta) / (z - zeta) dz.
/// Throws Error(accuracy) for zeta within 1e-9 * diameter of the boundary.
Complex cauchy_transform(const Domain& domain, Complex zeta);

struct CauchyNormReport {
  std::string label;
  double norm = 0.0;
  double norm_error = 0.0;  // |norm(h) - norm(2h)|
  double bound = 0.0;       // area / sqrt(2 pi)
  double margin = 0.0;      // bound - norm
  bool satisfied = false;   // norm <= bound + norm_error
  double h = 0.0;
};

/// L2 norm of the transform by the midpoint rule on an h-grid; cells within
/// 2h of the boundary are split 4 x 4. `h <= 0` selects diameter / 128.
CauchyNormReport cauchy_norm_conjecture(const Domain& domain, double h = 0.0,
                                        std::string label = {});

struct SweepItem {
  std::string label;
  Domain domain;
  BasisOptions basis;
};

struct SweepRow {
  SandwichReport sandwich;
  CauchyNormReport cauchy;
  bool simply_connected = true;
  StVenantReport st_venant;  // meaningful only when simply connected
};

/// Runs the reports for every item concurrently; rows come back in input
/// order.
std::vector<SweepRow> sweep(const std::vector<SweepItem>& items, double h = 0.0,
                            double cauchy_h = 0.0);

/// Header "label,area,perimeter,sqrt_rho,lambda,upper,cauchy_norm,
/// lower_margin,upper_margin,cauchy_margin,st_venant_margin,sqrt_rho_error,
/// lambda_error,cauchy_error,ordered".
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace bergman
