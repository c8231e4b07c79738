#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bergman/basis.hpp"
#include "bergman/geometry.hpp"

namespace bergman {

/// Adaptive Gauss-Legendre control for boundary integrals: the per-piece
/// order doubles from `start_order` until successive estimates agree to
/// `tolerance` (relative), failing above `failure_tolerance` at `max_order`.
struct QuadratureOptions {
  int start_order = 16;
  int max_order = 256;
  double tolerance = 1e-10;
  double failure_tolerance = 1e-9;
};

/// Integral over the domain of w^m conj(w)^n, w = z - center, reduced to
/// (1 / (2i(n+1))) * loop integral of w^m conj(w)^(n+1) dz.
Complex complex_moment(const Domain& domain, int m, int n, Complex center = 0.0,
                       const QuadratureOptions& options = {});

/// All moments with 0 <= m, n <= max_degree about one center.
class MomentTable {
 public:
  MomentTable(const Domain& domain, int max_degree, Complex center = 0.0,
              const QuadratureOptions& options = {});

  Complex operator()(int m, int n) const { return values_(m, n); }
  int max_degree() const { return int(values_.rows()) - 1; }
  Complex center() const { return center_; }
  const Eigen::MatrixXcd& values() const { return values_; }

  /// Rows "m,n,center_re,center_im,re,im".
  void write_csv(std::ostream& out) const;

 private:
  Eigen::MatrixXcd values_;
  Complex center_;
};

/// Portion of the horizontal log cut from `apex` that runs through the
/// domain, plus the boundary points where the cut meets the boundary.
struct LogCut {
  Complex apex;
  int direction = 1;
  std::vector<std::pair<Complex, Complex>> segments;  // oriented along the ray
  std::vector<PieceSplit> splits;
};

LogCut make_log_cut(const Domain& domain, Complex apex);

/// Matrix of area inner products, entry (j, k) = <fs[k], gs[j]> =
/// integral of fs[k] * conj(gs[j]) dA. Each entry is reduced to a boundary
/// integral through the antiderivative of gs[j]; logarithmic antiderivatives
/// carry an explicit branch-cut correction.
Eigen::MatrixXcd area_products(const Domain& domain,
                               std::span<const BasisElement> fs,
                               std::span<const BasisElement> gs,
                               const QuadratureOptions& options = {});

/// <f, g> = integral of f conj(g) dA.
Complex inner_product(const Domain& domain, const BasisElement& f,
                      const BasisElement& g,
                      const QuadratureOptions& options = {});

/// <conj(z), g> = integral of conj(z) conj(g) dA.
Complex zbar_inner_product(const Domain& domain, const BasisElement& g,
                           const QuadratureOptions& options = {});

/// Everything the normal equations need, with conj(z) expanded about
/// `center` as conj(w) + conj(center).
struct ProjectionSystem {
  Eigen::MatrixXcd gram;       // (j, k) = <phi_k, phi_j>, Hermitian
  Eigen::VectorXcd wbar;       // <conj(w), phi_j>
  Eigen::VectorXcd ones;       // <1, phi_j>
  double wbar_norm_sq = 0.0;   // ||conj(w)||^2
  double area = 0.0;
  Complex center{};
};

ProjectionSystem assemble_projection_system(
    const Domain& domain, std::span<const BasisElement> basis, Complex center,
    const QuadratureOptions& options = {});

}  // namespace bergman
