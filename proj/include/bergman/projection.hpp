#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "bergman/basis.hpp"
#include "bergman/moments.hpp"

namespace bergman {

struct ProjectionDiagnostics {
  double condition = 1.0;        // eigenvalue ratio of the Gram matrix
  bool ridge_used = false;
  double ridge = 0.0;
  double clamp = 0.0;            // |negative radicand| when lambda^2 was clamped
  double pythagoras_gap = 0.0;   // |lambda^2 - (||conj z||^2 - c^H G c)|
  std::vector<std::size_t> non_real_log_terms;  // basis indices
};

/// Best approximation f = sum c_k phi_k of conj(z) in span(basis), with the
/// residual lambda = ||conj(z) - f||.
struct ProjectionResult {
  BasisSpec basis;
  Eigen::VectorXcd coefficients;
  double lambda = 0.0;
  double zbar_norm_sq = 0.0;
  Eigen::MatrixXcd gram;
  Complex centroid{};
  double area = 0.0;
  ProjectionDiagnostics diagnostics;
};

ProjectionResult project_zbar(const Domain& domain, const BasisSpec& basis,
                              const QuadratureOptions& options = {});

/// f(point). Throws Error(evaluation) at a pole.
Complex evaluate_f(const ProjectionResult& result, Complex point);

/// F with F' = f and F(constant term) = 0. Simple poles become logarithms
/// cut horizontally away from the centroid.
AnalyticExpansion antiderivative(const ProjectionResult& result);

struct BoundaryDefect {
  double c0 = 0.0;      // mean of |z|^2 - 2 Re F over the samples
  double defect = 0.0;  // max deviation from c0 divided by diameter^2
  std::size_t samples = 0;
};

/// Samples |z|^2 - 2 Re F(z) on the boundary (at least 512 points plus all
/// piece endpoints). Throws Error(branch) when a log term with non-real
/// coefficient has its cut crossing the boundary.
BoundaryDefect boundary_defect(const Domain& domain, const AnalyticExpansion& F,
                               int min_samples = 512);

/// max_k |<conj(z) - f, phi_k>| with the inner products recomputed on an
/// independent quadrature schedule.
double orthogonality_report(const Domain& domain, const ProjectionResult& result);

/// Rows "kind,center_re,center_im,scale,exponent,re,im".
void write_coefficients_csv(std::ostream& out, const ProjectionResult& result);
/// Header "lambda,c0,defect,orthogonality,condition,ridge" and one row.
void write_projection_summary(std::ostream& out, const ProjectionResult& result,
                              const BoundaryDefect& defect,
                              double orthogonality);

}  // namespace bergman
