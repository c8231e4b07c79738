#include "bergman/projection.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <ostream>

namespace bergman {

namespace {

std::optional<Eigen::VectorXcd> solve_hermitian(const Eigen::MatrixXcd& m,
                                                const Eigen::VectorXcd& rhs) {
  const Eigen::LDLT<Eigen::MatrixXcd> ldlt(m);
  if (ldlt.info() != Eigen::Success) return std::nullopt;
  const Eigen::VectorXd d = ldlt.vectorD().real();
  const double dmax = d.cwiseAbs().maxCoeff();
  const double floor = dmax * std::numeric_limits<double>::epsilon() *
                       double(m.rows());
  if (!(dmax > 0.0) || (d.array() <= floor).any()) return std::nullopt;
  Eigen::VectorXcd x = ldlt.solve(rhs);
  if (!x.allFinite()) return std::nullopt;
  return x;
}

double condition_estimate(const Eigen::MatrixXcd& g) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(
      g, Eigen::EigenvaluesOnly);
  const double hi = eig.eigenvalues().maxCoeff();
  const double lo = eig.eigenvalues().minCoeff();
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

const char* kind_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::monomial: return "monomial";
    case BasisKind::pole: return "pole";
    case BasisKind::log_derivative: return "logderiv";
  }
  return "?";
}

}  // namespace

ProjectionResult project_zbar(const Domain& domain, const BasisSpec& basis,
                              const QuadratureOptions& options) {
  validate_basis(domain, basis);
  const Complex c = domain.centroid();
  const auto sys =
      assemble_projection_system(domain, basis.elements, c, options);
  const auto constant = basis.constant_index();

  // With the constant in the span only conj(w) needs projecting; this keeps
  // the Pythagoras subtraction free of the |centroid|^2 area term.
  Eigen::VectorXcd rhs = sys.wbar;
  double target_norm = sys.wbar_norm_sq;
  if (!constant) {
    rhs += std::conj(c) * sys.ones;
    target_norm += std::norm(c) * sys.area;
  }

  ProjectionResult result;
  result.basis = basis;
  result.gram = sys.gram;
  result.centroid = c;
  result.area = sys.area;
  result.zbar_norm_sq = sys.wbar_norm_sq + std::norm(c) * sys.area;
  result.diagnostics.condition = condition_estimate(sys.gram);

  auto solution = solve_hermitian(sys.gram, rhs);
  if (!solution) {
    const double eps = 1e-12 * sys.gram.trace().real() / double(sys.gram.rows());
    Eigen::MatrixXcd ridged = sys.gram;
    ridged.diagonal().array() += eps;
    solution = solve_hermitian(ridged, rhs);
    result.diagnostics.ridge_used = true;
    result.diagnostics.ridge = eps;
    if (!solution) {
      throw Error(ErrorKind::conditioning, "bergman",
                  "Gram factorization failed after ridge regularization "
                  "(condition estimate " +
                      std::to_string(result.diagnostics.condition) + ")",
                  result.diagnostics.condition);
    }
  }
  const Eigen::VectorXcd& x = *solution;
  // Squared residual of the computed f, exact for any coefficient vector.
  const double gq = (x.adjoint() * sys.gram * x)(0, 0).real();
  double lambda_sq = target_norm - 2.0 * x.dot(rhs).real() + gq;
  if (lambda_sq < 0.0) {
    result.diagnostics.clamp = -lambda_sq;
    lambda_sq = 0.0;
  }
  result.lambda = std::sqrt(lambda_sq);
  result.diagnostics.pythagoras_gap = std::abs(lambda_sq - (target_norm - gq));

  result.coefficients = x;
  if (constant) result.coefficients(Eigen::Index(*constant)) += std::conj(c);

  for (std::size_t k = 0; k < basis.elements.size(); ++k) {
    if (!basis.elements[k].has_log_antiderivative()) continue;
    const Complex ck = result.coefficients(Eigen::Index(k));
    if (std::abs(ck.imag()) > 1e-8 * std::abs(ck) && std::abs(ck) > 1e-12) {
      result.diagnostics.non_real_log_terms.push_back(k);
    }
  }
  return result;
}

Complex evaluate_f(const ProjectionResult& result, Complex point) {
  Complex sum = 0.0;
  const auto& els = result.basis.elements;
  for (std::size_t k = 0; k < els.size(); ++k) {
    if (els[k].pole_order() > 0 &&
        std::abs(point - els[k].center) <= 1e-14 * (1.0 + std::abs(point))) {
      throw Error(ErrorKind::evaluation, "bergman",
                  "evaluation at a pole of the basis");
    }
    sum += result.coefficients(Eigen::Index(k)) * els[k](point);
  }
  if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
    throw Error(ErrorKind::evaluation, "bergman", "f is not finite at point");
  }
  return sum;
}

AnalyticExpansion antiderivative(const ProjectionResult& result) {
  AnalyticExpansion F;
  const auto& els = result.basis.elements;
  for (std::size_t k = 0; k < els.size(); ++k) {
    const auto& e = els[k];
    const Complex c = result.coefficients(Eigen::Index(k));
    ExpansionTerm t;
    t.center = e.center;
    if (e.kind == BasisKind::monomial) {
      t.kind = TermKind::power;
      t.scale = e.scale;
      t.exponent = e.exponent + 1;
      t.coefficient = c * e.scale / double(e.exponent + 1);
    } else if (e.exponent == 1) {
      t.kind = TermKind::log;
      t.coefficient = c;
      t.cut_direction = cut_direction(result.centroid, e.center);
    } else {
      t.kind = TermKind::inverse_power;
      t.exponent = e.exponent - 1;
      t.coefficient = -c / double(e.exponent - 1);
    }
    F.terms.push_back(t);
  }
  return F;
}

BoundaryDefect boundary_defect(const Domain& domain, const AnalyticExpansion& F,
                               int min_samples) {
  for (const auto k : F.complex_log_terms()) {
    const auto& t = F.terms[k];
    for (const auto& x : domain.crossings_horizontal(t.center.imag())) {
      const bool on_ray = t.cut_direction > 0 ? x.position > t.center.real()
                                              : x.position < t.center.real();
      if (on_ray) {
        throw Error(ErrorKind::branch, "bergman",
                    "log term with non-real coefficient has its cut crossing "
                    "the boundary");
      }
    }
  }
  std::size_t piece_count = 0;
  for (const auto& comp : domain.components()) piece_count += comp.pieces().size();
  const int per_piece =
      std::max(8, int((min_samples + piece_count - 1) / piece_count));

  std::vector<double> values;
  for (const auto& comp : domain.components()) {
    for (const auto& piece : comp.pieces()) {
      for (int i = 0; i <= per_piece; ++i) {
        const double t =
            piece.t0() + (piece.t1() - piece.t0()) * double(i) / per_piece;
        const Complex z = piece.point(t);
        values.push_back(std::norm(z) - 2.0 * F.real_part(z));
      }
    }
  }
  BoundaryDefect out;
  out.samples = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  out.c0 = sum / double(values.size());
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, std::abs(v - out.c0));
  const double d = domain.diameter();
  out.defect = worst / (d * d);
  return out;
}

double orthogonality_report(const Domain& domain, const ProjectionResult& result) {
  QuadratureOptions independent;
  independent.start_order = 24;
  independent.max_order = 384;
  const auto sys = assemble_projection_system(domain, result.basis.elements,
                                              result.centroid, independent);
  const Eigen::VectorXcd b =
      sys.wbar + std::conj(result.centroid) * sys.ones;
  const Eigen::VectorXcd r = b - sys.gram * result.coefficients;
  return r.cwiseAbs().maxCoeff();
}

void write_coefficients_csv(std::ostream& out, const ProjectionResult& result) {
  const auto precision = out.precision(17);
  out << "kind,center_re,center_im,scale,exponent,re,im\n";
  const auto& els = result.basis.elements;
  for (std::size_t k = 0; k < els.size(); ++k) {
    const Complex c = result.coefficients(Eigen::Index(k));
    out << kind_name(els[k].kind) << ',' << els[k].center.real() << ','
        << els[k].center.imag() << ',' << els[k].scale << ','
        << els[k].exponent << ',' << c.real() << ',' << c.imag() << '\n';
  }
  out.precision(precision);
}

void write_projection_summary(std::ostream& out, const ProjectionResult& result,
                              const BoundaryDefect& defect,
                              double orthogonality) {
  const auto precision = out.precision(17);
  out << "lambda,c0,defect,orthogonality,condition,ridge\n"
      << result.lambda << ',' << defect.c0 << ',' << defect.defect << ','
      << orthogonality << ',' << result.diagnostics.condition << ','
      << result.diagnostics.ridge << '\n';
  out.precision(precision);
}

}  // namespace bergman
