#include "bergman/content.hpp"

#include <cmath>
#include <future>
#include <string>
#include <ostream>

#include "bergman/quadrature.hpp"

namespace bergman {

namespace {

double default_spacing(const Domain& domain, double h, int divisions) {
  return h > 0.0 ? h : domain.diameter() / divisions;
}

/// Basis without its two highest-degree monomials, or nullopt when that
/// would leave fewer than one monomial.
std::optional<BasisSpec> reduced_basis(const BasisSpec& basis) {
  std::vector<std::pair<int, std::size_t>> monomials;
  for (std::size_t k = 0; k < basis.elements.size(); ++k) {
    if (basis.elements[k].kind == BasisKind::monomial) {
      monomials.emplace_back(basis.elements[k].exponent, k);
    }
  }
  if (monomials.size() < 3) return std::nullopt;
  std::sort(monomials.begin(), monomials.end());
  const std::size_t drop1 = monomials[monomials.size() - 1].second;
  const std::size_t drop2 = monomials[monomials.size() - 2].second;
  BasisSpec reduced;
  for (std::size_t k = 0; k < basis.elements.size(); ++k) {
    if (k != drop1 && k != drop2) reduced.elements.push_back(basis.elements[k]);
  }
  return reduced;
}

/// Loop integral of (conj w) / w dz, w = z - zeta, along one straight
/// segment, in closed form.
Complex segment_kernel(Complex a, Complex b, Complex zeta) {
  const Complex wa = a - zeta, wb = b - zeta, d = b - a;
  const Complex ratio = std::conj(d) / d;
  return std::conj(d) + (std::conj(wa) - ratio * wa) * std::log(wb / wa);
}

Complex adaptive_piece(const CurvePiece& piece, double ta, double tb,
                       Complex zeta, double tol, int depth, const Complex& whole) {
  const auto& rule = cached_gauss_legendre(16);
  auto gauss = [&](double lo, double hi) {
    Complex s = 0.0;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double t = mid + half * rule.nodes[q];
      const Complex z = piece.point(t);
      const Complex w = z - zeta;
      s += std::conj(w) / w * piece.tangent(t) * (half * rule.weights[q]);
    }
    return s;
  };
  const double tm = 0.5 * (ta + tb);
  const Complex left = gauss(ta, tm), right = gauss(tm, tb);
  if (std::abs(left + right - whole) <= tol) return left + right;
  if (depth >= 50) {
    throw Error(ErrorKind::accuracy, "content",
                "Cauchy transform quadrature did not converge");
  }
  // The tolerance is not halved: near zeta the integrand carries a roundoff
  // floor of eps / |z - zeta| that a halving schedule would chase forever.
  return adaptive_piece(piece, ta, tm, zeta, tol, depth + 1, left) +
         adaptive_piece(piece, tm, tb, zeta, tol, depth + 1, right);
}

Complex piece_kernel(const CurvePiece& piece, Complex zeta, double tol) {
  if (piece.kind() == PieceKind::segment) {
    return segment_kernel(piece.start(), piece.end(), zeta);
  }
  const auto& rule = cached_gauss_legendre(16);
  Complex whole = 0.0;
  const double mid = 0.5 * (piece.t0() + piece.t1());
  const double half = 0.5 * (piece.t1() - piece.t0());
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double t = mid + half * rule.nodes[q];
    const Complex w = piece.point(t) - zeta;
    whole += std::conj(w) / w * piece.tangent(t) * (half * rule.weights[q]);
  }
  return adaptive_piece(piece, piece.t0(), piece.t1(), zeta, tol, 0, whole);
}

double cauchy_norm_at(const Domain& domain, double h) {
  const int nx = int(std::ceil((domain.xmax() - domain.xmin()) / h));
  const int ny = int(std::ceil((domain.ymax() - domain.ymin()) / h));
  const double floor = 1e-9 * domain.diameter();
  double sum = 0.0;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Complex c(domain.xmin() + (i + 0.5) * h, domain.ymin() + (j + 0.5) * h);
      if (domain.distance_to_boundary(c) > 2.0 * h) {
        if (domain.winding_number(c) == 1) {
          sum += std::norm(cauchy_transform(domain, c)) * h * h;
        }
        continue;
      }
      const double s = h / 4.0;
      for (int b = 0; b < 4; ++b) {
        for (int a = 0; a < 4; ++a) {
          const Complex p = c + Complex((a - 1.5) * s, (b - 1.5) * s);
          if (domain.distance_to_boundary(p) <= floor) continue;
          if (domain.winding_number(p) != 1) continue;
          sum += std::norm(cauchy_transform(domain, p)) * s * s;
        }
      }
    }
  }
  return std::sqrt(sum);
}

}  // namespace

SandwichReport sandwich(const Domain& domain, const BasisSpec& basis, double h,
                        std::string label) {
  SandwichReport r;
  r.label = std::move(label);
  r.h = default_spacing(domain, h, 256);
  r.area = area(domain);
  r.perimeter = perimeter(domain);
  r.basis_size = basis.elements.size();

  const auto projection = project_zbar(domain, basis);
  r.lambda = projection.lambda;
  if (const auto reduced = reduced_basis(basis)) {
    r.lambda_error = std::max(0.0, project_zbar(domain, *reduced).lambda - r.lambda);
  }

  const auto rigidity = torsional_rigidity(domain, r.h, true);
  r.rho = rigidity.extrapolated;
  r.rho_error = rigidity.error_estimate;
  r.sqrt_rho = std::sqrt(r.rho);
  r.sqrt_rho_error = r.rho_error / (2.0 * r.sqrt_rho);
  r.upper = r.area / std::sqrt(2.0 * pi);
  r.lower_margin = r.lambda - r.sqrt_rho;
  r.upper_margin = r.upper - r.lambda;
  const double slack = r.sqrt_rho_error + r.lambda_error + 1e-12 * r.upper;
  r.ordered = r.lower_margin >= -slack &&
              r.upper_margin >= -(r.lambda_error + 1e-12 * r.upper);
  return r;
}

namespace {

void require_simply_connected(const Domain& domain) {
  if (domain.hole_count() > 0) {
    throw Error(ErrorKind::input, "content",
                "St. Venant check needs a simply connected domain");
  }
}

StVenantReport st_venant_from(const Domain& domain, double rho,
                              double rho_error) {
  const double a = area(domain);
  const double j0 = bessel_j0_first_zero<double>();
  StVenantReport r;
  r.rho = rho;
  r.rho_error = rho_error;
  r.bound = a * a / (2.0 * pi);
  r.margin = r.bound - r.rho;
  r.holds = r.margin >= -r.rho_error;
  r.coarse_bound = 4.0 * a * a / (j0 * j0 * pi);
  r.coarse_is_weaker = r.coarse_bound > r.bound;
  return r;
}

}  // namespace

StVenantReport st_venant_check(const Domain& domain, double h) {
  require_simply_connected(domain);
  const auto rigidity =
      torsional_rigidity(domain, default_spacing(domain, h, 256), true);
  return st_venant_from(domain, rigidity.extrapolated, rigidity.error_estimate);
}

FaberKrahnReport faber_krahn_check(const Domain& domain, double h) {
  const auto e =
      dirichlet_ground_eigenvalue(domain, default_spacing(domain, h, 128), true);
  const double j0 = bessel_j0_first_zero<double>();
  FaberKrahnReport r;
  r.lambda1 = e.extrapolated;
  r.lambda1_error = e.error_estimate;
  r.lhs = 2.0 / std::sqrt(r.lambda1);
  r.rhs = 2.0 / j0 * std::sqrt(area(domain) / pi);
  r.holds = r.lhs <= r.rhs + r.lhs * r.lambda1_error / (2.0 * r.lambda1);
  return r;
}

Complex cauchy_transform(const Domain& domain, Complex zeta) {
  const double dist = domain.distance_to_boundary(zeta);
  if (dist < 1e-9 * domain.diameter()) {
    throw Error(ErrorKind::accuracy, "content",
                "Cauchy transform point is too close to the boundary");
  }
  const double tol = 1e-13 * domain.diameter();
  Complex sum = 0.0;
  for (const auto& comp : domain.components()) {
    for (const auto& piece : comp.pieces()) sum += piece_kernel(piece, zeta, tol);
  }
  return sum / Complex(0.0, 2.0 * pi);
}

CauchyNormReport cauchy_norm_conjecture(const Domain& domain, double h,
                                        std::string label) {
  CauchyNormReport r;
  r.label = std::move(label);
  r.h = default_spacing(domain, h, 128);
  r.norm = cauchy_norm_at(domain, r.h);
  r.norm_error = std::abs(r.norm - cauchy_norm_at(domain, 2.0 * r.h));
  r.bound = area(domain) / std::sqrt(2.0 * pi);
  r.margin = r.bound - r.norm;
  r.satisfied = r.margin >= -r.norm_error;
  return r;
}

std::vector<SweepRow> sweep(const std::vector<SweepItem>& items, double h,
                            double cauchy_h) {
  std::vector<std::future<SweepRow>> jobs;
  for (const auto& item : items) {
    jobs.push_back(std::async(std::launch::async, [&item, h, cauchy_h] {
      SweepRow row;
      row.sandwich = sandwich(item.domain, make_basis(item.domain, item.basis),
                              h, item.label);
      row.cauchy = cauchy_norm_conjecture(item.domain, cauchy_h, item.label);
      row.simply_connected = item.domain.hole_count() == 0;
      if (row.simply_connected) {
        row.st_venant = st_venant_from(item.domain, row.sandwich.rho,
                                       row.sandwich.rho_error);
      }
      return row;
    }));
  }
  std::vector<SweepRow> rows;
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  const auto precision = out.precision(17);
  out << "label,area,perimeter,sqrt_rho,lambda,upper,cauchy_norm,lower_margin,"
         "upper_margin,cauchy_margin,st_venant_margin,sqrt_rho_error,"
         "lambda_error,cauchy_error,ordered\n";
  for (const auto& row : rows) {
    const auto& s = row.sandwich;
    out << csv_field(s.label) << ',' << s.area << ',' << s.perimeter << ',' << s.sqrt_rho
        << ',' << s.lambda << ',' << s.upper << ',' << row.cauchy.norm << ','
        << s.lower_margin << ',' << s.upper_margin << ',' << row.cauchy.margin
        << ',';
    if (row.simply_connected) out << row.st_venant.margin;
    out << ',' << s.sqrt_rho_error << ',' << s.lambda_error << ','
        << row.cauchy.norm_error << ',' << (s.ordered ? 1 : 0) << '\n';
  }
  out.precision(precision);
}

}  // namespace bergman
