// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bergman/content.hpp"
#include "bergman/domain_io.hpp"
#include "bergman/tracer.hpp"
#include "oracles.hpp"

using namespace bergman;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!ok) detail += " [fail]";
  }
};

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

int failures = 0;

void run(int id, const char* name, double limit_seconds,
         const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("error: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) {
    o.require(seconds < limit_seconds, fmt("%.1f s < %.0f s", seconds, limit_seconds));
  } else {
    o.detail += fmt("; %.1f s", seconds);
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %-22s %s\n", o.pass ? "PASS" : "FAIL", id, name,
              o.detail.c_str());
  std::fflush(stdout);
}

BasisSpec monomials(const Domain& d, int degree) {
  return make_basis(d, {.degree = degree, .hole_pole_order = 0, .poles = {}});
}

double max_error(const std::vector<Complex>& pts,
                 const std::function<Complex(Complex)>& a,
                 const std::function<Complex(Complex)>& b) {
  double e = 0.0;
  for (const auto& p : pts) e = std::max(e, std::abs(a(p) - b(p)));
  return e;
}

const BasisOptions fig34_basis{.degree = 12, .hole_pole_order = 0,
                               .poles = {{0.0, 1}, {0.5, 1}}};

}  // namespace

int main() {
  const Domain disk = make_disk();
  const Domain annulus = make_annulus(0.0, 0.5, 1.0);
  const Domain ellipse = make_ellipse(0.0, 2.0, 1.0);
  const Domain square = make_rectangle(0.0, 1.0, 1.0);
  const Domain rect = make_rectangle(0.0, 2.0, 1.0);
  const double square_rho = oracle::square_torsion(1.0);

  run(1, "disk nullity", 1.0, [&](Outcome& o) {
    const auto r = project_zbar(disk, monomials(disk, 10));
    const double lambda_sq_oracle =
        oracle::polar_integral([](Complex z) { return std::norm(z); }, 0.0, 0.0, 1.0)
            .real();
    o.require(r.coefficients.cwiseAbs().maxCoeff() < 1e-10,
              fmt("max|c| %.1e", r.coefficients.cwiseAbs().maxCoeff()));
    o.require(std::abs(r.lambda * r.lambda - lambda_sq_oracle) < 1e-8,
              fmt("|lambda^2 - pi/2| %.1e", std::abs(r.lambda * r.lambda - lambda_sq_oracle)));
  });

  run(2, "annulus pole", 5.0, [&](Outcome& o) {
    const double c =
        oracle::polar_integral([](Complex) { return Complex(1.0); }, 0.0, 0.5, 1.0).real() /
        oracle::polar_integral([](Complex z) { return 1.0 / std::norm(z); }, 0.0, 0.5, 1.0)
            .real();
    const auto r = project_zbar(annulus, make_basis(annulus));
    const auto pts = interior_sample(annulus, 50, 0.02, 1);
    const double err = max_error(
        pts, [&](Complex z) { return evaluate_f(r, z); }, [&](Complex z) { return c / z; });
    o.require(err < 1e-6, fmt("max|f - c/z| %.1e (c = %.10f)", err, c));
    const auto plain = project_zbar(annulus, monomials(annulus, 12));
    o.require(plain.lambda - r.lambda > 1e-3,
              fmt("lambda gap %.4f", plain.lambda - r.lambda));
  });

  run(3, "ellipse linearity", 5.0, [&](Outcome& o) {
    const auto r = project_zbar(ellipse, make_basis(ellipse));
    const auto pts = interior_sample(ellipse, 50, 0.02, 1);
    const double err = max_error(
        pts, [&](Complex z) { return evaluate_f(r, z); }, [](Complex z) { return 0.6 * z; });
    o.require(err < 1e-8, fmt("max|f - 3z/5| %.1e", err));
    const auto bd = boundary_defect(ellipse, antiderivative(r));
    o.require(bd.defect < 1e-8, fmt("defect %.1e", bd.defect));
    o.require(std::abs(bd.c0 - 1.6) < 1e-8, fmt("|c0 - 8/5| %.1e", std::abs(bd.c0 - 1.6)));
  });

  run(4, "boundary identity", 10.0, [&](Outcome& o) {
    for (const auto& name : builtin_domain_names()) {
      const auto d = resolve_domain(name);
      const auto r = project_zbar(d, make_basis(d));
      const double defect = boundary_defect(d, antiderivative(r)).defect;
      const double ortho = orthogonality_report(d, r);
      o.require(defect < 1e-6 && ortho < 1e-8,
                fmt("%s defect %.1e ortho %.1e", name.c_str(), defect, ortho));
    }
  });

  run(5, "figure round trips", 30.0, [&](Outcome& o) {
    const auto f31 = named_family("fig3.1");
    const auto rt31 = roundtrip(f31, {.degree = 12, .hole_pole_order = 0, .poles = {}});
    o.require(rt31.pointwise_error < 5e-3, fmt("fig3.1 err %.1e", rt31.pointwise_error));
    const auto set31 = trace(f31);
    const auto d31 = to_domain_outer_with_holes(set31);
    std::size_t outer = 0;
    for (std::size_t k = 0; k < set31.curves.size(); ++k) {
      if (set31.curves[k].signed_area > set31.curves[outer].signed_area) outer = k;
    }
    const double sym = rotational_symmetry_defect(set31.curves[outer], 3);
    o.require(d31.hole_count() == 0 && set31.curves.size() == 1 && set31.curves[0].simple,
              fmt("fig3.1 %zu curve, %zu holes", set31.curves.size(), d31.hole_count()));
    o.require(sym < 1e-3, fmt("3-fold %.1e", sym));
    const auto rt34 = roundtrip(named_family("fig3.4"), fig34_basis);
    o.require(rt34.pointwise_error < 5e-3, fmt("fig3.4 err %.1e", rt34.pointwise_error));
    const auto d39 = to_domain_outer_with_holes(trace(named_family("fig3.9")));
    const double dist = d39.distance_to_boundary(0.0);
    o.require(d39.winding_number(0.0) == 0 && dist > 0.0,
              fmt("fig3.9 0 outside, distance %.1e", dist));
  });

  run(6, "rigidity", 60.0, [&](Outcome& o) {
    const struct {
      const char* name;
      const Domain* d;
      double exact;
    } cases[] = {{"disk", &disk, pi / 2}, {"square", &square, square_rho},
                 {"ellipse", &ellipse, 8 * pi / 5}};
    for (const auto& c : cases) {
      const auto r = torsional_rigidity(*c.d, c.d->diameter() / 256);
      const double err = std::abs(r.rho - c.exact);
      o.require(err < 0.005 * c.exact, fmt("%s rel %.1e", c.name, err / c.exact));
      if (c.d == &disk) {
        o.require(r.error_estimate >= err, fmt("estimate %.1e >= %.1e", r.error_estimate, err));
      }
    }
  });

  // Shared by 7 and 8.
  const auto d31 = to_domain_outer_with_holes(trace(named_family("fig3.1")));
  const auto d34 = to_domain_outer_with_holes(trace(named_family("fig3.4")));

  run(7, "sandwich", 0, [&](Outcome& o) {
    const struct {
      const char* name;
      const Domain* d;
      BasisOptions basis;
    } cases[] = {{"disk", &disk, {}},       {"ellipse", &ellipse, {}},
                 {"square", &square, {}},   {"annulus", &annulus, {}},
                 {"fig3.1", &d31, {}},      {"fig3.4", &d34, fig34_basis}};
    for (const auto& c : cases) {
      const auto s = sandwich(*c.d, make_basis(*c.d, c.basis), 0.0, c.name);
      o.require(s.ordered, fmt("%s %.4f<=%.4f<=%.4f", c.name, s.sqrt_rho, s.lambda, s.upper));
      if (c.d == &disk) {
        const double e1 = std::abs(s.sqrt_rho - s.lambda) / s.lambda;
        const double e2 = std::abs(s.upper - s.lambda) / s.lambda;
        o.require(e1 < 1e-6 && e2 < 1e-6, fmt("disk equality %.1e %.1e", e1, e2));
      }
    }
  });

  run(8, "St. Venant", 0, [&](Outcome& o) {
    const struct {
      const char* name;
      const Domain* d;
    } cases[] = {{"disk", &disk},     {"ellipse", &ellipse}, {"square", &square},
                 {"rect", &rect},     {"fig3.1", &d31},      {"fig3.4", &d34}};
    for (const auto& c : cases) {
      const auto s = st_venant_check(*c.d);
      o.require(s.holds, fmt("%s %.2e", c.name, s.margin));
      if (c.d == &disk) o.require(std::abs(s.margin) < 1e-6, "disk |margin| < 1e-6");
    }
  });

  run(9, "eigenvalue chain", 0, [&](Outcome& o) {
    const double j0 = bessel_j0_first_zero<double>();
    const double j0_oracle = oracle::j0_first_zero();
    o.require(std::abs(j0 - 2.404825557695773) < 1e-12 && std::abs(j0 - j0_oracle) < 1e-12,
              fmt("j0 %.15f", j0));
    const auto ed = dirichlet_ground_eigenvalue(disk, disk.diameter() / 128);
    const auto es = dirichlet_ground_eigenvalue(square, square.diameter() / 128);
    o.require(std::abs(ed.value - j0 * j0) < 0.005 * j0 * j0,
              fmt("disk %.4f", ed.value));
    o.require(std::abs(es.value - 2 * pi * pi) < 0.005 * 2 * pi * pi,
              fmt("square %.4f", es.value));
    const auto fd = faber_krahn_check(disk);
    o.require(fd.holds && std::abs(fd.lhs - fd.rhs) < 1e-6 * fd.rhs,
              fmt("disk FK rel %.1e", std::abs(fd.lhs - fd.rhs) / fd.rhs));
    const auto fs = faber_krahn_check(square);
    o.require(fs.holds, fmt("square FK %.4f<=%.4f", fs.lhs, fs.rhs));
    o.require(2.0 / j0 >= 1.0 / std::sqrt(2.0), "2/j0 >= 1/sqrt2");
    for (const Domain* d : {&disk, &ellipse, &square, &rect, &d31, &d34}) {
      const double a = area(*d);
      if (!(4 * a * a / (j0 * j0 * pi) > a * a / (2 * pi))) {
        o.require(false, "coarse bound");
      }
    }
  });

  run(10, "Cauchy norm", 60.0, [&](Outcome& o) {
    const auto cd = cauchy_norm_conjecture(disk);
    o.require(std::abs(cd.norm - cd.bound) < 1e-3,
              fmt("disk |norm - bound| %.1e", std::abs(cd.norm - cd.bound)));
    const auto ce = cauchy_norm_conjecture(ellipse);
    const auto cs = cauchy_norm_conjecture(square);
    o.require(ce.margin > 0 && ce.satisfied, fmt("ellipse margin %.4f", ce.margin));
    o.require(cs.margin > 0 && cs.satisfied, fmt("square margin %.4f", cs.margin));
  });

  run(11, "property suites", 300.0, [&](Outcome& o) {
    const Complex tri[] = {Complex(-1, -0.5), Complex(1.2, -0.4), Complex(0.1, 1.1)};
    const std::vector<Domain> domains = {make_disk(Complex(0.3, 0.1), 0.8),
                                         make_ellipse(0.0, 2.0, 1.0, 0.3), square, rect,
                                         make_polygon(tri)};
    double worst_gap = 0.0, worst_rise = -1.0;
    for (const auto& d : domains) {
      double previous = std::numeric_limits<double>::infinity();
      for (int degree = 0; degree <= 12; ++degree) {
        const auto r = project_zbar(d, monomials(d, degree));
        worst_gap = std::max(worst_gap, r.diagnostics.pythagoras_gap / r.zbar_norm_sq);
        worst_rise = std::max(worst_rise, r.lambda - previous);
        previous = r.lambda;
      }
    }
    o.require(worst_gap < 1e-9, fmt("Pythagoras %.1e", worst_gap));
    o.require(worst_rise <= 1e-10, "monotone");

    const auto e = make_ellipse(0.0, 1.5, 1.0, 0.4);
    const auto base = project_zbar(e, monomials(e, 10));
    const Complex b(0.7, -1.3);
    const double a = 2.5;
    const auto moved = e.translated(b);
    const auto scaled = e.transformed(a, 1.0);
    const auto rm = project_zbar(moved, monomials(moved, 10));
    const auto rs = project_zbar(scaled, monomials(scaled, 10));
    const auto pts = interior_sample(e, 20, 0.02, 3);
    const double et = max_error(
        pts, [&](Complex p) { return evaluate_f(rm, p + b); },
        [&](Complex p) { return evaluate_f(base, p) + std::conj(b); });
    const double es = max_error(
        pts, [&](Complex p) { return evaluate_f(rs, a * p); },
        [&](Complex p) { return a * evaluate_f(base, p); });
    o.require(et < 1e-8 && es < 1e-8, fmt("covariance %.1e %.1e", et, es));

    const auto basis = make_basis(annulus, {.degree = 6, .hole_pole_order = 3, .poles = {}});
    const auto& g = project_zbar(annulus, basis).gram;
    const double exact = (g - g.adjoint()).cwiseAbs().maxCoeff();
    double across = 0.0;
    for (const auto& f : basis.elements) {
      for (const auto& h : basis.elements) {
        const Complex fh = inner_product(annulus, f, h), hf = inner_product(annulus, h, f);
        across = std::max(across, std::abs(fh - std::conj(hf)) /
                                      std::max(1.0, std::abs(fh)));
      }
    }
    o.require(exact == 0.0 && across < 1e-10, fmt("Gram symmetry %.1e", across));

    auto circle = named_family("circle");
    double previous = 0.0, worst_ratio = 1e300;
    for (int res : {256, 512, 1024}) {
      circle.resolution = res;
      const double err = std::abs(trace(circle).curves.at(0).signed_area - pi);
      if (previous > 0.0) worst_ratio = std::min(worst_ratio, previous / err);
      previous = err;
    }
    o.require(worst_ratio >= 4.0, fmt("tracer ratio %.2f", worst_ratio));

    double prev_rho = 0.0, prev_diff = 0.0, worst_rho_ratio = 1e300;
    for (int k : {128, 256, 512, 1024}) {
      const double rho = torsional_rigidity(disk, 2.0 / k, false).rho;
      if (prev_rho > 0.0) {
        const double diff = std::abs(rho - prev_rho);
        if (prev_diff > 0.0) worst_rho_ratio = std::min(worst_rho_ratio, prev_diff / diff);
        prev_diff = diff;
      }
      prev_rho = rho;
    }
    o.require(worst_rho_ratio >= 3.5, fmt("Poisson ratio %.2f", worst_rho_ratio));

    double min_u = 1e300;
    for (const Domain* d : {&disk, &ellipse, &square, &annulus, &rect}) {
      const auto grid = build_grid_problem(*d, d->diameter() / 128);
      min_u = std::min(min_u, stress_function(grid).minCoeff());
    }
    o.require(min_u > 0.0, fmt("min u %.1e", min_u));
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
