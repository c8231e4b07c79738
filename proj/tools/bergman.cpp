#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bergman/content.hpp"
#include "bergman/domain_io.hpp"
#include "bergman/projection.hpp"
#include "bergman/tracer.hpp"

namespace fs = std::filesystem;
using namespace bergman;

namespace {

constexpr int kOk = 0;
constexpr int kInput = 2;
constexpr int kNumerical = 3;
constexpr int kViolation = 4;

struct RunConfig {
  std::string domain;
  std::string domains = "builtin";
  int degree = 12;
  int hole_order = 3;
  std::vector<std::string> poles;
  double h = 0.0;
  double cauchy_h = 0.0;
  std::string family;
  std::vector<std::string> terms;
  double c0 = 1.0;
  std::vector<double> window;
  int resolution = 512;
  int fold = 0;
  bool roundtrip = false;
  std::string out;
  std::uint64_t seed = 1;
};

// "x:order" or "x,y:order"
PoleSpec parse_pole(const std::string& text) {
  const auto colon = text.rfind(':');
  std::string loc = text.substr(0, colon);
  PoleSpec p;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("order");
    std::size_t used = 0;
    p.max_order = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("order");
    const auto comma = loc.find(',');
    const double x = std::stod(loc.substr(0, comma));
    const double y = comma == std::string::npos ? 0.0 : std::stod(loc.substr(comma + 1));
    p.location = {x, y};
  } catch (const std::exception&) {
    throw Error(ErrorKind::input, "cli",
                "bad pole '" + text + "', expected x[,y]:order");
  }
  return p;
}

BasisOptions basis_options(const RunConfig& c) {
  BasisOptions o;
  o.degree = c.degree;
  o.hole_pole_order = c.hole_order;
  for (const auto& p : c.poles) o.poles.push_back(parse_pole(p));
  return o;
}

fs::path output_dir(const RunConfig& c) {
  fs::path dir = c.out;
  if (dir.empty()) {
    const char* env = std::getenv("BERGMAN_OUT_DIR");
    dir = env && *env ? env : ".";
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorKind::input, "cli",
                "cannot create output directory " + dir.string());
  }
  return dir;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::input, "cli", "cannot write " + path.string());
  return out;
}

int cmd_project(const RunConfig& c) {
  const auto domain = resolve_domain(c.domain);
  const auto r = project_zbar(domain, make_basis(domain, basis_options(c)));
  const auto defect = boundary_defect(domain, antiderivative(r));
  const double ortho = orthogonality_report(domain, r);
  const auto dir = output_dir(c);
  {
    auto out = open_output(dir / "coefficients.csv");
    write_coefficients_csv(out, r);
  }
  {
    auto out = open_output(dir / "summary.csv");
    write_projection_summary(out, r, defect, ortho);
  }
  std::printf("domain %s: %zu basis elements, condition %.3e%s\n",
              c.domain.c_str(), r.basis.elements.size(),
              r.diagnostics.condition, r.diagnostics.ridge_used ? " (ridge)" : "");
  std::printf("lambda   %.15g\nlambda^2 %.15g\n", r.lambda, r.lambda * r.lambda);
  std::printf("c0 %.15g  boundary defect %.3e  orthogonality %.3e\n", defect.c0,
              defect.defect, ortho);
  std::printf("%-4s %-10s %-22s %-22s\n", "k", "element", "re", "im");
  for (std::size_t k = 0; k < r.basis.elements.size(); ++k) {
    const auto& e = r.basis.elements[k];
    char name[64];
    if (e.kind == BasisKind::monomial) {
      std::snprintf(name, sizeof name, "w^%d", e.exponent);
    } else {
      std::snprintf(name, sizeof name, "(z-(%g%+gi))^-%d", e.center.real(),
                    e.center.imag(), e.exponent);
    }
    std::printf("%-4zu %-10s %-22.15g %-22.15g\n", k, name,
                r.coefficients[Eigen::Index(k)].real(),
                r.coefficients[Eigen::Index(k)].imag());
  }
  std::printf("monomials use w = (z - centroid) / %.15g\n",
              0.5 * domain.diameter());
  return kOk;
}

int cmd_trace(const RunConfig& c) {
  LevelSetFamily family;
  if (!c.family.empty()) {
    family = named_family(c.family);
  } else if (c.terms.empty()) {
    throw Error(ErrorKind::input, "cli", "trace needs --family or --term");
  } else {
    family.name = "custom";
  }
  if (!c.terms.empty()) {
    family.F.terms.clear();
    for (const auto& t : c.terms) family.F.terms.push_back(parse_term(t));
  }
  family.c0 = c.c0;
  if (!c.window.empty()) {
    if (c.window.size() != 4 || !(c.window[0] < c.window[1]) ||
        !(c.window[2] < c.window[3])) {
      throw Error(ErrorKind::input, "cli", "--window expects xmin,xmax,ymin,ymax");
    }
    family.window = {c.window[0], c.window[1], c.window[2], c.window[3]};
  }
  family.resolution = c.resolution;

  const auto set = trace(family);
  const auto dir = output_dir(c);
  {
    auto out = open_output(dir / "curves.csv");
    write_curves_csv(out, set);
  }
  {
    auto out = open_output(dir / "curves.svg");
    write_curves_svg(out, set);
  }
  for (const auto& w : set.warnings) std::printf("warning: %s\n", w.c_str());

  int fold = c.fold;
  if (fold == 0 && family.F.terms.size() == 1 &&
      family.F.terms[0].kind == TermKind::power && family.F.terms[0].center == 0.0) {
    fold = family.F.terms[0].exponent;
  }
  std::printf("family %s: %zu closed curves\n", family.name.c_str(),
              set.curves.size());
  for (std::size_t k = 0; k < set.curves.size(); ++k) {
    const auto& cv = set.curves[k];
    std::printf("curve %zu: %zu vertices, signed area %.10g, %s%s", k,
                cv.vertices.size(), cv.signed_area,
                cv.signed_area > 0 ? "outer" : "hole",
                cv.simple ? "" : ", not simple");
    if (fold >= 2 && cv.signed_area > 0) {
      std::printf(", %d-fold symmetry defect %.3e", fold,
                  rotational_symmetry_defect(cv, fold));
    }
    std::printf("\n");
  }
  const auto domain = to_domain_outer_with_holes(set);
  std::printf("selected domain: area %.10g, %zu holes, components %zu\n",
              area(domain), domain.hole_count(), domain.components().size());
  const double dist0 = domain.distance_to_boundary(0.0);
  const char* where = "on the boundary";
  if (dist0 > 1e-12 * domain.diameter()) {
    where = contains(domain, 0.0) ? "inside" : "outside the closure";
  }
  std::printf("origin: %s (distance to boundary %.3e)\n", where, dist0);
  if (c.roundtrip) {
    BasisOptions o = basis_options(c);
    const auto rt = roundtrip(family, o, c.seed);
    std::printf("round trip: max |f - F'| %.3e, defect %.3e, c0 %.10g, lambda %.10g\n",
                rt.pointwise_error, rt.defect, rt.c0, rt.lambda);
  }
  return kOk;
}

std::vector<SweepItem> sweep_items(const RunConfig& c, bool single) {
  std::vector<std::string> names;
  if (single) {
    names.push_back(c.domain);
  } else if (c.domains == "builtin") {
    names = builtin_domain_names();
  } else {
    std::stringstream in(c.domains);
    std::string item;
    while (std::getline(in, item, ';')) {
      if (!item.empty()) names.push_back(item);
    }
  }
  std::vector<SweepItem> items;
  const auto basis = basis_options(c);
  for (const auto& n : names) items.push_back({n, resolve_domain(n), basis});
  return items;
}

int report_rows(const RunConfig& c, const std::vector<SweepRow>& rows) {
  const auto dir = output_dir(c);
  {
    auto out = open_output(dir / "sweep.csv");
    write_sweep_csv(out, rows);
  }
  int status = kOk;
  std::printf("%-16s %-14s %-14s %-14s %-14s %-12s %s\n", "domain", "sqrt_rho",
              "lambda", "upper", "cauchy_norm", "st_venant", "status");
  for (const auto& r : rows) {
    const auto& s = r.sandwich;
    const bool ok = s.ordered && r.cauchy.satisfied &&
                    (!r.simply_connected || r.st_venant.holds);
    if (!ok) status = kViolation;
    char sv[32] = "n/a";
    if (r.simply_connected) std::snprintf(sv, sizeof sv, "%.6g", r.st_venant.margin);
    std::printf("%-16s %-14.10g %-14.10g %-14.10g %-14.10g %-12s %s\n",
                s.label.c_str(), s.sqrt_rho, s.lambda, s.upper, r.cauchy.norm, sv,
                ok ? "ok" : "VIOLATED");
  }
  return status;
}

int cmd_sandwich(const RunConfig& c) {
  const auto items = sweep_items(c, true);
  const auto rows = sweep(items, c.h, c.cauchy_h);
  int status = report_rows(c, rows);
  const auto& s = rows[0].sandwich;
  std::printf("sqrt(rho) %.12g +- %.2e  lambda %.12g +- %.2e  area/sqrt(2pi) %.12g\n",
              s.sqrt_rho, s.sqrt_rho_error, s.lambda, s.lambda_error, s.upper);
  std::printf("lower margin %.3e  upper margin %.6g  (h = %.4g)\n", s.lower_margin,
              s.upper_margin, s.h);
  if (rows[0].simply_connected) {
    const auto& v = rows[0].st_venant;
    std::printf("St. Venant: rho %.10g <= %.10g, margin %.6g; coarse bound %.10g\n",
                v.rho, v.bound, v.margin, v.coarse_bound);
  }
  const auto fk = faber_krahn_check(items[0].domain);
  std::printf("Faber-Krahn: Lambda1 %.10g, 2/sqrt(Lambda1) %.10g <= %.10g: %s\n",
              fk.lambda1, fk.lhs, fk.rhs, fk.holds ? "ok" : "VIOLATED");
  if (!fk.holds) status = kViolation;
  return status;
}

int cmd_sweep(const RunConfig& c) {
  return report_rows(c, sweep(sweep_items(c, false), c.h, c.cauchy_h));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bergman projection of conj(z), level-set tracing and analytic content bounds"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "output directory (default $BERGMAN_OUT_DIR or .)");
    sub->add_option("--seed", c.seed, "seed for random sample points");
  };
  auto add_basis = [&](CLI::App* sub) {
    sub->add_option("--degree", c.degree, "largest monomial degree")
        ->check(CLI::Range(0, 60));
    sub->add_option("--hole-order", c.hole_order, "pole order at every hole marker")
        ->check(CLI::Range(0, 10));
    sub->add_option("--poles", c.poles, "extra poles x[,y]:order");
  };

  auto* project = app.add_subcommand("project", "project conj(z) onto analytic functions");
  project->add_option("--domain", c.domain, "built-in name or spec file")->required();
  add_basis(project);
  add_common(project);

  auto* tr = app.add_subcommand("trace", "trace |z|^2 - c0 - 2 Re F = 0");
  tr->add_option("--family", c.family, "circle, fig3.1 ... fig3.9");
  tr->add_option("--term", c.terms, "F term: power k re im | inverse k a_re a_im re im | log a_re a_im re im");
  tr->add_option("--c0", c.c0, "level constant");
  tr->add_option("--window", c.window, "xmin,xmax,ymin,ymax")->delimiter(',');
  tr->add_option("--resolution", c.resolution, "cells per axis")->check(CLI::Range(8, 8192));
  tr->add_option("--fold", c.fold, "rotational symmetry to check (default from F)");
  tr->add_flag("--roundtrip", c.roundtrip, "project conj(z) on the traced domain and compare with F'");
  add_basis(tr);
  add_common(tr);

  auto* sw = app.add_subcommand("sandwich", "sqrt(rho) <= lambda <= area/sqrt(2pi) and related bounds");
  sw->add_option("--domain", c.domain, "built-in name or spec file")->required();
  auto* sweep_cmd = app.add_subcommand("sweep", "sandwich and Cauchy norm rows for several domains");
  sweep_cmd->add_option("--domains", c.domains, "'builtin' or names/paths separated by ';'");
  for (auto* sub : {sw, sweep_cmd}) {
    sub->add_option("--spacing", c.h, "Poisson grid spacing (default diameter/256)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--cauchy-spacing", c.cauchy_h, "Cauchy norm grid spacing (default diameter/128)")
        ->check(CLI::NonNegativeNumber);
    add_basis(sub);
    add_common(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*project) return cmd_project(c);
    if (*tr) return cmd_trace(c);
    if (*sw) return cmd_sandwich(c);
    if (*sweep_cmd) return cmd_sweep(c);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.is_validation() ? kInput : kNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: cli: %s\n", e.what());
    return kNumerical;
  }
  return kOk;
}
