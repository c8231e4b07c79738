#include "bergman/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

namespace bergman {

namespace {

bool negative(double g) { return std::isfinite(g) && g < 0.0; }

/// Root of G on the segment [a, b] where exactly one endpoint is negative.
Complex refine_crossing(const LevelSetFamily& family, Complex a, double ga,
                        Complex b, double gb) {
  // Keep a on the negative side.
  if (!negative(ga)) {
    std::swap(a, b);
    std::swap(ga, gb);
  }
  double lo = 0.0, hi = 1.0;
  double glo = ga, ghi = gb;
  if (!std::isfinite(gb)) {
    // b is a singular node. Search only the half edge on a's side; with no
    // sign change there the crossing marks a half-cell excision around b.
    const Complex mid = 0.5 * (a + b);
    const double gm = family.level(mid);
    if (negative(gm) || !std::isfinite(gm)) return mid;
    b = mid;
    gb = ghi = gm;
  }
  double t = ga / (ga - gb);
  int side = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const Complex z = a + t * (b - a);
    const double g = family.level(z);
    if (std::abs(g) < 1e-10 || hi - lo < 1e-15) return z;
    if (negative(g)) {
      lo = t;
      glo = g;
      if (side == -1) ghi *= 0.5;
      side = -1;
    } else {
      hi = t;
      ghi = g;
      if (side == 1) glo *= 0.5;
      side = 1;
    }
    if (std::isfinite(ghi)) {
      t = lo + (hi - lo) * glo / (glo - ghi);
      if (!(t > lo && t < hi)) t = 0.5 * (lo + hi);
    } else {
      t = 0.5 * (lo + hi);
    }
  }
  return a + t * (b - a);
}

bool polygon_contains(std::span<const Complex> poly, Complex p) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Complex a = poly[i], b = poly[j];
    if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
      const double x = a.real() + (p.imag() - a.imag()) * (b.real() - a.real()) /
                                      (b.imag() - a.imag());
      if (p.real() < x) inside = !inside;
    }
  }
  return inside;
}

Complex polygon_centroid(std::span<const Complex> poly) {
  Complex sum = 0.0;
  double a2 = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex p = poly[k], q = poly[(k + 1) % n];
    const double c = p.real() * q.imag() - q.real() * p.imag();
    a2 += c;
    sum += c * (p + q);
  }
  return sum / (3.0 * a2);
}

/// A point inside the polygon: its centroid when that works, otherwise the
/// midpoint of the widest interior interval on the centroid's scanline.
Complex interior_point(std::span<const Complex> poly) {
  const Complex c = polygon_centroid(poly);
  if (polygon_contains(poly, c)) return c;
  std::vector<double> xs;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Complex a = poly[i], b = poly[j];
    if ((a.imag() > c.imag()) != (b.imag() > c.imag())) {
      xs.push_back(a.real() + (c.imag() - a.imag()) * (b.real() - a.real()) /
                                  (b.imag() - a.imag()));
    }
  }
  std::sort(xs.begin(), xs.end());
  double best = -1.0;
  Complex point = c;
  for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
    if (xs[k + 1] - xs[k] > best) {
      best = xs[k + 1] - xs[k];
      point = Complex(0.5 * (xs[k] + xs[k + 1]), c.imag());
    }
  }
  return point;
}

double point_segment_distance(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  double t = len2 > 0.0 ? ((p - a) * std::conj(d)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

double directed_hausdorff(std::span<const Complex> from,
                          std::span<const Complex> to) {
  double worst = 0.0;
  const std::size_t n = to.size();
  for (const auto& p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      best = std::min(best, point_segment_distance(p, to[k], to[(k + 1) % n]));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

void require_curves(const TracedCurveSet& set) {
  if (set.curves.empty()) {
    throw Error(ErrorKind::empty_trace, "tracer", "no traced curves");
  }
}

}  // namespace

double LevelSetFamily::level(Complex z) const {
  const double g = std::norm(z) - c0 - 2.0 * F.real_part(z);
  return std::isfinite(g) ? g : std::numeric_limits<double>::infinity();
}

TracedCurveSet trace(const LevelSetFamily& family) {
  const auto& w = family.window;
  const int n = family.resolution;
  if (n < 64) {
    throw Error(ErrorKind::input, "tracer", "resolution must be at least 64");
  }
  if (!(w.xmax > w.xmin && w.ymax > w.ymin) || !std::isfinite(w.xmax - w.xmin) ||
      !std::isfinite(w.ymax - w.ymin)) {
    throw Error(ErrorKind::input, "tracer", "window must be a bounded rectangle");
  }
  const double dx = (w.xmax - w.xmin) / n;
  const double dy = (w.ymax - w.ymin) / n;
  auto node = [&](int i, int j) {
    return Complex(w.xmin + i * dx, w.ymin + j * dy);
  };

  std::vector<double> g(std::size_t(n + 1) * (n + 1));
  auto at = [&](int i, int j) -> double& { return g[std::size_t(j) * (n + 1) + i]; };
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) at(i, j) = family.level(node(i, j));
  }

  const std::size_t horizontal = std::size_t(n) * (n + 1);
  const std::size_t edge_count = 2 * horizontal;
  auto h_edge = [&](int i, int j) { return std::size_t(j) * n + i; };
  auto v_edge = [&](int i, int j) { return horizontal + std::size_t(j) * (n + 1) + i; };

  std::vector<Complex> crossing(edge_count, Complex(std::nan(""), 0.0));
  auto crossing_point = [&](std::size_t e) {
    if (std::isnan(crossing[e].real())) {
      int i, j;
      Complex a, b;
      if (e < horizontal) {
        j = int(e / n);
        i = int(e % n);
        a = node(i, j);
        b = node(i + 1, j);
        crossing[e] = refine_crossing(family, a, at(i, j), b, at(i + 1, j));
      } else {
        const std::size_t r = e - horizontal;
        j = int(r / (n + 1));
        i = int(r % (n + 1));
        a = node(i, j);
        b = node(i, j + 1);
        crossing[e] = refine_crossing(family, a, at(i, j), b, at(i, j + 1));
      }
    }
    return crossing[e];
  };

  struct Segment {
    std::size_t from, to;
  };
  std::vector<Segment> segments;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const bool neg[4] = {negative(at(i, j)), negative(at(i + 1, j)),
                           negative(at(i + 1, j + 1)), negative(at(i, j + 1))};
      const std::size_t edges[4] = {h_edge(i, j), v_edge(i + 1, j),
                                    h_edge(i, j + 1), v_edge(i, j)};
      // Walking the cell counter-clockwise, edge k joins corner k to k+1.
      std::vector<int> starts, ends;
      for (int k = 0; k < 4; ++k) {
        const bool a = neg[k], b = neg[(k + 1) % 4];
        if (a && !b) starts.push_back(k);
        if (!a && b) ends.push_back(k);
      }
      if (starts.empty()) continue;
      if (starts.size() == 1) {
        segments.push_back({edges[starts[0]], edges[ends[0]]});
        continue;
      }
      const bool center_negative =
          negative(family.level(node(i, j) + Complex(0.5 * dx, 0.5 * dy)));
      for (int s : starts) {
        int best = -1;
        for (int step = 1; step < 4 && best < 0; ++step) {
          const int k = center_negative ? (s + step) % 4 : (s + 4 - step) % 4;
          if (std::find(ends.begin(), ends.end(), k) != ends.end()) best = k;
        }
        segments.push_back({edges[s], edges[best]});
      }
    }
  }
  if (segments.empty()) {
    throw Error(ErrorKind::empty_trace, "tracer",
                "level set has no zero crossings in the window");
  }

  std::vector<int> starting_at(edge_count, -1);
  std::vector<char> is_end(edge_count, 0);
  for (std::size_t s = 0; s < segments.size(); ++s) {
    starting_at[segments[s].from] = int(s);
    is_end[segments[s].to] = 1;
  }

  TracedCurveSet set;
  set.window = w;
  std::vector<char> used(segments.size(), 0);
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (is_end[segments[s].from]) continue;
    // Head of an open chain.
    for (int k = int(s); k >= 0 && !used[k]; k = starting_at[segments[k].to]) {
      used[k] = 1;
    }
    ++set.discarded_open_chains;
  }
  if (set.discarded_open_chains > 0) {
    set.warnings.push_back(std::to_string(set.discarded_open_chains) +
                           " open chain(s) reach the window edge and were "
                           "discarded; enlarge the window");
  }

  const double tiny = 1e-12 * (w.xmax - w.xmin);
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (used[s]) continue;
    TracedCurve curve;
    for (int k = int(s); k >= 0 && !used[k]; k = starting_at[segments[k].to]) {
      used[k] = 1;
      const Complex p = crossing_point(segments[k].to);
      if (curve.vertices.empty() || std::abs(p - curve.vertices.back()) > tiny) {
        curve.vertices.push_back(p);
      }
    }
    while (curve.vertices.size() > 1 &&
           std::abs(curve.vertices.front() - curve.vertices.back()) <= tiny) {
      curve.vertices.pop_back();
    }
    if (curve.vertices.size() < 3) continue;
    curve.signed_area = polygon_signed_area(curve.vertices);
    curve.simple = polyline_is_simple(curve.vertices);
    set.curves.push_back(std::move(curve));
  }
  if (set.curves.empty()) {
    throw Error(ErrorKind::empty_trace, "tracer",
                "no closed level curve inside the window");
  }
  return set;
}

Domain to_domain(const TracedCurveSet& set, std::size_t index) {
  require_curves(set);
  if (index >= set.curves.size()) {
    throw Error(ErrorKind::input, "tracer",
                "curve index " + std::to_string(index) + " out of range");
  }
  return make_polygon(set.curves[index].vertices);
}

Domain to_domain_outer_with_holes(const TracedCurveSet& set) {
  require_curves(set);
  int outer = -1;
  for (std::size_t k = 0; k < set.curves.size(); ++k) {
    const auto& c = set.curves[k];
    if (c.signed_area > 0.0 &&
        (outer < 0 || c.signed_area > set.curves[outer].signed_area)) {
      outer = int(k);
    }
  }
  if (outer < 0) {
    throw Error(ErrorKind::geometry, "tracer",
                "no counter-clockwise curve encloses a region with G < 0");
  }
  const auto& outer_vertices = set.curves[outer].vertices;
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < set.curves.size(); ++k) {
    const auto& c = set.curves[k];
    if (c.signed_area < 0.0 && polygon_contains(outer_vertices, c.vertices[0])) {
      candidates.push_back(k);
    }
  }
  std::vector<BoundaryComponent> holes;
  std::vector<Complex> markers;
  for (const auto k : candidates) {
    bool nested = false;
    for (const auto other : candidates) {
      if (other != k &&
          polygon_contains(set.curves[other].vertices, set.curves[k].vertices[0])) {
        nested = true;
      }
    }
    if (nested) continue;
    holes.push_back(polygon_loop(set.curves[k].vertices));
    markers.push_back(interior_point(set.curves[k].vertices));
  }
  return Domain(polygon_loop(outer_vertices), std::move(holes), std::move(markers));
}

std::vector<Complex> interior_sample(const Domain& domain, int count,
                                     double margin, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(domain.xmin(), domain.xmax());
  std::uniform_real_distribution<double> uy(domain.ymin(), domain.ymax());
  std::vector<Complex> points;
  const double gap = margin * domain.diameter();
  for (long attempt = 0; int(points.size()) < count; ++attempt) {
    if (attempt > 1000L * count) {
      throw Error(ErrorKind::geometry, "tracer",
                  "could not place interior sample points");
    }
    const Complex p(ux(rng), uy(rng));
    if (domain.distance_to_boundary(p) > gap && domain.winding_number(p) == 1) {
      points.push_back(p);
    }
  }
  return points;
}

RoundTrip roundtrip(const LevelSetFamily& family, const BasisOptions& options,
                    std::uint64_t seed, int samples) {
  const auto set = trace(family);
  const auto domain = to_domain_outer_with_holes(set);
  const auto result = project_zbar(domain, make_basis(domain, options));
  RoundTrip out;
  out.holes = domain.hole_count();
  out.lambda = result.lambda;
  for (const auto& p : interior_sample(domain, samples, 0.05, seed)) {
    out.pointwise_error =
        std::max(out.pointwise_error,
                 std::abs(evaluate_f(result, p) - family.best_approximation(p)));
  }
  const auto defect = boundary_defect(domain, antiderivative(result));
  out.defect = defect.defect;
  out.c0 = defect.c0;
  return out;
}

double rotational_symmetry_defect(const TracedCurve& curve, int fold,
                                  Complex center) {
  if (fold < 1) {
    throw Error(ErrorKind::input, "tracer", "symmetry order must be >= 1");
  }
  const Complex rotation = std::polar(1.0, 2.0 * pi / fold);
  std::vector<Complex> rotated;
  rotated.reserve(curve.vertices.size());
  for (const auto& v : curve.vertices) {
    rotated.push_back(center + rotation * (v - center));
  }
  return std::max(directed_hausdorff(rotated, curve.vertices),
                  directed_hausdorff(curve.vertices, rotated));
}

LevelSetFamily named_family(const std::string& name) {
  LevelSetFamily family;
  family.name = name;
  auto power = [](int k, double c) {
    ExpansionTerm t;
    t.kind = TermKind::power;
    t.exponent = k;
    t.coefficient = c;
    return t;
  };
  auto log_term = [](Complex a, double c) {
    ExpansionTerm t;
    t.kind = TermKind::log;
    t.center = a;
    t.coefficient = c;
    t.cut_direction = 1;
    return t;
  };
  auto inverse = [](Complex a, int k, Complex c) {
    ExpansionTerm t;
    t.kind = TermKind::inverse_power;
    t.center = a;
    t.exponent = k;
    t.coefficient = c;
    return t;
  };
  // 1 / (K p(z)) for p(z) = (z - 1/2)(z - i/3)(z + 1/4), as partial fractions.
  auto reciprocal_cubic = [&](double k) {
    const Complex roots[3] = {0.5, Complex(0.0, 1.0 / 3.0), -0.25};
    std::vector<ExpansionTerm> terms;
    for (int r = 0; r < 3; ++r) {
      Complex dp = 1.0;
      for (int s = 0; s < 3; ++s) {
        if (s != r) dp *= roots[r] - roots[s];
      }
      terms.push_back(inverse(roots[r], 1, 1.0 / (k * dp)));
    }
    return terms;
  };

  if (name == "circle") {
  } else if (name == "fig3.1") {
    family.F.terms = {power(3, 1.0 / 10.0)};
  } else if (name == "fig3.2") {
    family.F.terms = {power(4, 1.0 / 10.0)};
  } else if (name == "fig3.3") {
    family.F.terms = {power(5, 1.0 / 14.0)};
  } else if (name == "fig3.4") {
    family.F.terms = {log_term(0.0, 1.0 / 3.0), log_term(0.5, 1.0 / 5.0)};
  } else if (name == "fig3.5") {
    family.F.terms = {log_term(0.0, 1.0 / 7.0), log_term(0.5, 1.0 / 10.0)};
  } else if (name == "fig3.6") {
    family.F.terms = reciprocal_cubic(40.0);
  } else if (name == "fig3.7") {
    family.F.terms = reciprocal_cubic(10.0);
  } else if (name == "fig3.8") {
    family.F.terms = reciprocal_cubic(8.0);
  } else if (name == "fig3.9") {
    family.F.terms = {inverse(0.0, 6, 1.0 / 20.0)};
  } else {
    throw Error(ErrorKind::input, "tracer", "unknown family '" + name + "'");
  }
  return family;
}

std::vector<std::string> named_family_names() {
  return {"circle", "fig3.1", "fig3.2", "fig3.3", "fig3.4",
          "fig3.5", "fig3.6", "fig3.7", "fig3.8", "fig3.9"};
}

void write_curves_csv(std::ostream& out, const TracedCurveSet& set) {
  const auto precision = out.precision(17);
  out << "curve,vertex,x,y\n";
  for (std::size_t c = 0; c < set.curves.size(); ++c) {
    const auto& v = set.curves[c].vertices;
    for (std::size_t k = 0; k < v.size(); ++k) {
      out << c << ',' << k << ',' << v[k].real() << ',' << v[k].imag() << '\n';
    }
  }
  out.precision(precision);
}

void write_curves_svg(std::ostream& out, const TracedCurveSet& set) {
  const auto& w = set.window;
  const double width = w.xmax - w.xmin, height = w.ymax - w.ymin;
  const auto precision = out.precision(8);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << w.xmin << ' ' << -w.ymax << ' ' << width << ' ' << height << "\">\n";
  for (std::size_t c = 0; c < set.curves.size(); ++c) {
    out << "  <path id=\"curve" << c << "\" fill=\"none\" stroke=\"black\" "
        << "stroke-width=\"" << width / 500 << "\" d=\"";
    const auto& v = set.curves[c].vertices;
    for (std::size_t k = 0; k < v.size(); ++k) {
      out << (k == 0 ? "M" : " L") << v[k].real() << ',' << -v[k].imag();
    }
    out << " Z\"/>\n";
  }
  out << "</svg>\n";
  out.precision(precision);
}

}  // namespace bergman
