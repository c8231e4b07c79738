#include "bergman/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bergman/quadrature.hpp"

namespace bergman {

namespace {

constexpr double kClosureTolerance = 1e-12;
constexpr double kMembershipTolerance = 1e-12;

const Complex I{0.0, 1.0};

}  // namespace

// CurvePiece -----------------------------------------------------------------

CurvePiece CurvePiece::arc(Complex center, double radius, double t0,
                           double t1) {
  if (!(radius > 0.0)) {
    throw Error(ErrorKind::geometry, "geometry", "arc radius must be positive");
  }
  CurvePiece piece;
  piece.kind_ = PieceKind::arc;
  piece.center_ = center;
  piece.radius_ = radius;
  piece.t0_ = t0;
  piece.t1_ = t1;
  return piece;
}

CurvePiece CurvePiece::segment(Complex a, Complex b) {
  CurvePiece piece;
  piece.kind_ = PieceKind::segment;
  piece.coefficients_ = {a, b};
  piece.t0_ = 0.0;
  piece.t1_ = 1.0;
  return piece;
}

CurvePiece CurvePiece::trigonometric(Complex center,
                                     std::vector<int> frequencies,
                                     std::vector<Complex> coefficients,
                                     double t0, double t1) {
  if (frequencies.size() != coefficients.size() || frequencies.empty()) {
    throw Error(ErrorKind::geometry, "geometry",
                "trigonometric piece needs one coefficient per frequency");
  }
  CurvePiece piece;
  piece.kind_ = PieceKind::trigonometric;
  piece.center_ = center;
  piece.frequencies_ = std::move(frequencies);
  piece.coefficients_ = std::move(coefficients);
  piece.t0_ = t0;
  piece.t1_ = t1;
  return piece;
}

CurvePiece CurvePiece::polynomial(std::vector<Complex> coefficients, double t0,
                                  double t1) {
  if (coefficients.size() < 2) {
    throw Error(ErrorKind::geometry, "geometry",
                "polynomial piece needs degree >= 1");
  }
  CurvePiece piece;
  piece.kind_ = PieceKind::polynomial;
  piece.coefficients_ = std::move(coefficients);
  piece.t0_ = t0;
  piece.t1_ = t1;
  return piece;
}

Complex CurvePiece::point(double t) const {
  switch (kind_) {
    case PieceKind::arc:
      return center_ + radius_ * std::polar(1.0, t);
    case PieceKind::segment:
      return coefficients_[0] + t * (coefficients_[1] - coefficients_[0]);
    case PieceKind::trigonometric: {
      Complex z = center_;
      for (std::size_t k = 0; k < frequencies_.size(); ++k) {
        z += coefficients_[k] * std::polar(1.0, frequencies_[k] * t);
      }
      return z;
    }
    case PieceKind::polynomial: {
      Complex z = 0.0;
      for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        z = z * t + *it;
      }
      return z;
    }
  }
  return 0.0;
}

Complex CurvePiece::tangent(double t) const {
  switch (kind_) {
    case PieceKind::arc:
      return I * radius_ * std::polar(1.0, t);
    case PieceKind::segment:
      return coefficients_[1] - coefficients_[0];
    case PieceKind::trigonometric: {
      Complex dz = 0.0;
      for (std::size_t k = 0; k < frequencies_.size(); ++k) {
        dz += I * double(frequencies_[k]) * coefficients_[k] *
              std::polar(1.0, frequencies_[k] * t);
      }
      return dz;
    }
    case PieceKind::polynomial: {
      Complex dz = 0.0;
      for (std::size_t k = coefficients_.size() - 1; k >= 1; --k) {
        dz = dz * t + double(k) * coefficients_[k];
      }
      return dz;
    }
  }
  return 0.0;
}

CurvePiece CurvePiece::reversed() const {
  CurvePiece piece = *this;
  std::swap(piece.t0_, piece.t1_);
  return piece;
}

CurvePiece CurvePiece::translated(Complex shift) const {
  CurvePiece piece = *this;
  switch (kind_) {
    case PieceKind::arc:
    case PieceKind::trigonometric:
      piece.center_ += shift;
      break;
    case PieceKind::segment:
      piece.coefficients_[0] += shift;
      piece.coefficients_[1] += shift;
      break;
    case PieceKind::polynomial:
      piece.coefficients_[0] += shift;
      break;
  }
  return piece;
}

CurvePiece CurvePiece::transformed(double scale, Complex rotation) const {
  CurvePiece piece = *this;
  const Complex factor = scale * rotation;
  switch (kind_) {
    case PieceKind::arc: {
      const double angle = std::arg(rotation);
      piece.center_ *= factor;
      piece.radius_ *= scale;
      piece.t0_ += angle;
      piece.t1_ += angle;
      break;
    }
    case PieceKind::trigonometric:
      piece.center_ *= factor;
      for (auto& c : piece.coefficients_) c *= factor;
      break;
    case PieceKind::segment:
    case PieceKind::polynomial:
      for (auto& c : piece.coefficients_) c *= factor;
      break;
  }
  return piece;
}

int CurvePiece::proxy_edges() const {
  switch (kind_) {
    case PieceKind::segment:
      return 1;
    case PieceKind::arc:
      return std::max(8, int(std::ceil(std::abs(t1_ - t0_) * 48.0)));
    case PieceKind::trigonometric:
    case PieceKind::polynomial:
      return 96;
  }
  return 1;
}

// BoundaryComponent ----------------------------------------------------------

BoundaryComponent::BoundaryComponent(std::vector<CurvePiece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) {
    throw Error(ErrorKind::geometry, "geometry", "empty boundary component");
  }
  double extent = 0.0;
  for (const auto& p : pieces_) {
    extent = std::max(extent, std::abs(p.start() - pieces_.front().start()));
  }
  const double tol = kClosureTolerance * std::max(extent, 1e-300);
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const auto& next = pieces_[(k + 1) % pieces_.size()];
    if (std::abs(pieces_[k].end() - next.start()) > tol) {
      throw Error(ErrorKind::geometry, "geometry",
                  "boundary component does not close (gap after piece " +
                      std::to_string(k) + ")");
    }
  }
}

double BoundaryComponent::signed_area() const {
  const auto& rule = cached_gauss_legendre(32);
  Complex sum = 0.0;
  for (const auto& piece : pieces_) {
    const double mid = 0.5 * (piece.t0() + piece.t1());
    const double half = 0.5 * (piece.t1() - piece.t0());
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double t = mid + half * rule.nodes[q];
      sum += std::conj(piece.point(t)) * piece.tangent(t) *
             (half * rule.weights[q]);
    }
  }
  return (sum / (2.0 * I)).real();
}

BoundaryComponent BoundaryComponent::reversed() const {
  std::vector<CurvePiece> out;
  out.reserve(pieces_.size());
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    out.push_back(it->reversed());
  }
  return BoundaryComponent(std::move(out));
}

// Proxy / crossing helpers ---------------------------------------------------

namespace {

std::vector<ProxyVertex> build_proxy(const BoundaryComponent& loop) {
  std::vector<ProxyVertex> proxy;
  const auto pieces = loop.pieces();
  for (int p = 0; p < int(pieces.size()); ++p) {
    const auto& piece = pieces[p];
    const int n = piece.proxy_edges();
    for (int k = 0; k < n; ++k) {
      const double t = piece.t0() + (piece.t1() - piece.t0()) * k / n;
      proxy.push_back({piece.point(t), p, t});
    }
  }
  return proxy;
}

double cross(Complex u, Complex v) {
  return u.real() * v.imag() - u.imag() * v.real();
}

bool segments_intersect(Complex p1, Complex p2, Complex q1, Complex q2) {
  const double d1 = cross(q2 - q1, p1 - q1);
  const double d2 = cross(q2 - q1, p2 - q1);
  const double d3 = cross(p2 - p1, q1 - p1);
  const double d4 = cross(p2 - p1, q2 - p1);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  auto on_segment = [](Complex a, Complex b, Complex p) {
    return std::min(a.real(), b.real()) <= p.real() &&
           p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() &&
           p.imag() <= std::max(a.imag(), b.imag());
  };
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

struct TaggedEdge {
  Complex a, b;
  int loop;
  int index;
  int loop_size;
  double xmin, xmax;
};

/// Sweep over edges sorted by xmin; returns true on the first intersection
/// between edges that are not neighbours on the same loop.
bool any_edge_intersection(std::vector<TaggedEdge> edges) {
  std::sort(edges.begin(), edges.end(),
            [](const auto& e, const auto& f) { return e.xmin < f.xmin; });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    const double eymin = std::min(e.a.imag(), e.b.imag());
    const double eymax = std::max(e.a.imag(), e.b.imag());
    for (std::size_t j = i + 1; j < edges.size() && edges[j].xmin <= e.xmax;
         ++j) {
      const auto& f = edges[j];
      if (std::max(f.a.imag(), f.b.imag()) < eymin ||
          std::min(f.a.imag(), f.b.imag()) > eymax) {
        continue;
      }
      if (e.loop == f.loop) {
        const int d = std::abs(e.index - f.index);
        if (d == 1 || d == e.loop_size - 1 || d == 0) continue;
      }
      if (segments_intersect(e.a, e.b, f.a, f.b)) return true;
    }
  }
  return false;
}

void append_edges(std::vector<TaggedEdge>& edges,
                  std::span<const Complex> vertices, int loop) {
  const int n = int(vertices.size());
  for (int k = 0; k < n; ++k) {
    const Complex a = vertices[k];
    const Complex b = vertices[(k + 1) % n];
    edges.push_back({a, b, loop, k, n, std::min(a.real(), b.real()),
                     std::max(a.real(), b.real())});
  }
}

/// Solve across(z(t)) = level on the bracket [ta, tb] (regula falsi,
/// Illinois variant).
double refine_crossing(const CurvePiece& piece, double ta, double tb,
                       double level, bool vertical) {
  auto across = [&](double t) {
    const Complex z = piece.point(t);
    return (vertical ? -z.real() : z.imag()) - level;
  };
  double fa = across(ta);
  double fb = across(tb);
  if (fa == 0.0) return ta;
  if (fb == 0.0) return tb;
  if ((fa > 0) == (fb > 0)) return std::numeric_limits<double>::quiet_NaN();
  int side = 0;
  double t = ta;
  for (int iter = 0; iter < 100; ++iter) {
    t = (ta * fb - tb * fa) / (fb - fa);
    const double ft = across(t);
    if (ft == 0.0 || std::abs(tb - ta) <= 1e-15 * (std::abs(ta) + std::abs(tb) + 1.0)) {
      break;
    }
    if ((ft > 0) == (fb > 0)) {
      tb = t;
      fb = ft;
      if (side == -1) fa *= 0.5;
      side = -1;
    } else {
      ta = t;
      fa = ft;
      if (side == 1) fb *= 0.5;
      side = 1;
    }
    if (std::abs(ft) < 1e-16 * (1.0 + std::abs(level))) break;
  }
  return t;
}

void loop_crossings(const BoundaryComponent& loop,
                    std::span<const ProxyVertex> proxy, int component,
                    double level, bool vertical, std::vector<Crossing>& out) {
  auto along = [vertical](Complex z) {
    return vertical ? z.imag() : z.real();
  };
  auto across = [vertical](Complex z) {
    return vertical ? -z.real() : z.imag();
  };
  const double across_level = vertical ? -level : level;
  const auto pieces = loop.pieces();
  const int n = int(proxy.size());
  for (int k = 0; k < n; ++k) {
    const auto& v0 = proxy[k];
    const auto& v1 = proxy[(k + 1) % n];
    const double a0 = across(v0.z);
    const double a1 = across(v1.z);
    if ((a0 > across_level) == (a1 > across_level)) continue;
    const auto& piece = pieces[v0.piece];
    const double ta = v0.t;
    const double tb = (v1.piece == v0.piece) ? v1.t : piece.t1();
    const int sign = a1 > a0 ? 1 : -1;
    double t = std::numeric_limits<double>::quiet_NaN();
    double position;
    if (piece.kind() == PieceKind::segment) {
      const double s = (across_level - a0) / (a1 - a0);
      t = ta + s * (tb - ta);
      position = along(v0.z) + s * (along(v1.z) - along(v0.z));
    } else {
      t = refine_crossing(piece, ta, tb, across_level, vertical);
      if (std::isnan(t)) {
        const double s = (across_level - a0) / (a1 - a0);
        t = ta + s * (tb - ta);
        position = along(v0.z) + s * (along(v1.z) - along(v0.z));
      } else {
        position = along(piece.point(t));
      }
    }
    out.push_back({position, sign, component, v0.piece, t});
  }
}

}  // namespace

// Domain ---------------------------------------------------------------------

Domain::Domain(BoundaryComponent outer, std::vector<BoundaryComponent> holes,
               std::vector<Complex> hole_points)
    : hole_points_(std::move(hole_points)) {
  if (holes.size() != hole_points_.size()) {
    throw Error(ErrorKind::geometry, "geometry",
                "each hole needs exactly one interior point");
  }
  if (outer.signed_area() < 0.0) outer = outer.reversed();
  components_.push_back(std::move(outer));
  for (auto& hole : holes) {
    if (hole.signed_area() > 0.0) hole = hole.reversed();
    components_.push_back(std::move(hole));
  }
  for (const auto& loop : components_) proxies_.push_back(build_proxy(loop));

  xmin_ = ymin_ = std::numeric_limits<double>::infinity();
  xmax_ = ymax_ = -std::numeric_limits<double>::infinity();
  for (const auto& v : proxies_[0]) {
    xmin_ = std::min(xmin_, v.z.real());
    xmax_ = std::max(xmax_, v.z.real());
    ymin_ = std::min(ymin_, v.z.imag());
    ymax_ = std::max(ymax_, v.z.imag());
  }
  // Pad the proxy box slightly so chords cannot undercut a curved extreme.
  {
    const auto& outer_loop = components_[0];
    for (const auto& piece : outer_loop.pieces()) {
      const int n = 4 * piece.proxy_edges();
      for (int k = 0; k <= n; ++k) {
        const Complex z =
            piece.point(piece.t0() + (piece.t1() - piece.t0()) * k / n);
        xmin_ = std::min(xmin_, z.real());
        xmax_ = std::max(xmax_, z.real());
        ymin_ = std::min(ymin_, z.imag());
        ymax_ = std::max(ymax_, z.imag());
      }
    }
  }

  // Diameter over the outer proxy (the hull of the domain).
  {
    const auto& pts = proxies_[0];
    double d2 = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        d2 = std::max(d2, std::norm(pts[i].z - pts[j].z));
      }
    }
    diameter_ = std::sqrt(d2);
  }
  if (!(diameter_ > 0.0)) {
    throw Error(ErrorKind::geometry, "geometry", "degenerate domain");
  }

  validate();

  // Centroid: (1/A) * (1/2i) loop integral |z|^2 dz.
  {
    const auto nodes = boundary_quadrature(*this, 32);
    Complex moment = 0.0;
    Complex area_sum = 0.0;
    for (const auto& node : nodes) {
      moment += std::norm(node.z) * node.dz;
      area_sum += std::conj(node.z) * node.dz;
    }
    const double a = (area_sum / (2.0 * I)).real();
    if (!(a > 0.0)) {
      throw Error(ErrorKind::geometry, "geometry", "domain has no area");
    }
    centroid_ = moment / (2.0 * I) / a;
  }
}

void Domain::validate() const {
  std::vector<TaggedEdge> edges;
  std::vector<std::vector<Complex>> loops;
  for (const auto& proxy : proxies_) {
    std::vector<Complex> pts;
    pts.reserve(proxy.size());
    for (const auto& v : proxy) pts.push_back(v.z);
    loops.push_back(std::move(pts));
  }
  for (int c = 0; c < int(loops.size()); ++c) append_edges(edges, loops[c], c);
  if (any_edge_intersection(std::move(edges))) {
    throw Error(ErrorKind::geometry, "geometry",
                "boundary is not a union of disjoint simple loops");
  }

  auto loop_winding = [&](int c, Complex p) {
    std::vector<Crossing> cs;
    loop_crossings(components_[c], proxies_[c], c, p.imag(), false, cs);
    int w = 0;
    for (const auto& x : cs) {
      if (x.position > p.real()) w += x.sign;
    }
    return w;
  };

  for (int h = 1; h < int(components_.size()); ++h) {
    if (loop_winding(0, proxies_[h].front().z) != 1) {
      throw Error(ErrorKind::geometry, "geometry",
                  "hole " + std::to_string(h - 1) +
                      " is not inside the outer boundary");
    }
    for (int g = 1; g < int(components_.size()); ++g) {
      if (g != h && loop_winding(g, proxies_[h].front().z) != 0) {
        throw Error(ErrorKind::geometry, "geometry", "holes are nested");
      }
    }
    if (std::abs(loop_winding(h, hole_points_[h - 1])) != 1) {
      throw Error(ErrorKind::geometry, "geometry",
                  "hole interior point " + std::to_string(h - 1) +
                      " is not inside its hole");
    }
  }
}

std::vector<Crossing> Domain::crossings(double level, bool vertical) const {
  std::vector<Crossing> out;
  for (int c = 0; c < int(components_.size()); ++c) {
    loop_crossings(components_[c], proxies_[c], c, level, vertical, out);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.position < b.position;
  });
  return out;
}

std::vector<Crossing> Domain::crossings_horizontal(double level) const {
  return crossings(level, false);
}

std::vector<Crossing> Domain::crossings_vertical(double level) const {
  return crossings(level, true);
}

int Domain::winding_number(Complex p) const {
  int w = 0;
  for (const auto& x : crossings_horizontal(p.imag())) {
    if (x.position > p.real()) w += x.sign;
  }
  return w;
}

double Domain::distance_to_boundary(Complex p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& proxy : proxies_) {
    const int n = int(proxy.size());
    for (int k = 0; k < n; ++k) {
      const Complex a = proxy[k].z;
      const Complex b = proxy[(k + 1) % n].z;
      const Complex ab = b - a;
      const double len2 = std::norm(ab);
      double s = len2 > 0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
      s = std::clamp(s, 0.0, 1.0);
      best = std::min(best, std::abs(p - (a + s * ab)));
    }
  }
  return best;
}

Domain Domain::translated(Complex shift) const {
  auto move_loop = [&](const BoundaryComponent& loop) {
    std::vector<CurvePiece> pieces;
    for (const auto& p : loop.pieces()) pieces.push_back(p.translated(shift));
    return BoundaryComponent(std::move(pieces));
  };
  std::vector<BoundaryComponent> holes;
  for (std::size_t h = 1; h < components_.size(); ++h) {
    holes.push_back(move_loop(components_[h]));
  }
  std::vector<Complex> points;
  for (const auto& p : hole_points_) points.push_back(p + shift);
  return Domain(move_loop(components_[0]), std::move(holes), std::move(points));
}

Domain Domain::transformed(double scale, Complex rotation) const {
  auto map_loop = [&](const BoundaryComponent& loop) {
    std::vector<CurvePiece> pieces;
    for (const auto& p : loop.pieces()) {
      pieces.push_back(p.transformed(scale, rotation));
    }
    return BoundaryComponent(std::move(pieces));
  };
  std::vector<BoundaryComponent> holes;
  for (std::size_t h = 1; h < components_.size(); ++h) {
    holes.push_back(map_loop(components_[h]));
  }
  std::vector<Complex> points;
  for (const auto& p : hole_points_) points.push_back(scale * rotation * p);
  return Domain(map_loop(components_[0]), std::move(holes), std::move(points));
}

// Shapes ---------------------------------------------------------------------

BoundaryComponent circle_loop(Complex center, double radius) {
  std::vector<CurvePiece> pieces;
  for (int k = 0; k < 4; ++k) {
    pieces.push_back(
        CurvePiece::arc(center, radius, k * pi / 2, (k + 1) * pi / 2));
  }
  return BoundaryComponent(std::move(pieces));
}

BoundaryComponent polygon_loop(std::span<const Complex> vertices) {
  if (vertices.size() < 3) {
    throw Error(ErrorKind::geometry, "geometry",
                "polygon needs at least three vertices");
  }
  std::vector<CurvePiece> pieces;
  pieces.reserve(vertices.size());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    pieces.push_back(
        CurvePiece::segment(vertices[k], vertices[(k + 1) % vertices.size()]));
  }
  return BoundaryComponent(std::move(pieces));
}

Domain make_disk(Complex center, double radius) {
  return Domain(circle_loop(center, radius));
}

Domain make_annulus(Complex center, double inner_radius, double outer_radius) {
  if (!(inner_radius > 0.0 && inner_radius < outer_radius)) {
    throw Error(ErrorKind::geometry, "geometry",
                "annulus needs 0 < inner radius < outer radius");
  }
  return Domain(circle_loop(center, outer_radius),
                {circle_loop(center, inner_radius)}, {center});
}

Domain make_trigonometric(Complex center, std::vector<int> frequencies,
                          std::vector<Complex> coefficients) {
  std::vector<CurvePiece> pieces;
  for (int k = 0; k < 4; ++k) {
    pieces.push_back(CurvePiece::trigonometric(center, frequencies,
                                               coefficients, k * pi / 2,
                                               (k + 1) * pi / 2));
  }
  return Domain(BoundaryComponent(std::move(pieces)));
}

Domain make_ellipse(Complex center, double a, double b, double angle) {
  if (!(a > 0.0 && b > 0.0)) {
    throw Error(ErrorKind::geometry, "geometry",
                "ellipse semi-axes must be positive");
  }
  const Complex rot = std::polar(1.0, angle);
  return make_trigonometric(center, {1, -1},
                            {0.5 * (a + b) * rot, 0.5 * (a - b) * rot});
}

Domain make_rectangle(Complex center, double width, double height) {
  if (!(width > 0.0 && height > 0.0)) {
    throw Error(ErrorKind::geometry, "geometry",
                "rectangle sides must be positive");
  }
  const double w = 0.5 * width, h = 0.5 * height;
  const std::vector<Complex> v = {center + Complex(-w, -h),
                                  center + Complex(w, -h),
                                  center + Complex(w, h),
                                  center + Complex(-w, h)};
  return Domain(polygon_loop(v));
}

Domain make_polygon(std::span<const Complex> vertices) {
  return Domain(polygon_loop(vertices));
}

// Operations -----------------------------------------------------------------

double area(const Domain& domain) {
  Complex sum = 0.0;
  for (const auto& node : boundary_quadrature(domain, 32)) {
    sum += std::conj(node.z) * node.dz;
  }
  return (sum / (2.0 * I)).real();
}

double area_from_coordinates(const Domain& domain) {
  double sum = 0.0;
  for (const auto& node : boundary_quadrature(domain, 32)) {
    sum += node.z.real() * node.dz.imag() - node.z.imag() * node.dz.real();
  }
  return 0.5 * sum;
}

double perimeter(const Domain& domain) {
  double sum = 0.0;
  for (const auto& node : boundary_quadrature(domain, 32)) {
    sum += std::abs(node.dz);
  }
  return sum;
}

bool contains(const Domain& domain, Complex point) {
  const double tol = kMembershipTolerance * domain.diameter();
  int winding = 0;
  for (const auto& x : domain.crossings_horizontal(point.imag())) {
    if (std::abs(x.position - point.real()) <= tol) {
      throw Error(ErrorKind::ambiguous_membership, "geometry",
                  "point lies on the boundary");
    }
    if (x.position > point.real()) winding += x.sign;
  }
  for (const auto& x : domain.crossings_vertical(point.real())) {
    if (std::abs(x.position - point.imag()) <= tol) {
      throw Error(ErrorKind::ambiguous_membership, "geometry",
                  "point lies on the boundary");
    }
  }
  return winding == 1;
}

std::vector<BoundaryNode> boundary_quadrature(const Domain& domain, int order,
                                              std::span<const PieceSplit> splits) {
  if (order < 2) {
    throw Error(ErrorKind::input, "geometry", "quadrature order must be >= 2");
  }
  const auto& rule = cached_gauss_legendre(order);
  std::vector<BoundaryNode> nodes;
  const auto loops = domain.components();
  std::vector<double> breaks;
  for (int c = 0; c < int(loops.size()); ++c) {
    const auto pieces = loops[c].pieces();
    for (int p = 0; p < int(pieces.size()); ++p) {
      const auto& piece = pieces[p];
      const double t0 = piece.t0(), t1 = piece.t1();
      breaks.assign({t0});
      for (const auto& s : splits) {
        if (s.component != c || s.piece != p) continue;
        const double u = (s.t - t0) / (t1 - t0);
        if (u > 1e-14 && u < 1 - 1e-14) breaks.push_back(s.t);
      }
      breaks.push_back(t1);
      std::sort(breaks.begin() + 1, breaks.end() - 1, [&](double a, double b) {
        return (a - t0) / (t1 - t0) < (b - t0) / (t1 - t0);
      });
      for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const double mid = 0.5 * (breaks[k] + breaks[k + 1]);
        const double half = 0.5 * (breaks[k + 1] - breaks[k]);
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
          const double t = mid + half * rule.nodes[q];
          nodes.push_back(
              {piece.point(t), piece.tangent(t) * (half * rule.weights[q])});
        }
      }
    }
  }
  return nodes;
}

std::vector<GridCell> interior_grid(const Domain& domain, double spacing) {
  if (!(spacing > 0.0)) {
    throw Error(ErrorKind::input, "geometry", "grid spacing must be positive");
  }
  if (spacing > domain.diameter()) {
    throw Error(ErrorKind::input, "geometry",
                "grid spacing exceeds the domain diameter; grid would be empty");
  }
  const double tol = kMembershipTolerance * domain.diameter();
  const int nx = int(std::ceil((domain.xmax() - domain.xmin()) / spacing - 1e-12));
  const int ny = int(std::ceil((domain.ymax() - domain.ymin()) / spacing - 1e-12));
  std::vector<GridCell> cells;
  const double cell_area = spacing * spacing;
  for (int j = 0; j < ny; ++j) {
    const double y = domain.ymin() + (j + 0.5) * spacing;
    const auto xs = domain.crossings_horizontal(y);
    // Winding to the left of every crossing; walking right, each crossing
    // passed removes its contribution.
    int winding = 0;
    for (const auto& x : xs) winding += x.sign;
    std::size_t next = 0;
    for (int i = 0; i < nx; ++i) {
      const double x = domain.xmin() + (i + 0.5) * spacing;
      bool near = false;
      while (next < xs.size() && xs[next].position <= x + tol) {
        if (std::abs(xs[next].position - x) <= tol) near = true;
        winding -= xs[next].sign;
        ++next;
      }
      if (next < xs.size() && std::abs(xs[next].position - x) <= tol) near = true;
      if (!near && winding == 1) cells.push_back({Complex(x, y), cell_area});
    }
  }
  if (cells.empty()) {
    throw Error(ErrorKind::input, "geometry", "interior grid is empty");
  }
  return cells;
}

double polygon_signed_area(std::span<const Complex> vertices) {
  double sum = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t k = 0; k < n; ++k) {
    sum += cross(vertices[k], vertices[(k + 1) % n]);
  }
  return 0.5 * sum;
}

bool polyline_is_simple(std::span<const Complex> vertices) {
  std::vector<TaggedEdge> edges;
  append_edges(edges, vertices, 0);
  return !any_edge_intersection(std::move(edges));
}

}  // namespace bergman
