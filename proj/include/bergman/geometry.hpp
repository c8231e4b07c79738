#pragma once

#include <span>
#include <vector>

#include "bergman/common.hpp"

namespace bergman {

enum class PieceKind { arc, segment, trigonometric, polynomial };

/// One smooth piece of a boundary loop, parametrized over [t0, t1].
/// Orientation follows the parameter direction; t1 < t0 is allowed and
/// traverses the piece backwards.
///
///   arc            z(t) = c + r e^{it}
///   segment        z(t) = a + t (b - a),         t in [0, 1]
///   trigonometric  z(t) = c + sum_k a_k e^{i k t}
///   polynomial     z(t) = sum_k a_k t^k
class CurvePiece {
 public:
  static CurvePiece arc(Complex center, double radius, double t0, double t1);
  static CurvePiece segment(Complex a, Complex b);
  static CurvePiece trigonometric(Complex center, std::vector<int> frequencies,
                                  std::vector<Complex> coefficients, double t0,
                                  double t1);
  static CurvePiece polynomial(std::vector<Complex> coefficients, double t0,
                               double t1);

  Complex point(double t) const;
  Complex tangent(double t) const;  // dz/dt

  Complex start() const { return point(t0_); }
  Complex end() const { return point(t1_); }
  double t0() const { return t0_; }
  double t1() const { return t1_; }
  PieceKind kind() const { return kind_; }

  CurvePiece reversed() const;
  CurvePiece translated(Complex shift) const;
  /// Image under z -> scale * rotation * z with |rotation| = 1.
  CurvePiece transformed(double scale, Complex rotation) const;

  /// Number of proxy polyline edges used for membership and simplicity tests.
  int proxy_edges() const;

 private:
  CurvePiece() = default;

  PieceKind kind_ = PieceKind::segment;
  Complex center_{};
  double radius_ = 0.0;
  std::vector<int> frequencies_;
  std::vector<Complex> coefficients_;
  double t0_ = 0.0;
  double t1_ = 1.0;
};

/// Closed loop of pieces. Construction checks that consecutive pieces join.
class BoundaryComponent {
 public:
  explicit BoundaryComponent(std::vector<CurvePiece> pieces);

  std::span<const CurvePiece> pieces() const { return pieces_; }
  /// (1/2i) * loop integral of conj(z) dz; positive for counter-clockwise.
  double signed_area() const;
  BoundaryComponent reversed() const;

 private:
  std::vector<CurvePiece> pieces_;
};

/// Polyline proxy vertex with its provenance on the exact curve.
struct ProxyVertex {
  Complex z;
  int piece;
  double t;
};

/// Intersection of the boundary with an axis-parallel line.
struct Crossing {
  double position;  // coordinate along the line
  int sign;         // +1 where the boundary passes the line counter-clockwise
  int component;    // 0 = outer, 1.. = holes
  int piece;
  double t;
};

/// Points where the boundary can have parameter splits for quadrature.
struct PieceSplit {
  int component;
  int piece;
  double t;
};

/// Bounded finitely connected domain: one positively oriented outer loop and
/// negatively oriented holes, each hole with a marker point inside it.
///
/// Orientation of the supplied loops is normalized on construction. The
/// constructor validates closure, simplicity, nesting and hole markers and
/// throws Error(geometry) on failure.
class Domain {
 public:
  explicit Domain(BoundaryComponent outer,
                  std::vector<BoundaryComponent> holes = {},
                  std::vector<Complex> hole_points = {});

  /// All loops; index 0 is the outer one.
  std::span<const BoundaryComponent> components() const { return components_; }
  std::span<const Complex> hole_points() const { return hole_points_; }
  std::size_t hole_count() const { return components_.size() - 1; }

  double diameter() const { return diameter_; }
  Complex centroid() const { return centroid_; }
  double xmin() const { return xmin_; }
  double xmax() const { return xmax_; }
  double ymin() const { return ymin_; }
  double ymax() const { return ymax_; }

  std::span<const ProxyVertex> proxy(int component) const {
    return proxies_[component];
  }

  /// Boundary crossings of the horizontal line y = level, sorted by x.
  std::vector<Crossing> crossings_horizontal(double level) const;
  /// Boundary crossings of the vertical line x = level, sorted by y.
  std::vector<Crossing> crossings_vertical(double level) const;

  /// Winding number of the boundary around p (1 inside, 0 outside).
  int winding_number(Complex p) const;
  /// Distance from p to the proxy polyline.
  double distance_to_boundary(Complex p) const;

  Domain translated(Complex shift) const;
  Domain transformed(double scale, Complex rotation) const;

 private:
  std::vector<Crossing> crossings(double level, bool vertical) const;
  void validate() const;

  std::vector<BoundaryComponent> components_;
  std::vector<Complex> hole_points_;
  std::vector<std::vector<ProxyVertex>> proxies_;
  double diameter_ = 0.0;
  Complex centroid_{};
  double xmin_ = 0, xmax_ = 0, ymin_ = 0, ymax_ = 0;
};

// Shapes ---------------------------------------------------------------------

Domain make_disk(Complex center = 0.0, double radius = 1.0);
Domain make_annulus(Complex center, double inner_radius, double outer_radius);
Domain make_ellipse(Complex center, double a, double b, double angle = 0.0);
Domain make_rectangle(Complex center, double width, double height);
Domain make_polygon(std::span<const Complex> vertices);
/// Closed curve z(t) = center + sum_k c_k e^{ikt}, t in [0, 2pi].
Domain make_trigonometric(Complex center, std::vector<int> frequencies,
                          std::vector<Complex> coefficients);
BoundaryComponent polygon_loop(std::span<const Complex> vertices);
BoundaryComponent circle_loop(Complex center, double radius);

// Operations -----------------------------------------------------------------

double area(const Domain& domain);
/// Area by (1/2) * loop integral of (x dy - y dx); independent of area().
double area_from_coordinates(const Domain& domain);
double perimeter(const Domain& domain);

/// True iff the boundary winds once around `point`. Throws
/// Error(ambiguous_membership) within 1e-12 * diameter of the boundary.
bool contains(const Domain& domain, Complex point);

struct BoundaryNode {
  Complex z;
  Complex dz;  // quadrature weight times dz/dt
};

/// Gauss-Legendre nodes of the given order on every piece, optionally
/// subdividing pieces at `splits`. Weights reproduce loop integrals f(z) dz.
std::vector<BoundaryNode> boundary_quadrature(
    const Domain& domain, int order, std::span<const PieceSplit> splits = {});

struct GridCell {
  Complex center;
  double area;
};

/// Midpoint-rule cells of side `spacing` aligned to the lower-left corner of
/// the bounding box, keeping cells whose center lies in the domain.
std::vector<GridCell> interior_grid(const Domain& domain, double spacing);

/// Signed area of a closed polyline (shoelace).
double polygon_signed_area(std::span<const Complex> vertices);
/// True when no two non-adjacent edges of the closed polyline intersect.
bool polyline_is_simple(std::span<const Complex> vertices);

}  // namespace bergman
