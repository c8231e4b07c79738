#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bergman/basis.hpp"
#include "bergman/geometry.hpp"
#include "bergman/projection.hpp"

namespace bergman {

struct Window {
  double xmin = -2.5, xmax = 2.5, ymin = -2.5, ymax = 2.5;
};

/// Zero set of G(z) = |z|^2 - c0 - 2 Re F(z). F is the antiderivative of
/// the best approximation f on the traced domain.
struct LevelSetFamily {
  std::string name;
  AnalyticExpansion F;
  double c0 = 1.0;
  Window window;
  int resolution = 512;  // cells per axis

  double level(Complex z) const;
  /// The best approximation this family encodes, F'(z).
  Complex best_approximation(Complex z) const { return F.derivative(z); }
};

struct TracedCurve {
  std::vector<Complex> vertices;  // closed; last vertex joins the first
  double signed_area = 0.0;       // > 0: counter-clockwise, G < 0 on the left
  bool simple = true;
};

struct TracedCurveSet {
  std::vector<TracedCurve> curves;
  Window window;
  int discarded_open_chains = 0;
  std::vector<std::string> warnings;
};

/// Marching squares with crossings refined on the grid edges to
/// |G| < 1e-10. Saddle cells follow the sign of G at the cell center.
/// Non-finite G counts as positive; a grid node sitting on a pole of F is
/// excised by placing the crossings on its edges half a cell away.
/// Throws Error(empty_trace) when no closed curve lies in the window.
TracedCurveSet trace(const LevelSetFamily& family);

/// Domain bounded by one traced curve.
Domain to_domain(const TracedCurveSet& set, std::size_t index);
/// Largest counter-clockwise curve with the clockwise curves directly
/// inside it as holes.
Domain to_domain_outer_with_holes(const TracedCurveSet& set);

struct RoundTrip {
  double pointwise_error = 0.0;  // max |f_recovered - F'| on sample points
  double defect = 0.0;
  double c0 = 0.0;
  std::size_t holes = 0;
  double lambda = 0.0;
};

/// Trace, rebuild the domain, project conj(z) and compare with F' at
/// `samples` seeded interior points more than 0.05 * diameter from the
/// boundary.
RoundTrip roundtrip(const LevelSetFamily& family, const BasisOptions& basis,
                    std::uint64_t seed = 1, int samples = 50);

/// Seeded interior sample points at distance > margin * diameter from the
/// boundary.
std::vector<Complex> interior_sample(const Domain& domain, int count,
                                     double margin, std::uint64_t seed);

/// Symmetric Hausdorff distance between a closed polyline and its rotation
/// by 2 pi / fold about `center`, measured against the polyline edges.
double rotational_symmetry_defect(const TracedCurve& curve, int fold,
                                  Complex center = 0.0);

/// circle, fig3.1 ... fig3.9.
LevelSetFamily named_family(const std::string& name);
std::vector<std::string> named_family_names();

/// Rows "curve,vertex,x,y".
void write_curves_csv(std::ostream& out, const TracedCurveSet& set);
/// SVG 1.1 with one path per curve and viewBox equal to the window.
void write_curves_svg(std::ostream& out, const TracedCurveSet& set);

}  // namespace bergman
