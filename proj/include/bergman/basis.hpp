#pragma once

#include <optional>
#include <vector>

#include "bergman/common.hpp"
#include "bergman/geometry.hpp"

namespace bergman {

/// Integer power by repeated squaring; exact for small exponents where
/// std::pow would go through exp/log.
Complex ipow(Complex z, int k);

/// Logarithm of w with its branch cut along the horizontal ray
/// {t * direction : t > 0}, direction = +1 or -1.
Complex branch_log(Complex w, int direction);

enum class BasisKind {
  monomial,        // ((z - center) / scale)^exponent, exponent >= 0
  pole,            // (z - center)^(-exponent), exponent >= 1
  log_derivative,  // 1 / (z - center); antiderivative is a logarithm
};

struct BasisElement {
  BasisKind kind = BasisKind::monomial;
  Complex center{};
  double scale = 1.0;
  int exponent = 0;

  static BasisElement monomial(Complex center, double scale, int k);
  static BasisElement pole(Complex location, int order);
  static BasisElement log_derivative(Complex location);

  Complex operator()(Complex z) const;
  /// 0 for monomials, the pole order otherwise.
  int pole_order() const;
  bool has_log_antiderivative() const { return pole_order() == 1; }
  /// Antiderivative for elements without a log term, constant 0.
  Complex antiderivative(Complex z) const;

  /// Same function (pole of order 1 and log_derivative coincide).
  bool same_function(const BasisElement& other) const;
};

struct BasisSpec {
  std::vector<BasisElement> elements;

  /// Index of the constant monomial, if present.
  std::optional<std::size_t> constant_index() const;
  bool constant_first() const { return constant_index() == std::size_t{0}; }
};

struct PoleSpec {
  Complex location;
  int max_order = 1;
};

/// Recipe for a basis that is instantiated against a concrete domain.
struct BasisOptions {
  int degree = 12;                // monomials 0..degree
  int hole_pole_order = 3;        // poles 1..order at every hole marker
  std::vector<PoleSpec> poles;    // additional user poles
};

/// Monomials centered at the centroid and scaled by half the diameter, plus
/// the requested poles.
BasisSpec make_basis(const Domain& domain, const BasisOptions& options = {});

/// Throws Error(basis) for an empty basis, duplicate elements, or a
/// singularity inside or on the closure of the domain.
void validate_basis(const Domain& domain, const BasisSpec& basis);

/// Direction of the horizontal log cut from `apex`: away from the centroid.
int cut_direction(const Domain& domain, Complex apex);
int cut_direction(Complex centroid, Complex apex);

enum class TermKind {
  power,          // coefficient * ((z - center) / scale)^exponent
  inverse_power,  // coefficient * (z - center)^(-exponent)
  log,            // coefficient * log(z - center), cut along cut_direction
};

struct ExpansionTerm {
  TermKind kind = TermKind::power;
  Complex center{};
  double scale = 1.0;
  int exponent = 0;
  Complex coefficient{};
  int cut_direction = 1;
};

/// Finite sum of powers, inverse powers and logarithms. Used both for the
/// antiderivative F of a projection and for the tracer's level-set families.
struct AnalyticExpansion {
  std::vector<ExpansionTerm> terms;

  Complex operator()(Complex z) const;
  /// Re F with log terms as Re(c) ln|z - a| - Im(c) arg(z - a).
  double real_part(Complex z) const;
  Complex derivative(Complex z) const;
  /// Log terms whose coefficient has |Im c| > tol * |c|.
  std::vector<std::size_t> complex_log_terms(double tol = 1e-8) const;
};

}  // namespace bergman
