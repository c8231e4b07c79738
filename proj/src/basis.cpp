#include "bergman/basis.hpp"

#include <cmath>

namespace bergman {

Complex ipow(Complex z, int k) {
  if (k < 0) return 1.0 / ipow(z, -k);
  Complex result = 1.0;
  while (k > 0) {
    if (k & 1) result *= z;
    z *= z;
    k >>= 1;
  }
  return result;
}

Complex branch_log(Complex w, int direction) {
  if (direction > 0) {
    // arg in (0, 2pi)
    return std::log(-w) + Complex(0.0, pi);
  }
  return std::log(w);
}

BasisElement BasisElement::monomial(Complex center, double scale, int k) {
  if (k < 0 || !(scale > 0.0)) {
    throw Error(ErrorKind::basis, "bergman",
                "monomial needs exponent >= 0 and positive scale");
  }
  return {BasisKind::monomial, center, scale, k};
}

BasisElement BasisElement::pole(Complex location, int order) {
  if (order < 1) {
    throw Error(ErrorKind::basis, "bergman", "pole order must be >= 1");
  }
  return {BasisKind::pole, location, 1.0, order};
}

BasisElement BasisElement::log_derivative(Complex location) {
  return {BasisKind::log_derivative, location, 1.0, 1};
}

Complex BasisElement::operator()(Complex z) const {
  switch (kind) {
    case BasisKind::monomial:
      return ipow((z - center) / scale, exponent);
    case BasisKind::pole:
    case BasisKind::log_derivative:
      return ipow(z - center, -exponent);
  }
  return 0.0;
}

int BasisElement::pole_order() const {
  return kind == BasisKind::monomial ? 0 : exponent;
}

Complex BasisElement::antiderivative(Complex z) const {
  switch (kind) {
    case BasisKind::monomial:
      return scale / (exponent + 1) * ipow((z - center) / scale, exponent + 1);
    case BasisKind::pole:
    case BasisKind::log_derivative:
      if (exponent == 1) {
        throw Error(ErrorKind::evaluation, "bergman",
                    "antiderivative of 1/(z-a) is a logarithm");
      }
      return -1.0 / (double(exponent - 1) * ipow(z - center, exponent - 1));
  }
  return 0.0;
}

bool BasisElement::same_function(const BasisElement& other) const {
  if (pole_order() != other.pole_order()) return false;
  if (kind == BasisKind::monomial && exponent == 0 && other.exponent == 0) {
    return true;
  }
  if (center != other.center) return false;
  if (kind == BasisKind::monomial) {
    return exponent == other.exponent && scale == other.scale;
  }
  return true;
}

std::optional<std::size_t> BasisSpec::constant_index() const {
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].kind == BasisKind::monomial && elements[k].exponent == 0) {
      return k;
    }
  }
  return std::nullopt;
}

BasisSpec make_basis(const Domain& domain, const BasisOptions& options) {
  BasisSpec basis;
  const double scale = 0.5 * domain.diameter();
  for (int k = 0; k <= options.degree; ++k) {
    basis.elements.push_back(
        BasisElement::monomial(domain.centroid(), scale, k));
  }
  for (const auto& a : domain.hole_points()) {
    for (int j = 1; j <= options.hole_pole_order; ++j) {
      basis.elements.push_back(BasisElement::pole(a, j));
    }
  }
  for (const auto& p : options.poles) {
    for (int j = 1; j <= p.max_order; ++j) {
      const auto e = BasisElement::pole(p.location, j);
      bool duplicate = false;
      for (const auto& existing : basis.elements) {
        duplicate = duplicate || existing.same_function(e);
      }
      if (!duplicate) basis.elements.push_back(e);
    }
  }
  validate_basis(domain, basis);
  return basis;
}

void validate_basis(const Domain& domain, const BasisSpec& basis) {
  if (basis.elements.empty()) {
    throw Error(ErrorKind::basis, "bergman", "basis is empty");
  }
  const auto& els = basis.elements;
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      if (els[i].same_function(els[j])) {
        throw Error(ErrorKind::basis, "bergman",
                    "basis elements " + std::to_string(i) + " and " +
                        std::to_string(j) + " coincide");
      }
    }
    if (els[i].pole_order() == 0) continue;
    const Complex a = els[i].center;
    bool inside = false;
    try {
      inside = contains(domain, a);
    } catch (const Error&) {
      inside = true;
    }
    if (inside || domain.distance_to_boundary(a) < 1e-9 * domain.diameter()) {
      throw Error(ErrorKind::basis, "bergman",
                  "pole at (" + std::to_string(a.real()) + ", " +
                      std::to_string(a.imag()) +
                      ") lies in the closure of the domain");
    }
  }
}

int cut_direction(const Domain& domain, Complex apex) {
  return cut_direction(domain.centroid(), apex);
}

int cut_direction(Complex centroid, Complex apex) {
  return apex.real() >= centroid.real() ? 1 : -1;
}

namespace {

Complex term_value(const ExpansionTerm& t, Complex z) {
  switch (t.kind) {
    case TermKind::power:
      return t.coefficient * ipow((z - t.center) / t.scale, t.exponent);
    case TermKind::inverse_power:
      return t.coefficient * ipow(z - t.center, -t.exponent);
    case TermKind::log:
      return t.coefficient * branch_log(z - t.center, t.cut_direction);
  }
  return 0.0;
}

}  // namespace

Complex AnalyticExpansion::operator()(Complex z) const {
  Complex sum = 0.0;
  for (const auto& t : terms) sum += term_value(t, z);
  return sum;
}

double AnalyticExpansion::real_part(Complex z) const {
  double sum = 0.0;
  for (const auto& t : terms) {
    if (t.kind == TermKind::log) {
      const Complex w = z - t.center;
      sum += t.coefficient.real() * std::log(std::abs(w));
      if (t.coefficient.imag() != 0.0) {
        sum -= t.coefficient.imag() * branch_log(w, t.cut_direction).imag();
      }
    } else {
      sum += term_value(t, z).real();
    }
  }
  return sum;
}

Complex AnalyticExpansion::derivative(Complex z) const {
  Complex sum = 0.0;
  for (const auto& t : terms) {
    const Complex w = z - t.center;
    switch (t.kind) {
      case TermKind::power:
        if (t.exponent > 0) {
          sum += t.coefficient * double(t.exponent) / t.scale *
                 ipow(w / t.scale, t.exponent - 1);
        }
        break;
      case TermKind::inverse_power:
        sum -= t.coefficient * double(t.exponent) * ipow(w, -t.exponent - 1);
        break;
      case TermKind::log:
        sum += t.coefficient / w;
        break;
    }
  }
  return sum;
}

std::vector<std::size_t> AnalyticExpansion::complex_log_terms(double tol) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& t = terms[k];
    if (t.kind == TermKind::log &&
        std::abs(t.coefficient.imag()) > tol * std::abs(t.coefficient)) {
      out.push_back(k);
    }
  }
  return out;
}

}  // namespace bergman
