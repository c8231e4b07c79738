#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace bergman {

template <typename Scalar>
struct GaussLegendreRule {
  std::vector<Scalar> nodes;    // on [-1, 1], ascending
  std::vector<Scalar> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n from the
/// Chebyshev-like initial guesses.
template <typename Scalar>
GaussLegendreRule<Scalar> gauss_legendre(int n) {
  GaussLegendreRule<Scalar> rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Scalar x = std::cos(std::numbers::pi_v<Scalar> * (Scalar(i) + Scalar(0.75)) /
                        (Scalar(n) + Scalar(0.5)));
    Scalar dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      Scalar p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const Scalar pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const Scalar dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 4 * eps) break;
    }
    // Recompute derivative at the converged node for the weight.
    Scalar p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const Scalar pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    const Scalar w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0;
  return rule;
}

/// Thread-safe memoized double-precision rule.
const GaussLegendreRule<double>& cached_gauss_legendre(int n);

}  // namespace bergman
