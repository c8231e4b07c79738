#pragma once

// Reference computations that do not go through the library's boundary
// reductions: direct area quadrature in polar or Cartesian coordinates,
// closed-form series.

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using Complex = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

/// Composite Simpson on [a, b] with n (even) intervals.
inline Complex simpson(const std::function<Complex(double)>& f, double a,
                       double b, int n) {
  const double h = (b - a) / n;
  Complex sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

/// Integral of f over the annulus r0 < |z - c| < r1 (r0 = 0 gives a disk).
inline Complex polar_integral(const std::function<Complex(Complex)>& f,
                              Complex c, double r0, double r1, int n = 400) {
  return simpson(
      [&](double r) {
        return r * simpson(
                       [&](double t) {
                         return f(c + r * Complex(std::cos(t), std::sin(t)));
                       },
                       0.0, 2 * pi, n);
      },
      r0, r1, n);
}

/// Integral of f over an axis-aligned rectangle by tensor Simpson.
inline Complex box_integral(const std::function<Complex(Complex)>& f, double x0,
                            double x1, double y0, double y1, int n = 400) {
  return simpson(
      [&](double x) {
        return simpson([&](double y) { return f(Complex(x, y)); }, y0, y1, n);
      },
      x0, x1, n);
}

/// Torsional rigidity 2 * integral of u, -Laplace u = 2, for the square of
/// side `a`, from the double sine series of u.
inline double square_torsion(double a, int terms = 4001) {
  double sum = 0.0;
  for (int m = 1; m <= terms; m += 2) {
    for (int n = 1; n <= terms; n += 2) {
      const double mm = double(m) * m, nn = double(n) * n;
      sum += 1.0 / (mm * nn * (mm + nn));
    }
  }
  return 256.0 * std::pow(a, 4) / std::pow(pi, 6) * sum;
}

/// J0 by its power series, summed in long double.
inline double j0_series(double x) {
  long double term = 1.0L, sum = 1.0L;
  const long double q = (long double)x * x / 4.0L;
  for (int k = 1; k < 200; ++k) {
    term *= -q / ((long double)k * k);
    sum += term;
    if (std::fabs((double)term) < 1e-30) break;
  }
  return double(sum);
}

/// First positive zero of J0 by bisection on [2, 3].
inline double j0_first_zero() {
  double a = 2.0, b = 3.0;
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    (j0_series(a) * j0_series(m) <= 0 ? b : a) = m;
  }
  return 0.5 * (a + b);
}

}  // namespace oracle
