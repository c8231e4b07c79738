#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bergman {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

enum class ErrorKind {
  input,                 // malformed options or spec files
  geometry,              // invalid boundary data
  ambiguous_membership,  // point query too close to the boundary
  basis,                 // basis element singular on the closed domain
  accuracy,              // quadrature did not converge
  conditioning,          // Gram factorization failed even with ridge
  evaluation,            // evaluation at a pole
  branch,                // log branch cut crosses the boundary
  empty_trace,           // level set has no closed component in the window
  solver,                // iterative solver did not converge
};

/// Library-wide exception. `module()` names the component that raised it so
/// front ends can report where a pipeline failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& message,
        double detail = 0.0)
      : std::runtime_error(module + ": " + message),
        kind_(kind),
        module_(std::move(module)),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }
  /// Numeric payload, e.g. the condition estimate of a failed factorization.
  double detail() const noexcept { return detail_; }

  /// Input/validation problems as opposed to numerical failures.
  bool is_validation() const noexcept {
    return kind_ == ErrorKind::input || kind_ == ErrorKind::geometry ||
           kind_ == ErrorKind::ambiguous_membership ||
           kind_ == ErrorKind::basis;
  }

 private:
  ErrorKind kind_;
  std::string module_;
  double detail_;
};

}  // namespace bergman
