#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "ehspline/numeric.hpp"

namespace ehspline {

/// Below this frequency every evaluation path switches to the cubic
/// (w0 -> 0) limit. All modules branch on Frequency::is_small() only.
inline constexpr double kSmallFrequency = 1e-4;

/// The design frequency w0 in [0, pi] of the space span{1, x, cos(w0 x), sin(w0 x)}.
class Frequency {
 public:
  constexpr Frequency() = default;

  explicit Frequency(double omega0) : omega_(omega0) {
    if (!std::isfinite(omega0) || omega0 < 0.0 || omega0 > pi * (1.0 + 4e-16)) {
      throw std::domain_error("frequency omega0 = " + std::to_string(omega0) +
                              " outside [0, pi]");
    }
    if (omega_ > pi) omega_ = pi;
  }

  [[nodiscard]] constexpr double value() const { return omega_; }
  [[nodiscard]] constexpr bool is_small() const { return omega_ < kSmallFrequency; }

  /// The frequency the closed forms are evaluated at: 0 on the small path.
  [[nodiscard]] constexpr double effective() const { return is_small() ? 0.0 : omega_; }

  /// Frequency of the grid h*Z expressed in local coordinates, h * w0.
  [[nodiscard]] Frequency scaled(double h) const {
    if (!(h > 0.0)) throw std::domain_error("grid step h must be positive");
    if (h * omega_ > pi * (1.0 + 4e-16)) {
      throw std::domain_error("h * omega0 = " + std::to_string(h * omega_) + " exceeds pi");
    }
    return Frequency(h * omega_);
  }

  friend constexpr bool operator==(Frequency, Frequency) = default;

 private:
  double omega_ = 0.0;
};

}  // namespace ehspline
