#pragma once

#include <cmath>
#include <stdexcept>

#include "ehspline/frequency.hpp"
#include "ehspline/numeric.hpp"

namespace ehspline {

/// Coefficients of a + b x + c cos(w0 x) + d sin(w0 x).
struct TrigCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

/// One segment in span{1, x, cos(w0 x), sin(w0 x)}.
///
/// Stored through its derivatives at the origin, i.e. as
///
///   g(x) = v0 + v1 x + v2 C(x) + v3 S(x),
///   C(x) = (1 - cos w0x) / w0^2,   S(x) = (w0x - sin w0x) / w0^3,
///
/// where C and S have Taylor data (0,0,1,0) and (0,0,0,1) at x = 0. The
/// coefficients stay O(1) as w0 -> 0 and become the cubic Taylor
/// coefficients in the limit, which is exactly what the small path uses.
class E4Piece {
 public:
  constexpr E4Piece() = default;
  constexpr E4Piece(double v0, double v1, double v2, double v3, Frequency freq)
      : v_{v0, v1, v2, v3}, freq_(freq) {}

  [[nodiscard]] constexpr Frequency frequency() const { return freq_; }
  /// k-th derivative at 0, k in 0..3.
  [[nodiscard]] constexpr double taylor(int k) const { return v_[k]; }

  [[nodiscard]] double operator()(double x) const {
    const double w = freq_.effective();
    const double wx = w * x;
    return v_[0] + x * (v_[1] + x * (v_[2] * kernel::versinc(wx) + v_[3] * x * kernel::sinc3(wx)));
  }

  /// Derivative of order 0..3 at x.
  [[nodiscard]] double derivative(int order, double x) const {
    const double w = freq_.effective();
    const double wx = w * x;
    switch (order) {
      case 0:
        return (*this)(x);
      case 1:
        return v_[1] + x * (v_[2] * kernel::sinc(wx) + v_[3] * x * kernel::versinc(wx));
      case 2:
        return v_[2] * std::cos(wx) + v_[3] * x * kernel::sinc(wx);
      case 3:
        return -v_[2] * w * wx * kernel::sinc(wx) + v_[3] * std::cos(wx);
      default:
        throw std::invalid_argument("E4Piece::derivative: order must be in 0..3");
    }
  }

  /// The derivative as a piece of the same family.
  [[nodiscard]] E4Piece differentiated() const {
    const double w = freq_.effective();
    return {v_[1], v_[2], v_[3], -w * w * v_[2], freq_};
  }

  /// x -> g(1 - x).
  [[nodiscard]] E4Piece reflected() const {
    return {derivative(0, 1.0), -derivative(1, 1.0), derivative(2, 1.0), -derivative(3, 1.0),
            freq_};
  }

  /// Coefficients in the raw trigonometric basis. Undefined on the small path.
  [[nodiscard]] TrigCoefficients trig_coefficients() const {
    if (freq_.is_small()) {
      throw std::domain_error("trig coefficients are undefined on the small-frequency path");
    }
    const double w = freq_.value();
    const double w2 = w * w;
    return {v_[0] + v_[2] / w2, v_[1] + v_[3] / w2, -v_[2] / w2, -v_[3] / (w2 * w)};
  }

  friend E4Piece operator+(const E4Piece& a, const E4Piece& b) {
    return {a.v_[0] + b.v_[0], a.v_[1] + b.v_[1], a.v_[2] + b.v_[2], a.v_[3] + b.v_[3], a.freq_};
  }
  friend E4Piece operator-(const E4Piece& a, const E4Piece& b) {
    return {a.v_[0] - b.v_[0], a.v_[1] - b.v_[1], a.v_[2] - b.v_[2], a.v_[3] - b.v_[3], a.freq_};
  }
  friend E4Piece operator*(double s, const E4Piece& a) {
    return {s * a.v_[0], s * a.v_[1], s * a.v_[2], s * a.v_[3], a.freq_};
  }

 private:
  double v_[4] = {0.0, 0.0, 0.0, 0.0};
  Frequency freq_;
};

}  // namespace ehspline
