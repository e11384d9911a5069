#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace ehspline {

inline constexpr double pi = std::numbers::pi;

/// Cancellation-free kernels of the exponential-polynomial space.
///
/// Every closed form in this library is built from these four functions.
/// Each one is bounded and smooth at the origin, so quantities like
/// (w - sin w) / w^3 never go through a 0/0 evaluation.
namespace kernel {

/// sin(y) / y
[[nodiscard]] inline double sinc(double y) {
  if (std::abs(y) < 1e-4) {
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0);
  }
  return std::sin(y) / y;
}

/// (1 - cos y) / y^2, evaluated as sinc(y/2)^2 / 2.
[[nodiscard]] inline double versinc(double y) {
  const double s = sinc(0.5 * y);
  return 0.5 * s * s;
}

/// (y - sin y) / y^3
[[nodiscard]] inline double sinc3(double y) {
  if (std::abs(y) < 1.5) {
    // sum_{k>=1} (-1)^{k+1} y^{2k-2} / (2k+1)!
    const double y2 = y * y;
    double term = 1.0 / 6.0;
    double sum = term;
    for (int k = 2; k < 20; ++k) {
      term *= -y2 / ((2.0 * k) * (2.0 * k + 1.0));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return (y - std::sin(y)) / (y * y * y);
}

/// (2 sin(y/2) - y cos(y/2)) / y^3
[[nodiscard]] inline double s3(double y) {
  if (std::abs(y) < 1.5) {
    // sum_{k>=1} (-1)^{k+1} 2k y^{2k-2} / (4^k (2k+1)!)
    const double y2 = y * y;
    double scale = 1.0 / 24.0;  // 1 / (4 * 3!)
    double sum = 2.0 * scale;
    for (int k = 2; k < 20; ++k) {
      scale *= -y2 / (4.0 * (2.0 * k) * (2.0 * k + 1.0));
      const double term = 2.0 * k * scale;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return (2.0 * std::sin(0.5 * y) - y * std::cos(0.5 * y)) / (y * y * y);
}

}  // namespace kernel

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  constexpr Vec2& operator+=(Vec2 b) {
    x += b.x;
    y += b.y;
    return *this;
  }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

[[nodiscard]] inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
[[nodiscard]] inline double norm(double v) { return std::abs(v); }

/// Row-major 2x2 real matrix.
struct Mat2 {
  std::array<double, 4> m{1.0, 0.0, 0.0, 1.0};

  [[nodiscard]] constexpr double operator()(int row, int col) const { return m[2 * row + col]; }
  constexpr double& operator()(int row, int col) { return m[2 * row + col]; }

  [[nodiscard]] static constexpr Mat2 identity() { return {}; }
  [[nodiscard]] static constexpr Mat2 zero() { return {{0.0, 0.0, 0.0, 0.0}}; }

  [[nodiscard]] constexpr Mat2 transposed() const { return {{m[0], m[2], m[1], m[3]}}; }
  [[nodiscard]] constexpr double det() const { return m[0] * m[3] - m[1] * m[2]; }
  [[nodiscard]] constexpr Mat2 inverse() const {
    const double d = det();
    return {{m[3] / d, -m[1] / d, -m[2] / d, m[0] / d}};
  }

  friend constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
             a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;

  /// Applies the matrix to a column vector (u, v) whose entries may be points.
  template <class V>
  [[nodiscard]] constexpr std::array<V, 2> apply(const V& u, const V& v) const {
    return {m[0] * u + m[1] * v, m[2] * u + m[3] * v};
  }
};

[[nodiscard]] inline Vec2 operator*(const Mat2& a, Vec2 v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y, a(1, 0) * v.x + a(1, 1) * v.y};
}

/// Max-norm of the entrywise difference.
[[nodiscard]] inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i) r = std::fmax(r, std::abs(a.m[i] - b.m[i]));
  return r;
}

}  // namespace ehspline
