#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehspline/basis.hpp"
#include "ehspline/frequency.hpp"
#include "ehspline/hermite_data.hpp"
#include "ehspline/numeric.hpp"

namespace ehspline {

/// M-periodic planar curve r(t) = sum_n r(n) phi_1(t - n) + r'(n) phi_2(t - n)
/// with w0 = 2 pi / M.
class ClosedHermiteCurve {
 public:
  ClosedHermiteCurve(std::vector<Vec2> points, std::vector<Vec2> tangents)
      : points_(std::move(points)), tangents_(std::move(tangents)) {
    if (points_.size() < 3) {
      throw std::domain_error("closed curve needs M >= 3 control points, got " +
                              std::to_string(points_.size()));
    }
    if (points_.size() != tangents_.size()) {
      throw std::invalid_argument("points and tangents must have the same length");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y) ||
          !std::isfinite(tangents_[i].x) || !std::isfinite(tangents_[i].y)) {
        throw std::domain_error("non-finite control data at node " + std::to_string(i));
      }
    }
    freq_ = Frequency(2.0 * pi / static_cast<double>(points_.size()));
    data_ = hermite_data();
  }

  [[nodiscard]] std::size_t period() const { return points_.size(); }
  [[nodiscard]] Frequency frequency() const { return freq_; }
  [[nodiscard]] const std::vector<Vec2>& points() const { return points_; }
  [[nodiscard]] const std::vector<Vec2>& tangents() const { return tangents_; }

  [[nodiscard]] HermiteData<Vec2> hermite_data() const {
    std::vector<HermiteNode<Vec2>> nodes;
    nodes.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) nodes.push_back({points_[i], tangents_[i]});
    return HermiteData<Vec2>::periodic(std::move(nodes));
  }

  /// Point and tangent at parameter t (any real; wraps modulo M).
  [[nodiscard]] HermiteNode<Vec2> eval(double t) const {
    return eval(make_generators(freq_), t);
  }

  /// Same, reusing generators built once by the caller for dense sampling.
  [[nodiscard]] HermiteNode<Vec2> eval(const GeneratorPair& gen, double t) const {
    const double m = static_cast<double>(points_.size());
    double u = std::fmod(t, m);
    if (u < 0.0) u += m;
    return spline_eval(gen, data_, u);
  }

 private:
  std::vector<Vec2> points_;
  std::vector<Vec2> tangents_;
  Frequency freq_;
  HermiteData<Vec2> data_;
};

/// Exact unit circle: r(n) = (cos w0n, sin w0n), r'(n) = w0 (-sin w0n, cos w0n).
[[nodiscard]] inline ClosedHermiteCurve unit_circle(std::size_t M) {
  if (M < 3) throw std::domain_error("unit_circle needs M >= 3");
  const double w = 2.0 * pi / static_cast<double>(M);
  std::vector<Vec2> pts, tans;
  pts.reserve(M);
  tans.reserve(M);
  for (std::size_t n = 0; n < M; ++n) {
    const double a = w * static_cast<double>(n);
    const double c = std::cos(a), s = std::sin(a);
    pts.push_back({c, s});
    tans.push_back({-w * s, w * c});
  }
  return {std::move(pts), std::move(tans)};
}

/// points -> A p + b, tangents -> A t.
[[nodiscard]] inline ClosedHermiteCurve affine(const ClosedHermiteCurve& curve, const Mat2& A,
                                               Vec2 b) {
  std::vector<Vec2> pts, tans;
  pts.reserve(curve.period());
  tans.reserve(curve.period());
  for (std::size_t i = 0; i < curve.period(); ++i) {
    pts.push_back(A * curve.points()[i] + b);
    tans.push_back(A * curve.tangents()[i]);
  }
  return {std::move(pts), std::move(tans)};
}

enum class ReproductionTarget { constant, linear, cosine, sine };

/// Sup error of the Hermite expansion of a target in {1, x, cos w0x, sin w0x}.
/// Samples cover n in [-10, 10]; the error is measured on [-8, 8].
[[nodiscard]] inline double reproduction_check(Frequency freq, ReproductionTarget target,
                                               int samples_per_unit = 64) {
  const double w = freq.value();
  auto f = [&](double x) {
    switch (target) {
      case ReproductionTarget::constant: return 1.0;
      case ReproductionTarget::linear: return x;
      case ReproductionTarget::cosine: return std::cos(w * x);
      case ReproductionTarget::sine: return std::sin(w * x);
    }
    return 0.0;
  };
  auto df = [&](double x) {
    switch (target) {
      case ReproductionTarget::constant: return 0.0;
      case ReproductionTarget::linear: return 1.0;
      case ReproductionTarget::cosine: return -w * std::sin(w * x);
      case ReproductionTarget::sine: return w * std::cos(w * x);
    }
    return 0.0;
  };
  const auto data = sample_hermite(f, df, -10, 10);
  const GeneratorPair gen = make_generators(freq);
  double err = 0.0;
  const int total = 16 * samples_per_unit;
  for (int i = 0; i <= total; ++i) {
    const double x = -8.0 + 16.0 * static_cast<double>(i) / static_cast<double>(total);
    err = std::fmax(err, std::abs(spline_eval(gen, data, x).value - f(x)));
  }
  return err;
}

}  // namespace ehspline
