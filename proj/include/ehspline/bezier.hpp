#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "ehspline/e4_piece.hpp"
#include "ehspline/frequency.hpp"
#include "ehspline/numeric.hpp"

namespace ehspline {

/// Exponential Bernstein basis b_0..b_3 of span{1, x, cos w0x, sin w0x} on [0, 1].
struct BernsteinBasis {
  std::array<E4Piece, 4> pieces;
  Frequency freq;
  double lambda = 1.0 / 3.0;  // Bezier handle factor, phi_2 = lambda b_1 on [0,1]
  double kappa = -3.0;        // b_0'(0) = w0 (cos w0 - 1) / (w0 - sin w0)
};

/// Handle factor (w0 - sin w0) / (w0 (1 - cos w0)); tends to 1/3.
[[nodiscard]] inline double bezier_lambda(Frequency freq) {
  const double w = freq.effective();
  return kernel::sinc3(w) / kernel::versinc(w);
}

[[nodiscard]] inline BernsteinBasis make_bernstein(Frequency freq) {
  const double w = freq.effective();
  const double inv_sinc3 = 1.0 / kernel::sinc3(w);
  const double inv_s3 = 1.0 / kernel::s3(w);
  // b_3 = (w x - sin w x) / (w - sin w)
  const E4Piece b3(0.0, 0.0, 0.0, inv_sinc3, freq);
  // b_2 = sin(w/2)/s - 2w sin^3(w/2) x / (s (w - sin w))
  //       + (1/(w - sin w) + cos(w/2)/s) sin(w x) - sin(w/2)/s cos(w x),
  // through its second and third derivatives at 0.
  const E4Piece b2(0.0, 0.0, 0.5 * kernel::sinc(0.5 * w) * inv_s3,
                   -inv_sinc3 - std::cos(0.5 * w) * inv_s3, freq);
  const double kappa = -kernel::versinc(w) * inv_sinc3;
  return {{b3.reflected(), b2.reflected(), b2, b3}, freq, -1.0 / kappa, kappa};
}

[[nodiscard]] inline double bernstein(const BernsteinBasis& basis, int ell, double x) {
  if (ell < 0 || ell > 3) throw std::invalid_argument("Bernstein index must be in 0..3");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("Bernstein basis is defined on [0, 1]");
  return basis.pieces[static_cast<std::size_t>(ell)](x);
}

[[nodiscard]] inline double bernstein(Frequency freq, int ell, double x) {
  return bernstein(make_bernstein(freq), ell, x);
}

/// Control values of one segment. freq is the frequency in local
/// coordinates u in [0, 1], i.e. h * w0 for a segment of length h.
template <class V>
struct BezierSegment {
  std::array<V, 4> p{};
  Frequency freq;

  [[nodiscard]] V operator()(const BernsteinBasis& basis, double u) const {
    V r = bernstein(basis, 0, u) * p[0];
    for (int l = 1; l < 4; ++l) r = r + bernstein(basis, l, u) * p[static_cast<std::size_t>(l)];
    return r;
  }
  [[nodiscard]] V operator()(double u) const { return (*this)(make_bernstein(freq), u); }
};

/// End values and derivatives of a segment of length h.
template <class V>
struct HermiteSegment {
  V f0{};
  V d0{};
  V f1{};
  V d1{};
};

/// Interior control points sit at f0 + lambda(h w0) h d0 and f1 - lambda(h w0) h d1.
template <class V>
[[nodiscard]] BezierSegment<V> hermite_to_bezier(Frequency freq, double h,
                                                 const HermiteSegment<V>& s) {
  const Frequency local = freq.scaled(h);
  const double handle = bezier_lambda(local) * h;
  return {{s.f0, s.f0 + handle * s.d0, s.f1 - handle * s.d1, s.f1}, local};
}

template <class V>
[[nodiscard]] HermiteSegment<V> bezier_to_hermite(const BezierSegment<V>& seg, double h) {
  if (!(h > 0.0)) throw std::domain_error("segment length h must be positive");
  const double handle = bezier_lambda(seg.freq) * h;
  return {seg.p[0], (seg.p[1] - seg.p[0]) / handle, seg.p[3], (seg.p[3] - seg.p[2]) / handle};
}

}  // namespace ehspline
