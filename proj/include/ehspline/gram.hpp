#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "ehspline/basis.hpp"
#include "ehspline/frequency.hpp"
#include "ehspline/numeric.hpp"

namespace ehspline {

/// Inner products of the generator shifts:
///   a = <phi_1, phi_1(.-1)>, b = ||phi_1||^2, c = <phi_1, phi_2(.-1)>,
///   d = <phi_2, phi_2(.-1)>, e = ||phi_2||^2.
struct GramEntries {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
};

namespace detail {

// Maclaurin coefficients (in powers of w^2) of the closed forms, used below
// w0 = 1 where the closed forms lose up to w0^-12 in relative accuracy.
inline constexpr std::array<double, 13> kGramSeriesA{
    0.12857142857142857143,    -0.00031746031746031746032, -3.9167182024324881468e-6,
    -5.1271479842908414337e-8, -6.7854376244398920136e-10, -8.9785670684696961874e-12,
    -1.1846159548044281584e-13, -1.5576618233579349714e-15, -2.0414759634708499810e-17,
    -2.6675106962209498188e-19, -3.4760034217959889838e-21, -4.5183279528731075207e-23,
    -5.8599958121717154802e-25};
inline constexpr std::array<double, 13> kGramSeriesB{
    0.74285714285714285714,   0.00063492063492063492064, 7.8334364048649762936e-6,
    1.0254295968581682867e-7, 1.3570875248879784027e-9,  1.7957134136939392375e-11,
    2.3692319096088563168e-13, 3.1153236467158699427e-15, 4.0829519269416999620e-17,
    5.3350213924418996377e-19, 6.9520068435919779676e-21, 9.0366559057462150415e-23,
    1.1719991624343430960e-24};
inline constexpr std::array<double, 13> kGramSeriesC{
    -0.030952380952380952381,   -0.00059523809523809523810, -0.000015237408094550951694,
    -3.9566914566914566915e-7,  -1.0196562067310366630e-8,  -2.6092323150035123713e-10,
    -6.6469179485579179808e-12, -1.6888937037837906000e-13, -4.2851039703427969166e-15,
    -1.0863829307196652857e-16, -2.7531129950922262298e-18, -6.9754060274568580587e-20,
    -1.7671141149057547912e-21};
inline constexpr std::array<double, 13> kGramSeriesD{
    -0.0071428571428571428571,  -0.00027777777777777777778, -9.6028310314024599739e-6,
    -3.0827858208810589763e-7,  -9.4393617636248021736e-9,  -2.7999163347747225743e-10,
    -8.1204977932598881487e-12, -2.3161844653759120363e-13, -6.5217827277867373786e-15,
    -1.8175863924735653266e-16, -5.0230878686600688721e-18, -1.3784660721093737805e-19,
    -3.7603844143420950254e-21};
inline constexpr std::array<double, 13> kGramSeriesE{
    0.019047619047619047619,  0.00063492063492063492064, 0.000020476877619734762592,
    6.3604825509587414349e-7, 1.9167445471300346584e-8,  5.6414980162256850710e-10,
    1.6299935258177019224e-11, 4.6405780900282480566e-13, 1.3054858927123267719e-14,
    3.6367109484883723068e-16, 1.0048253410249895866e-17, 2.7572108376032216949e-19,
    7.5211404487388886578e-21};
inline constexpr std::array<double, 13> kGramSeriesG{
    0.0046031746031746031746,   0.000065759637188208616780, 5.5486841201126915413e-7,
    -1.0510821168417540300e-8,  -8.1273182180211658670e-10, -3.3030291504532571811e-11,
    -1.1284474763877436062e-12, -3.5607257252395646314e-14, -1.0743231712862144860e-15,
    -3.1498904445418306169e-17, -9.0529520225232531183e-19, -2.5636285036443111892e-20,
    -7.1766849993454931182e-22};

// Series and closed forms both reach ~1e-15 here; below it the closed forms lose digits.
inline constexpr double kSeriesSwitch = 2.0;

[[nodiscard]] inline double even_series(const std::array<double, 13>& c, double w) {
  const double w2 = w * w;
  double r = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) r = r * w2 + c[k];
  return r;
}

/// Gauss-Legendre (8 points) on [0, 1]; exact for the degree-6 products of
/// the cubic limit generators.
template <class F>
[[nodiscard]] double gauss8_unit(F&& f) {
  static constexpr double x[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                  0.9602898564975363};
  static constexpr double w[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                  0.1012285362903763};
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    s += w[i] * (f(0.5 * (1.0 + x[i])) + f(0.5 * (1.0 - x[i])));
  }
  return 0.5 * s;
}

/// Gram constants of the cubic Hermite limit, integrated once.
[[nodiscard]] inline const GramEntries& cubic_limit_gram() {
  static const GramEntries entries = [] {
    const GeneratorPair gen = make_generators(Frequency(0.0));
    const auto& g1 = gen.g1;
    const auto& g2 = gen.g2;
    GramEntries r;
    // On [0,1]: phi_1(x-1) = g1(1-x), phi_2(x-1) = -g2(1-x).
    r.a = gauss8_unit([&](double x) { return g1(x) * g1(1.0 - x); });
    r.b = 2.0 * gauss8_unit([&](double x) { return g1(x) * g1(x); });
    r.c = gauss8_unit([&](double x) { return -g1(x) * g2(1.0 - x); });
    r.d = gauss8_unit([&](double x) { return -g2(x) * g2(1.0 - x); });
    r.e = 2.0 * gauss8_unit([&](double x) { return g2(x) * g2(x); });
    return r;
  }();
  return entries;
}

}  // namespace detail

/// Closed-form Gram entries for w0 in [0, pi].
[[nodiscard]] inline GramEntries gram_entries(Frequency freq) {
  if (freq.is_small()) return detail::cubic_limit_gram();
  const double w = freq.value();
  if (w < detail::kSeriesSwitch) {
    return {detail::even_series(detail::kGramSeriesA, w), detail::even_series(detail::kGramSeriesB, w),
            detail::even_series(detail::kGramSeriesC, w), detail::even_series(detail::kGramSeriesD, w),
            detail::even_series(detail::kGramSeriesE, w)};
  }
  const double w2 = w * w;
  const double s = 2.0 * std::sin(0.5 * w) - w * std::cos(0.5 * w);
  const double s2 = s * s;
  const double sh = std::sin(0.5 * w);
  const double sh2 = sh * sh;
  const double cw = std::cos(w), sw = std::sin(w);
  const double c2w = std::cos(2.0 * w), s2w = std::sin(2.0 * w);
  GramEntries g;
  g.a = (w * (w2 - 18.0) * cw - 6.0 * (w2 - 5.0) * sw + w * (w2 - 12.0)) / (12.0 * w * s2);
  g.b = (w * (w2 + 3.0) * cw - 3.0 * (w2 + 5.0) * sw + w * (w2 + 12.0)) / (3.0 * w * s2);
  g.c = (5.0 * w * (w2 + 3.0) * std::cos(0.5 * w) + w * (w2 - 15.0) * std::cos(1.5 * w) -
         72.0 * sh - 6.0 * (w2 - 4.0) * std::sin(1.5 * w)) /
        (24.0 * w2 * sh * s2);
  g.d = (6.0 * (7.0 * w2 + 6.0) * sw + 6.0 * (w2 - 3.0) * s2w -
         w * (2.0 * (7.0 * w2 - 30.0) * cw + (w2 - 12.0) * c2w + 3.0 * (w2 + 24.0))) /
        (48.0 * w2 * w * sh2 * s2);
  g.e = (-12.0 * (2.0 * w2 + 3.0) * sw - 3.0 * (5.0 * w2 - 6.0) * s2w +
         2.0 * w * (2.0 * (w2 + 9.0) * cw + (w2 - 18.0) * c2w + 6.0 * w2)) /
        (24.0 * w2 * w * sh2 * s2);
  return g;
}

/// Fourier Gram matrix at frequency omega:
///   [[2a cos + b, -2 i c sin], [2 i c sin, 2d cos + e]].
/// The off-diagonal is stored through its imaginary part.
struct GramMatrix {
  double m11 = 0.0;
  double m22 = 0.0;
  double m12_imag = 0.0;  // m12 = i * m12_imag, m21 = conj(m12)

  [[nodiscard]] std::complex<double> operator()(int row, int col) const {
    if (row == 0 && col == 0) return m11;
    if (row == 1 && col == 1) return m22;
    if (row == 0 && col == 1) return {0.0, m12_imag};
    return {0.0, -m12_imag};
  }
  [[nodiscard]] double trace() const { return m11 + m22; }
  [[nodiscard]] double det() const { return m11 * m22 - m12_imag * m12_imag; }

  /// (lambda_min, lambda_max)
  [[nodiscard]] std::pair<double, double> eigenvalues() const {
    const double mean = 0.5 * (m11 + m22);
    const double r = std::hypot(0.5 * (m11 - m22), m12_imag);
    const double lmax = mean + r;
    // det / lmax avoids cancellation in mean - r when lambda_min is tiny.
    const double lmin = lmax > 0.0 ? det() / lmax : mean - r;
    return {lmin, lmax};
  }
};

[[nodiscard]] inline GramMatrix gram_matrix(const GramEntries& g, double omega) {
  const double co = std::cos(omega);
  return {2.0 * g.a * co + g.b, 2.0 * g.d * co + g.e, -2.0 * g.c * std::sin(omega)};
}

[[nodiscard]] inline GramMatrix gram_matrix(Frequency freq, double omega) {
  return gram_matrix(gram_entries(freq), omega);
}

/// det = A cos(2 omega) + B cos(omega) + C.
struct DeterminantTerms {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;

  [[nodiscard]] double at(double omega) const {
    return A * std::cos(2.0 * omega) + B * std::cos(omega) + C;
  }
};

[[nodiscard]] inline DeterminantTerms determinant_terms(const GramEntries& g) {
  return {2.0 * (g.a * g.d + g.c * g.c), 2.0 * (g.a * g.e + g.b * g.d),
          2.0 * (g.a * g.d - g.c * g.c) + g.b * g.e};
}

/// Closed-form lower bound G(w0) <= det of the Gram matrix for every omega.
[[nodiscard]] inline double lower_bound_G(Frequency freq) {
  const double w = freq.effective();
  if (w < detail::kSeriesSwitch) return detail::even_series(detail::kGramSeriesG, w);
  const double w2 = w * w;
  const double w4 = w2 * w2;
  const double s = 2.0 * std::sin(0.5 * w) - w * std::cos(0.5 * w);
  const double sh = std::sin(0.5 * w);
  const double num = 180.0 * w * std::sin(w) - 9.0 * w2 * w * std::sin(2.0 * w) -
                     4.0 * (2.0 * w4 - 3.0 * w2 - 48.0) * std::cos(w) +
                     (w4 - 24.0 * w2 - 3.0) * std::cos(2.0 * w) + 7.0 * w4 - 78.0 * w2 - 189.0;
  return num / (24.0 * w4 * sh * sh * s * s);
}

/// G(0) as the limit of G along w0 = 2^-k, with Richardson extrapolation
/// (G is even in w0, so the leading error term is O(w0^2)).
[[nodiscard]] inline double lower_bound_G_at_zero() {
  double prev = lower_bound_G(Frequency(0.5));
  double extrapolated = prev;
  for (int k = 2; k < 40; ++k) {
    const double w = std::ldexp(1.0, -k);
    if (w < kSmallFrequency) break;
    const double cur = lower_bound_G(Frequency(w));
    const double next = (4.0 * cur - prev) / 3.0;
    if (std::abs(next - extrapolated) < 1e-17) return next;
    extrapolated = next;
    prev = cur;
  }
  return extrapolated;
}

struct RieszBounds {
  double alpha = 0.0;       // sqrt of the smallest lambda_min on the grid
  double beta = 0.0;        // sqrt of the largest lambda_max on the grid
  double min_lambda = 0.0;
  double max_lambda = 0.0;
  double min_det = 0.0;
  double max_trace = 0.0;
};

inline constexpr std::size_t kRieszScanSize = 2048;

/// Scans omega over grid_size uniform samples of [0, pi]. Extrema between
/// samples are not certified.
[[nodiscard]] inline RieszBounds riesz_bounds(Frequency freq,
                                              std::size_t grid_size = kRieszScanSize) {
  if (grid_size < 64) throw std::invalid_argument("riesz_bounds: grid_size must be >= 64");
  const GramEntries g = gram_entries(freq);
  double lmin = INFINITY, lmax = -INFINITY, dmin = INFINITY, tmax = -INFINITY;
  for (std::size_t k = 0; k < grid_size; ++k) {
    const double omega = pi * static_cast<double>(k) / static_cast<double>(grid_size - 1);
    const GramMatrix m = gram_matrix(g, omega);
    const auto [lo, hi] = m.eigenvalues();
    lmin = std::min(lmin, lo);
    lmax = std::max(lmax, hi);
    dmin = std::min(dmin, m.det());
    tmax = std::max(tmax, m.trace());
  }
  return {lmin > 0.0 ? std::sqrt(lmin) : 0.0, std::sqrt(lmax), lmin, lmax, dmin, tmax};
}

}  // namespace ehspline
