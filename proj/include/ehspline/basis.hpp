#pragma once

#include <cmath>
#include <stdexcept>

#include "ehspline/e4_piece.hpp"
#include "ehspline/frequency.hpp"
#include "ehspline/hermite_data.hpp"
#include "ehspline/numeric.hpp"

namespace ehspline {

/// phi_1 carries the sample value, phi_2 the sample derivative.
enum class Generator { value = 1, slope = 2 };

[[nodiscard]] inline Generator generator_from_index(int which) {
  if (which == 1) return Generator::value;
  if (which == 2) return Generator::slope;
  throw std::invalid_argument("generator index must be 1 or 2");
}

/// Restrictions g1, g2 of the two Hermite generators to [0, 1].
///
/// phi_1 is the even extension of g1 and phi_2 the odd extension of g2;
/// both vanish outside [-1, 1].
struct GeneratorPair {
  E4Piece g1;
  E4Piece g2;
  Frequency freq;

  [[nodiscard]] const E4Piece& piece(Generator which) const {
    return which == Generator::value ? g1 : g2;
  }

  [[nodiscard]] double phi(Generator which, double x) const {
    const double ax = std::abs(x);
    if (ax >= 1.0) return 0.0;
    const double v = piece(which)(ax);
    return (which == Generator::slope && x < 0.0) ? -v : v;
  }

  [[nodiscard]] double phi_deriv(Generator which, double x) const {
    const double ax = std::abs(x);
    if (ax >= 1.0) return 0.0;
    const double v = piece(which).derivative(1, ax);
    // phi_1' is odd, phi_2' is even.
    return (which == Generator::value && x < 0.0) ? -v : v;
  }
};

/// Builds g1, g2 from the four Hermite conditions at 0 and 1.
///
/// In the regularized basis the conditions at 0 fix v0, v1 directly and
/// the conditions at 1 form a 2x2 system for (v2, v3) whose determinant
/// is sinc(w/2) * s(w) / w^3, with s(w) = 2 sin(w/2) - w cos(w/2).
[[nodiscard]] inline GeneratorPair make_generators(Frequency freq) {
  const double w = freq.effective();
  const double c1 = kernel::versinc(w);  // C(1)  = S'(1)
  const double s1 = kernel::sinc3(w);    // S(1)
  const double dc1 = kernel::sinc(w);    // C'(1)
  const double det = kernel::sinc(0.5 * w) * kernel::s3(w);
  // g1: v0 = 1, v1 = 0, [C(1) S(1); C'(1) S'(1)] (v2, v3) = (-1, 0)
  const E4Piece g1(1.0, 0.0, -c1 / det, dc1 / det, freq);
  // g2: v0 = 0, v1 = 1, right-hand side (-1, -1)
  const E4Piece g2(0.0, 1.0, (s1 - c1) / det, (dc1 - c1) / det, freq);
  return {g1, g2, freq};
}

[[nodiscard]] inline double phi(Frequency freq, Generator which, double x) {
  return make_generators(freq).phi(which, x);
}

[[nodiscard]] inline double phi_deriv(Frequency freq, Generator which, double x) {
  return make_generators(freq).phi_deriv(which, x);
}

/// Generators of the grid h*Z: phi_1^h(x) = phi_{1,h w0}(x/h), phi_2^h(x) = h phi_{2,h w0}(x/h).
[[nodiscard]] inline double phi_rescaled(Frequency freq, double h, Generator which, double x) {
  const GeneratorPair gen = make_generators(freq.scaled(h));
  const double v = gen.phi(which, x / h);
  return which == Generator::slope ? h * v : v;
}

[[nodiscard]] inline double phi_rescaled_deriv(Frequency freq, double h, Generator which,
                                               double x) {
  const GeneratorPair gen = make_generators(freq.scaled(h));
  const double v = gen.phi_deriv(which, x / h);
  return which == Generator::value ? v / h : v;
}

/// Evaluates s(x) = sum_n s(n) phi_1(x - n) + s'(n) phi_2(x - n) and s'(x).
///
/// Only the shifts n = floor(x) and floor(x) + 1 contribute; at an integer
/// x the second one vanishes identically and is not read.
template <class V>
[[nodiscard]] HermiteNode<V> spline_eval(const GeneratorPair& gen, const HermiteData<V>& data,
                                         double x) {
  const double fl = std::floor(x);
  const long n = static_cast<long>(fl);
  const double t = x - fl;
  const auto& left = data.at(n);
  HermiteNode<V> out{gen.phi(Generator::value, t) * left.value +
                         gen.phi(Generator::slope, t) * left.slope,
                     gen.phi_deriv(Generator::value, t) * left.value +
                         gen.phi_deriv(Generator::slope, t) * left.slope};
  if (t > 0.0) {
    const auto& right = data.at(n + 1);
    const double u = t - 1.0;
    out.value = out.value + gen.phi(Generator::value, u) * right.value +
                gen.phi(Generator::slope, u) * right.slope;
    out.slope = out.slope + gen.phi_deriv(Generator::value, u) * right.value +
                gen.phi_deriv(Generator::slope, u) * right.slope;
  }
  return out;
}

template <class V>
[[nodiscard]] HermiteNode<V> spline_eval(Frequency freq, const HermiteData<V>& data, double x) {
  return spline_eval(make_generators(freq), data, x);
}

/// Same expansion on the grid h*Z; data[n] = (s(nh), s'(nh)).
template <class V>
[[nodiscard]] HermiteNode<V> spline_eval_on_grid(Frequency freq, double h,
                                                 const HermiteData<V>& data, double x) {
  const GeneratorPair gen = make_generators(freq.scaled(h));
  std::vector<HermiteNode<V>> scaled;
  // Only the two active nodes are rescaled.
  const double u = x / h;
  const long n = static_cast<long>(std::floor(u));
  const long hi = (u > std::floor(u)) ? n + 1 : n;
  for (long k = n; k <= hi; ++k) {
    const auto& node = data.at(k);
    scaled.push_back({node.value, h * node.slope});
  }
  const auto local = HermiteData<V>::finite(std::move(scaled), n);
  const HermiteNode<V> r = spline_eval(gen, local, u);
  return {r.value, r.slope / h};
}

}  // namespace ehspline
