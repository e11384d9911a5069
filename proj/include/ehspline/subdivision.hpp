#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "ehspline/basis.hpp"
#include "ehspline/bezier.hpp"
#include "ehspline/frequency.hpp"
#include "ehspline/hermite_data.hpp"
#include "ehspline/numeric.hpp"

namespace ehspline {

/// Dyadic masks H_j[-1], H_j[0], H_j[1] of level j.
///
/// They act on (value, derivative) column vectors: the new midpoint between
/// nodes n and n+1 is H_j[1] a_j[n] + H_j[-1] a_j[n+1].
struct MaskTriple {
  int level = 0;
  Mat2 hm1;
  Mat2 h0;
  Mat2 hp1;
  Frequency level_freq;  // w0 / 2^j
};

/// The stationary cubic Hermite (Merrien) limit of D^j H_j[-1] D^-j.
[[nodiscard]] inline Mat2 merrien_left_mask() { return {{0.5, -0.125, 1.5, -0.25}}; }
[[nodiscard]] inline Mat2 merrien_right_mask() { return {{0.5, 0.125, -1.5, -0.25}}; }

[[nodiscard]] inline Frequency level_frequency(Frequency freq, int j) {
  return Frequency(std::ldexp(freq.value(), -j));
}

[[nodiscard]] inline MaskTriple masks(Frequency freq, int j) {
  if (j < 0) throw std::invalid_argument("subdivision level must be >= 0");
  const Frequency fj = level_frequency(freq, j);
  const double w = fj.effective();
  const double h = std::ldexp(1.0, -j);
  const double q = 0.25 * w;
  const double tan_ratio = q == 0.0 ? 1.0 : std::tan(q) / q;
  const double inv_s3 = 1.0 / kernel::s3(w);
  // tan(w/4) / (2w), 2w sin^2(w/4) / s(w), (2 sin(w/2) - w) / (2 s(w))
  const double e12 = 0.125 * tan_ratio * h;
  const double e21 = 0.125 * kernel::sinc(q) * kernel::sinc(q) * inv_s3 / h;
  const double e22 = -0.125 * kernel::sinc3(0.5 * w) * inv_s3;
  MaskTriple m;
  m.level = j;
  m.hm1 = Mat2{{0.5, -e12, e21, e22}};
  m.h0 = Mat2::identity();
  m.hp1 = Mat2{{0.5, e12, -e21, e22}};
  m.level_freq = fj;
  return m;
}

/// D^j M D^-j with D = diag(1, 1/2): removes the h_j scaling of the masks.
[[nodiscard]] inline Mat2 normalize_mask(const Mat2& m, int j) {
  return {{m(0, 0), std::ldexp(m(0, 1), j), std::ldexp(m(1, 0), -j), m(1, 1)}};
}

/// One dyadic refinement. Even outputs copy the input; odd outputs are the
/// midpoint value and derivative of the local Hermite interpolant.
/// Finite data of length L becomes 2L - 1 (first index doubles); periodic
/// data of period M becomes period 2M.
template <class V>
[[nodiscard]] HermiteData<V> refine_step(const HermiteData<V>& data, const MaskTriple& mask) {
  using Node = HermiteNode<V>;
  const std::size_t L = data.size();
  const bool periodic = data.is_periodic();
  if (!periodic && L < 2) throw std::length_error("refine_step needs at least two nodes");
  const std::size_t brackets = periodic ? L : L - 1;
  std::vector<Node> out;
  out.reserve(2 * brackets + (periodic ? 0 : 1));
  const long first = data.first_index();
  for (std::size_t k = 0; k < brackets; ++k) {
    const long n = first + static_cast<long>(k);
    const Node& left = data.at(n);
    const Node& right = data.at(n + 1);
    out.push_back(left);
    const auto l = mask.hp1.apply(left.value, left.slope);
    const auto r = mask.hm1.apply(right.value, right.slope);
    out.push_back({l[0] + r[0], l[1] + r[1]});
  }
  if (periodic) return HermiteData<V>::periodic(std::move(out));
  out.push_back(data.at(data.last_index()));
  return HermiteData<V>::finite(std::move(out), 2 * first);
}

/// Runs levels 0 .. J-1, producing a_J[n] = (s(n/2^J), s'(n/2^J)).
template <class V>
[[nodiscard]] HermiteData<V> subdivide(Frequency freq, HermiteData<V> data, int levels) {
  if (levels < 0) throw std::invalid_argument("number of levels must be >= 0");
  for (int j = 0; j < levels; ++j) data = refine_step(data, masks(freq, j));
  return data;
}

/// Two-scale mask H_{h -> h/m}[n] of the m-ary relation
/// phi^h(x) = sum_n H[n] phi^{h/m}(x - n h/m); rows are (phi_1^h, phi_2^h),
/// columns (value, derivative) at n h / m. The dyadic H_j[n] is its transpose.
[[nodiscard]] inline Mat2 refinement_mask_general(Frequency freq, double h, int m, int n) {
  if (m < 2) throw std::invalid_argument("refinement arity must be >= 2");
  if (std::abs(n) >= m) return Mat2::zero();
  const double x = static_cast<double>(n) * h / static_cast<double>(m);
  return {{phi_rescaled(freq, h, Generator::value, x),
           phi_rescaled_deriv(freq, h, Generator::value, x),
           phi_rescaled(freq, h, Generator::slope, x),
           phi_rescaled_deriv(freq, h, Generator::slope, x)}};
}

// -- Scalar (Bezier control point) form ------------------------------------

/// M_j: (f, d) -> (f - lambda_j h_j d, f + lambda_j h_j d), the two Bezier
/// handles around a node at level j, with lambda_j = lambda(w0 / 2^j).
[[nodiscard]] inline Mat2 conversion_matrix(Frequency freq, int j) {
  const double handle = bezier_lambda(level_frequency(freq, j)) * std::ldexp(1.0, -j);
  return {{1.0, -handle, 1.0, handle}};
}

template <class V>
[[nodiscard]] std::array<V, 2> scalar_conversion(Frequency freq, int j, const HermiteNode<V>& a) {
  return conversion_matrix(freq, j).apply(a.value, a.slope);
}

template <class V>
[[nodiscard]] HermiteNode<V> scalar_conversion_inverse(Frequency freq, int j,
                                                       const std::array<V, 2>& p) {
  const auto r = conversion_matrix(freq, j).inverse().apply(p[0], p[1]);
  return {r[0], r[1]};
}

/// Control points p_j[2n], p_j[2n+1] for every node n (block n).
template <class V>
struct ScalarControl {
  std::vector<V> points;
  int level = 0;
  Indexing indexing = Indexing::finite;
  long first_block = 0;

  [[nodiscard]] std::size_t blocks() const { return points.size() / 2; }
  [[nodiscard]] std::array<V, 2> block(long n) const {
    const long nb = static_cast<long>(blocks());
    long k = n - first_block;
    if (indexing == Indexing::periodic) {
      k = ((n % nb) + nb) % nb;
    } else if (k < 0 || k >= nb) {
      throw std::out_of_range("control block out of range");
    }
    const auto i = static_cast<std::size_t>(2 * k);
    return {points[i], points[i + 1]};
  }
};

template <class V>
[[nodiscard]] ScalarControl<V> to_scalar_control(Frequency freq, const HermiteData<V>& data,
                                                 int level) {
  ScalarControl<V> c;
  c.level = level;
  c.indexing = data.indexing();
  c.first_block = data.first_index();
  c.points.reserve(2 * data.size());
  const Mat2 M = conversion_matrix(freq, level);
  for (const auto& node : data.nodes()) {
    const auto p = M.apply(node.value, node.slope);
    c.points.push_back(p[0]);
    c.points.push_back(p[1]);
  }
  return c;
}

template <class V>
[[nodiscard]] HermiteData<V> from_scalar_control(Frequency freq, const ScalarControl<V>& c) {
  if (c.points.size() % 2 != 0) throw std::length_error("control points come in pairs");
  const Mat2 Minv = conversion_matrix(freq, c.level).inverse();
  std::vector<HermiteNode<V>> nodes;
  nodes.reserve(c.blocks());
  for (std::size_t k = 0; k < c.blocks(); ++k) {
    const auto a = Minv.apply(c.points[2 * k], c.points[2 * k + 1]);
    nodes.push_back({a[0], a[1]});
  }
  if (c.indexing == Indexing::periodic) return HermiteData<V>::periodic(std::move(nodes));
  return HermiteData<V>::finite(std::move(nodes), c.first_block);
}

/// Four scalar rules per node:
///   p_{j+1}[2n]   = M_{j+1} M_j^-1 p_j[n]
///   p_{j+1}[2n+1] = M_{j+1} H_j[1] M_j^-1 p_j[n] + M_{j+1} H_j[-1] M_j^-1 p_j[n+1]
/// (block indices). Old control points are discarded.
template <class V>
[[nodiscard]] ScalarControl<V> scalar_refine_step(const ScalarControl<V>& c, Frequency freq) {
  if (c.points.size() % 2 != 0) throw std::length_error("control points come in pairs");
  const std::size_t L = c.blocks();
  const bool periodic = c.indexing == Indexing::periodic;
  if (!periodic && L < 2) throw std::length_error("scalar_refine_step needs at least two blocks");

  const int j = c.level;
  const MaskTriple mask = masks(freq, j);
  const Mat2 Minv = conversion_matrix(freq, j).inverse();
  const Mat2 Mnext = conversion_matrix(freq, j + 1);
  const Mat2 keep = Mnext * Minv;
  const Mat2 from_left = Mnext * mask.hp1 * Minv;
  const Mat2 from_right = Mnext * mask.hm1 * Minv;

  ScalarControl<V> out;
  out.level = j + 1;
  out.indexing = c.indexing;
  out.first_block = 2 * c.first_block;
  const std::size_t brackets = periodic ? L : L - 1;
  out.points.reserve(4 * brackets + 2);
  for (std::size_t k = 0; k < brackets; ++k) {
    const long n = c.first_block + static_cast<long>(k);
    const auto left = c.block(n);
    const auto right = c.block(n + 1);
    const auto even = keep.apply(left[0], left[1]);
    const auto l = from_left.apply(left[0], left[1]);
    const auto r = from_right.apply(right[0], right[1]);
    out.points.push_back(even[0]);
    out.points.push_back(even[1]);
    out.points.push_back(l[0] + r[0]);
    out.points.push_back(l[1] + r[1]);
  }
  if (!periodic) {
    const auto last = c.block(c.first_block + static_cast<long>(L) - 1);
    const auto even = keep.apply(last[0], last[1]);
    out.points.push_back(even[0]);
    out.points.push_back(even[1]);
  }
  return out;
}

}  // namespace ehspline
