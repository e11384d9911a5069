#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include "ehspline/basis.hpp"
#include "ehspline/bezier.hpp"
#include "ehspline/curve.hpp"
#include "ehspline/numeric.hpp"

namespace ehspline::cli {

inline constexpr double kViewport = 1000.0;
inline constexpr double kMargin = 0.05;

struct RenderOptions {
  int samples_per_span = 32;
  bool handles = false;
};

/// Bezier handle endpoints p[2n] = r(n) - lambda r'(n), p[2n+1] = r(n) + lambda r'(n).
[[nodiscard]] inline std::vector<Vec2> handle_points(const ClosedHermiteCurve& c) {
  const double lambda = bezier_lambda(c.frequency());
  std::vector<Vec2> out;
  out.reserve(2 * c.period());
  for (std::size_t n = 0; n < c.period(); ++n) {
    out.push_back(c.points()[n] - lambda * c.tangents()[n]);
    out.push_back(c.points()[n] + lambda * c.tangents()[n]);
  }
  return out;
}

namespace detail {

/// Fixed three-decimal formatting; negative zero prints as 0.000.
inline std::string fmt3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

struct ViewTransform {
  double scale = 1.0;
  double cx = 0.0;
  double cy = 0.0;

  [[nodiscard]] std::string xy(Vec2 p) const {
    const double x = 0.5 * kViewport + scale * (p.x - cx);
    const double y = 0.5 * kViewport - scale * (p.y - cy);
    return fmt3(x) + " " + fmt3(y);
  }
};

inline ViewTransform fit(const std::vector<Vec2>& pts) {
  double xlo = pts.front().x, xhi = xlo, ylo = pts.front().y, yhi = ylo;
  for (const Vec2& p : pts) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  const double extent = std::max(xhi - xlo, yhi - ylo);
  ViewTransform t;
  t.scale = extent > 0.0 ? (1.0 - 2.0 * kMargin) * kViewport / extent : 1.0;
  t.cx = 0.5 * (xlo + xhi);
  t.cy = 0.5 * (ylo + yhi);
  return t;
}

}  // namespace detail

/// SVG 1.1 document: one closed path for the curve, plus optional cross markers
/// at the nodes and the tangent handle segments. The y axis points up.
[[nodiscard]] inline std::string render_svg(const ClosedHermiteCurve& c, const RenderOptions& opt) {
  const std::size_t M = c.period();
  const auto S = static_cast<std::size_t>(opt.samples_per_span);
  const GeneratorPair gen = make_generators(c.frequency());
  std::vector<Vec2> samples;
  samples.reserve(M * S);
  for (std::size_t n = 0; n < M; ++n) {
    for (std::size_t k = 0; k < S; ++k) {
      const double t = static_cast<double>(n) + static_cast<double>(k) / static_cast<double>(S);
      samples.push_back(k == 0 ? c.points()[n] : c.eval(gen, t).value);
    }
  }
  const std::vector<Vec2> handles = opt.handles ? handle_points(c) : std::vector<Vec2>{};
  std::vector<Vec2> extent_pts = samples;
  extent_pts.insert(extent_pts.end(), handles.begin(), handles.end());
  const detail::ViewTransform view = detail::fit(extent_pts);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
      "viewBox=\"0 0 1000 1000\">\n";
  svg += "<path class=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" d=\"M ";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i > 0) svg += " L ";
    svg += view.xy(samples[i]);
  }
  svg += " Z\"/>\n";
  if (opt.handles) {
    const double arm = 6.0 / view.scale;
    for (std::size_t n = 0; n < M; ++n) {
      const Vec2 p = c.points()[n];
      svg += "<path class=\"marker\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\" d=\"M " +
             view.xy({p.x - arm, p.y - arm}) + " L " + view.xy({p.x + arm, p.y + arm}) + " M " +
             view.xy({p.x - arm, p.y + arm}) + " L " + view.xy({p.x + arm, p.y - arm}) + "\"/>\n";
    }
    for (std::size_t n = 0; n < M; ++n) {
      const Vec2 a = handles[2 * n], b = handles[2 * n + 1];
      const std::string pa = view.xy(a), pb = view.xy(b);
      const auto sp1 = pa.find(' '), sp2 = pb.find(' ');
      svg += "<line class=\"handle\" stroke=\"blue\" stroke-width=\"1\" x1=\"" + pa.substr(0, sp1) +
             "\" y1=\"" + pa.substr(sp1 + 1) + "\" x2=\"" + pb.substr(0, sp2) + "\" y2=\"" +
             pb.substr(sp2 + 1) + "\"/>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace ehspline::cli
