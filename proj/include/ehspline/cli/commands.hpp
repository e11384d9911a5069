#pragma once

#include <cstddef>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "ehspline/basis.hpp"
#include "ehspline/cli/document.hpp"
#include "ehspline/cli/errors.hpp"
#include "ehspline/cli/svg.hpp"
#include "ehspline/cli/verify.hpp"
#include "ehspline/curve.hpp"
#include "ehspline/frequency.hpp"
#include "ehspline/subdivision.hpp"

namespace ehspline::cli {

inline constexpr int kMaxLevels = 20;

struct BasisOptions {
  double omega0 = 0.0;
  int which = 1;
  bool deriv = false;
  double lo = -1.0;
  double hi = 1.0;
  int samples = 201;
};

/// CSV "x,value" of phi_which or its derivative at uniform samples of [lo, hi].
inline void cmd_basis(const BasisOptions& o, std::ostream& os) {
  if (o.samples < 2) throw UsageError("--samples must be >= 2");
  if (!(o.lo < o.hi)) throw UsageError("--range needs lo < hi");
  const Frequency freq(o.omega0);
  const GeneratorPair gen = make_generators(freq);
  const Generator g = generator_from_index(o.which);
  os << "x,value\n";
  char line[96];
  for (int i = 0; i < o.samples; ++i) {
    const double x = i + 1 == o.samples
                         ? o.hi
                         : o.lo + (o.hi - o.lo) * static_cast<double>(i) /
                                      static_cast<double>(o.samples - 1);
    const double v = o.deriv ? gen.phi_deriv(g, x) : gen.phi(g, x);
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", x, v);
    os << line;
  }
}

enum class Scheme { vector, scalar };

struct SubdivideOptions {
  std::string input;
  int levels = 1;
  Scheme scheme = Scheme::vector;
};

/// Vector scheme: a CurveDocument of period M 2^J. Its parameter is 2^J t, so
/// derivatives are scaled by 2^-J and the implied w0 = 2 pi / (M 2^J) is consistent.
/// Scalar scheme: the 2 M 2^J Bezier control points of level J.
[[nodiscard]] inline Json subdivide_document(const CurveDocument& doc, int levels, Scheme scheme) {
  if (levels < 0 || levels > kMaxLevels) {
    throw UsageError("--levels must be in [0, " + std::to_string(kMaxLevels) + "]");
  }
  const ClosedHermiteCurve curve = doc.curve();
  const Frequency freq = curve.frequency();
  if (scheme == Scheme::vector) {
    const HermiteData<Vec2> refined = subdivide(freq, curve.hermite_data(), levels);
    CurveDocument out;
    out.M = refined.size();
    const double scale = std::ldexp(1.0, -levels);
    for (const auto& node : refined.nodes()) {
      out.points.push_back(node.value);
      out.tangents.push_back(scale * node.slope);
    }
    return document_to_json(out);
  }
  ScalarControl<Vec2> c = to_scalar_control(freq, curve.hermite_data(), 0);
  for (int j = 0; j < levels; ++j) c = scalar_refine_step(c, freq);
  Json j;
  j["version"] = kDocumentVersion;
  j["scheme"] = "scalar";
  j["M"] = doc.M;
  j["levels"] = levels;
  j["control_points"] = detail::pairs_to_json(c.points);
  return j;
}

inline void cmd_subdivide(const SubdivideOptions& o, std::ostream& os) {
  os << dump_json(subdivide_document(read_document(o.input), o.levels, o.scheme));
}

struct RenderCommandOptions {
  std::string input;
  std::string out;
  RenderOptions render;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw OutputError("cannot open '" + path + "' for writing");
  f << content;
  f.flush();
  if (!f) throw OutputError("failed writing '" + path + "'");
}

inline void cmd_render(const RenderCommandOptions& o) {
  if (o.render.samples_per_span < 1) throw UsageError("--samples-per-span must be >= 1");
  const ClosedHermiteCurve curve = read_document(o.input).curve();
  write_file(o.out, render_svg(curve, o.render));
}

struct VerifyOptions {
  Suite suite = Suite::all;
  double omega0 = 0.0;
};

/// Returns kOk iff every check passes, else kCheckFailed.
[[nodiscard]] inline int cmd_verify(const VerifyOptions& o, std::ostream& os) {
  const Frequency freq(o.omega0);
  return print_report(os, run_suite(o.suite, freq)) ? kOk : kCheckFailed;
}

}  // namespace ehspline::cli
