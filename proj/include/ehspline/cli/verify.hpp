#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ehspline/basis.hpp"
#include "ehspline/curve.hpp"
#include "ehspline/frequency.hpp"
#include "ehspline/gram.hpp"
#include "ehspline/subdivision.hpp"

namespace ehspline::cli {

/// One line of a verification report.
struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool upper = true;  // PASS iff value < threshold; otherwise iff value > threshold
  [[nodiscard]] bool pass() const {
    return std::isfinite(value) && (upper ? value < threshold : value > threshold);
  }
};

enum class Suite { riesz, reproduction, masks, gram, all };

/// Gram entries a..e by adaptive Gauss-Kronrod quadrature of the generators.
[[nodiscard]] inline GramEntries gram_entries_by_quadrature(Frequency freq) {
  using boost::math::quadrature::gauss_kronrod;
  const GeneratorPair gen = make_generators(freq);
  auto integrate = [](auto f, double lo, double hi) {
    return gauss_kronrod<double, 31>::integrate(f, lo, hi, 20, 1e-15);
  };
  auto p1 = [&](double x) { return gen.phi(Generator::value, x); };
  auto p2 = [&](double x) { return gen.phi(Generator::slope, x); };
  auto square = [&](auto f) {
    return integrate([&](double x) { return f(x) * f(x); }, -1.0, 0.0) +
           integrate([&](double x) { return f(x) * f(x); }, 0.0, 1.0);
  };
  GramEntries g;
  g.a = integrate([&](double x) { return p1(x) * p1(x - 1.0); }, 0.0, 1.0);
  g.b = square(p1);
  g.c = integrate([&](double x) { return p1(x) * p2(x - 1.0); }, 0.0, 1.0);
  g.d = integrate([&](double x) { return p2(x) * p2(x - 1.0); }, 0.0, 1.0);
  g.e = square(p2);
  return g;
}

[[nodiscard]] inline std::vector<Check> riesz_checks(Frequency freq) {
  const RieszBounds rb = riesz_bounds(freq);
  return {{"riesz.lambda_min", rb.min_lambda, 0.0, false},
          {"riesz.alpha", rb.alpha, 0.0, false},
          {"riesz.G_lower_bound", lower_bound_G(freq), 0.0, false}};
}

[[nodiscard]] inline std::vector<Check> reproduction_checks(Frequency freq) {
  const double trig = std::max(reproduction_check(freq, ReproductionTarget::cosine),
                               reproduction_check(freq, ReproductionTarget::sine));
  return {{"reproduction.constant", reproduction_check(freq, ReproductionTarget::constant), 1e-12},
          {"reproduction.linear", reproduction_check(freq, ReproductionTarget::linear), 1e-12},
          {"reproduction.trigonometric", trig, 1e-12}};
}

[[nodiscard]] inline std::vector<Check> mask_checks(Frequency freq) {
  constexpr int j = 16;
  const MaskTriple m = masks(freq, j);
  const double dev = std::max(max_abs_diff(normalize_mask(m.hm1, j), merrien_left_mask()),
                              max_abs_diff(normalize_mask(m.hp1, j), merrien_right_mask()));
  // Masks at levels 0 and 3 against two-scale coefficients sampled from the generators.
  double two_scale = 0.0;
  for (int level : {0, 3}) {
    const MaskTriple mj = masks(freq, level);
    const double h = std::ldexp(1.0, -level);
    two_scale = std::max(
        {two_scale, max_abs_diff(mj.hp1, refinement_mask_general(freq, h, 2, 1).transposed()),
         max_abs_diff(mj.hm1, refinement_mask_general(freq, h, 2, -1).transposed())});
  }
  return {{"masks.merrien_limit_j16", dev, 1e-3},
          {"masks.two_scale_consistency", two_scale, 1e-12}};
}

[[nodiscard]] inline std::vector<Check> gram_checks(Frequency freq) {
  const GramEntries closed = gram_entries(freq);
  const GramEntries quad = gram_entries_by_quadrature(freq);
  const double dev = std::max({std::abs(closed.a - quad.a), std::abs(closed.b - quad.b),
                               std::abs(closed.c - quad.c), std::abs(closed.d - quad.d),
                               std::abs(closed.e - quad.e)});
  return {{"gram.closed_form_vs_quadrature", dev, 1e-8},
          {"gram.det_min", riesz_bounds(freq).min_det, 0.0, false}};
}

[[nodiscard]] inline std::vector<Check> run_suite(Suite suite, Frequency freq) {
  std::vector<Check> out;
  auto add = [&](const std::vector<Check>& c) { out.insert(out.end(), c.begin(), c.end()); };
  if (suite == Suite::riesz || suite == Suite::all) add(riesz_checks(freq));
  if (suite == Suite::reproduction || suite == Suite::all) add(reproduction_checks(freq));
  if (suite == Suite::masks || suite == Suite::all) add(mask_checks(freq));
  if (suite == Suite::gram || suite == Suite::all) add(gram_checks(freq));
  return out;
}

/// Prints one line per check; returns true iff all pass.
inline bool print_report(std::ostream& os, const std::vector<Check>& checks) {
  bool ok = true;
  for (const Check& c : checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%-32s value=%.6e threshold=%s%.1e %s\n", c.name.c_str(),
                  c.value, c.upper ? "<" : ">", c.threshold, c.pass() ? "PASS" : "FAIL");
    os << line;
    ok = ok && c.pass();
  }
  return ok;
}

}  // namespace ehspline::cli
