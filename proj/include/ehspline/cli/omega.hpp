#pragma once

#include <charconv>
#include <cmath>
#include <regex>
#include <string>
#include <system_error>

#include "ehspline/cli/errors.hpp"
#include "ehspline/numeric.hpp"

namespace ehspline::cli {

namespace detail {

inline bool parse_plain_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

}  // namespace detail

/// Parses "2.356", "pi", "pi/2", "3pi/4", "-0.5pi", "1.5pi/2". Range is not
/// checked here; Frequency does that.
[[nodiscard]] inline double parse_omega(const std::string& text) {
  double v = 0.0;
  if (detail::parse_plain_double(text, v)) {
    if (!std::isfinite(v)) throw UsageError("omega0 must be finite: '" + text + "'");
    return v;
  }
  static const std::regex literal(R"(^([+-]?)([0-9]*\.?[0-9]*)\*?pi(?:/([0-9]*\.?[0-9]+))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, literal)) {
    throw UsageError("cannot parse omega0 '" + text + "' (expected a number or <p>pi/<q>)");
  }
  double p = 1.0, q = 1.0;
  if (m[2].length() > 0 && !detail::parse_plain_double(m[2].str(), p)) {
    throw UsageError("bad numerator in omega0 '" + text + "'");
  }
  if (m[3].matched && !detail::parse_plain_double(m[3].str(), q)) {
    throw UsageError("bad denominator in omega0 '" + text + "'");
  }
  if (q == 0.0) throw UsageError("zero denominator in omega0 '" + text + "'");
  const double sign = m[1].str() == "-" ? -1.0 : 1.0;
  return sign * p * pi / q;
}

}  // namespace ehspline::cli
