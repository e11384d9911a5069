#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "ehspline/basis.hpp"
#include "ehspline/frequency.hpp"
#include "ehspline/numeric.hpp"

namespace ehspline {

/// Annihilation frequencies (w_0, ..., w_m), each in [-pi, pi]. Repeats are allowed.
class FrequencyList {
 public:
  FrequencyList() = default;
  FrequencyList(std::initializer_list<double> freqs) : FrequencyList(std::vector<double>(freqs)) {}
  explicit FrequencyList(std::vector<double> freqs) : freqs_(std::move(freqs)) {
    for (double w : freqs_) {
      if (!std::isfinite(w) || std::abs(w) > pi * (1.0 + 4e-16)) {
        throw std::domain_error("annihilation frequency outside [-pi, pi]");
      }
    }
  }

  [[nodiscard]] const std::vector<double>& values() const { return freqs_; }
  [[nodiscard]] std::size_t size() const { return freqs_.size(); }

 private:
  std::vector<double> freqs_;
};

/// Taps t_k of the composed operator: Delta f(x) = sum_k t_k f(x - k).
///
/// Delta_{w} f(x) = f(x) - e^{i w} f(x - 1); the factors commute, so the
/// composition is the polynomial product of (1 - e^{i w_k} z).
[[nodiscard]] inline std::vector<std::complex<double>> annihilation_taps(
    const FrequencyList& freqs) {
  std::vector<std::complex<double>> taps{1.0};
  for (double w : freqs.values()) {
    const std::complex<double> root = std::polar(1.0, w);
    std::vector<std::complex<double>> next(taps.size() + 1, 0.0);
    for (std::size_t k = 0; k < taps.size(); ++k) {
      next[k] += taps[k];
      next[k + 1] -= root * taps[k];
    }
    taps = std::move(next);
  }
  return taps;
}

/// Applies Delta_{(w_0..w_m)} to an arbitrary callable (real- or complex-valued).
template <class F>
[[nodiscard]] std::complex<double> annihilate(const FrequencyList& freqs, F&& f, double x) {
  const auto taps = annihilation_taps(freqs);
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < taps.size(); ++k) {
    sum += taps[k] * std::complex<double>(f(x - static_cast<double>(k)));
  }
  return sum;
}

/// Real part of annihilate(); throws std::logic_error if the imaginary part
/// is not negligible, which happens only for non-symmetric frequency lists.
template <class F>
[[nodiscard]] double annihilate_real(const FrequencyList& freqs, F&& f, double x) {
  const auto taps = annihilation_taps(freqs);
  std::complex<double> sum = 0.0;
  double scale = 1.0;
  for (std::size_t k = 0; k < taps.size(); ++k) {
    const std::complex<double> term = taps[k] * std::complex<double>(f(x - static_cast<double>(k)));
    sum += term;
    scale = std::fmax(scale, std::abs(term));
  }
  if (std::abs(sum.imag()) > 1e-12 * scale) {
    throw std::logic_error("annihilate_real: result is not real");
  }
  return sum.real();
}

[[nodiscard]] inline double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

/// Green's functions rho_1 = (w x - sin w x) sgn(x) / (2 w^3) and
/// rho_2 = rho_1' = (1 - cos w x) sgn(x) / (2 w^2).
/// On the small path these are |x|^3 / 12 and x |x| / 4.
[[nodiscard]] inline double rho(Frequency freq, Generator which, double x) {
  const double w = freq.effective();
  const double ax = std::abs(x);
  if (which == Generator::value) return 0.5 * ax * ax * ax * kernel::sinc3(w * ax);
  return 0.5 * x * ax * kernel::versinc(w * ax);
}

/// rho_1' = rho_2 and rho_2' = sin(w x) sgn(x) / (2 w).
[[nodiscard]] inline double rho_deriv(Frequency freq, Generator which, double x) {
  if (which == Generator::value) return rho(freq, Generator::slope, x);
  const double ax = std::abs(x);
  return 0.5 * ax * kernel::sinc(freq.effective() * ax);
}

enum class BSplineMethod { green, superfunction };

struct SuperfunctionCoefficients {
  double gamma[3];
  double mu[3];
};

/// Weights of the phi-shift expansions of B_{4} (shifts 1..3) and B_{3} (shifts 1..2).
[[nodiscard]] inline SuperfunctionCoefficients superfunction_coefficients(Frequency freq,
                                                                          int order) {
  const double w = freq.effective();
  if (order == 4) {
    // (w - sin w) / (4 w sin^2(w/2))
    const double g1 = kernel::sinc3(w) / (2.0 * kernel::versinc(w));
    return {{g1, 1.0 - 2.0 * g1, g1}, {0.5, 0.0, -0.5}};
  }
  if (order == 3) {
    // (w/2) cot(w/2) = cos(w/2) / sinc(w/2)
    const double m1 = std::cos(0.5 * w) / kernel::sinc(0.5 * w);
    return {{0.5, 0.5, 0.0}, {m1, -m1, 0.0}};
  }
  throw std::invalid_argument("exponential B-spline order must be 3 or 4");
}

/// Normalized exponential B-spline of order 4 (support [0,4]) or 3 (support [0,3]).
[[nodiscard]] inline double bspline(Frequency freq, int order, double x, BSplineMethod method) {
  if (order != 3 && order != 4) {
    throw std::invalid_argument("exponential B-spline order must be 3 or 4");
  }
  if (x <= 0.0 || x >= static_cast<double>(order)) return 0.0;
  const double w = freq.effective();
  if (method == BSplineMethod::green) {
    // (w / (2 sin(w/2)))^2
    const double norm = 1.0 / (kernel::sinc(0.5 * w) * kernel::sinc(0.5 * w));
    if (order == 4) {
      const FrequencyList ops{0.0, 0.0, w, -w};
      return norm * annihilate_real(ops, [&](double y) { return rho(freq, Generator::value, y); }, x);
    }
    const FrequencyList ops{0.0, w, -w};
    return norm * annihilate_real(ops, [&](double y) { return rho(freq, Generator::slope, y); }, x);
  }
  const GeneratorPair gen = make_generators(freq);
  const SuperfunctionCoefficients c = superfunction_coefficients(freq, order);
  double sum = 0.0;
  for (int k = 0; k < order - 1; ++k) {
    const double shift = static_cast<double>(k + 1);
    sum += c.gamma[k] * gen.phi(Generator::value, x - shift) +
           c.mu[k] * gen.phi(Generator::slope, x - shift);
  }
  return sum;
}

/// rho_{which} expanded in the Hermite basis: the coefficients are the
/// samples rho(n), rho'(n). Only the two active shifts are summed.
[[nodiscard]] inline double rho_from_phi(Frequency freq, Generator which, double x) {
  const GeneratorPair gen = make_generators(freq);
  const double fl = std::floor(x);
  double sum = 0.0;
  for (double n : {fl, fl + 1.0}) {
    sum += rho(freq, which, n) * gen.phi(Generator::value, x - n) +
           rho_deriv(freq, which, n) * gen.phi(Generator::slope, x - n);
  }
  return sum;
}

/// Weights of the localisation stencils phi = sum_k w_k rho_1(x + k) + v_k rho_2(x + k),
/// k in {-1, 0, 1}. Indexed [k + 1].
struct LocalisationStencil {
  double on_rho1[3];
  double on_rho2[3];
};

/// Stencils taken from the Fourier-domain relation phi-hat = R-hat rho-hat:
///
///   phi_1 = w^2/s ( sin(w/2) D rho_2 - w cos(w/2) Delta_(0,0) rho_1(.+1) )
///   phi_2 = w/s ( w sin(w/2) D rho_1 - w/(2 sin(w/2)) Delta_(w,-w) rho_2(.+1)
///                 + cos(w/2) Delta_(0,0) rho_2(.+1) )
///
/// with D f = Delta_(0,pi) f(.+1) = f(.+1) - f(.-1). The weights are evaluated
/// in cancellation-free form; the two rho_2 stencils of phi_2 are merged.
[[nodiscard]] inline LocalisationStencil localisation_stencil(Frequency freq, Generator which) {
  const double w = freq.effective();
  const double inv_s3 = 1.0 / kernel::s3(w);
  const double half_sinc = 0.5 * kernel::sinc(0.5 * w);
  if (which == Generator::value) {
    const double c = std::cos(0.5 * w) * inv_s3;
    const double d = half_sinc * inv_s3;
    return {{-c, 2.0 * c, -c}, {-d, 0.0, d}};
  }
  const double d = half_sinc * inv_s3;
  const double q = inv_s3 / kernel::sinc(0.5 * w);
  // (w cos w - sin w) / w^3 and (w - sin w) / w^3
  const double k = kernel::sinc3(w) - kernel::versinc(w);
  const double outer = -q * kernel::sinc3(w);
  return {{-d, 0.0, d}, {outer, 2.0 * q * k, outer}};
}

/// phi_{which}(x) rebuilt from the Green's functions; vanishes for |x| >= 1
/// through cancellation alone.
[[nodiscard]] inline double phi_from_rho(Frequency freq, Generator which, double x) {
  const LocalisationStencil st = localisation_stencil(freq, which);
  double sum = 0.0;
  for (int k = -1; k <= 1; ++k) {
    const double y = x + static_cast<double>(k);
    sum += st.on_rho1[k + 1] * rho(freq, Generator::value, y) +
           st.on_rho2[k + 1] * rho(freq, Generator::slope, y);
  }
  return sum;
}

}  // namespace ehspline
