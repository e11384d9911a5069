#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "ehspline/basis.hpp"
#include "ehspline/bezier.hpp"
#include "ehspline/greens.hpp"

using namespace ehspline;
using BigR = boost::multiprecision::cpp_bin_float_50;
using BigC = boost::multiprecision::cpp_complex_50;

namespace {

// Real closed forms of b_0..b_3.
double bernstein_real_form(double omega, int ell, double x) {
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  const BigR w(omega), X(x);
  const BigR ws = w - sin(w);
  const BigR s = 2 * sin(w / 2) - w * cos(w / 2);
  const BigR sh = sin(w / 2);
  auto inner = [&](const BigR& y) {
    return sh / s - 2 * w * sh * sh * sh / (s * ws) * y + (1 / ws + cos(w / 2) / s) * sin(w * y) -
           sh / s * cos(w * y);
  };
  switch (ell) {
    case 0: return static_cast<double>(w / ws * (1 - X) - sin(w * (1 - X)) / ws);
    case 1: return static_cast<double>(inner(1 - X));
    case 2: return static_cast<double>(inner(X));
    default: return static_cast<double>(w / ws * X - sin(w * X) / ws);
  }
}

// r / (r - p) in 50-digit complex arithmetic.
BigC lambda_complex_big(double omega) {
  const BigR w(omega);
  const BigC i(0, 1);
  const BigC E = exp(i * w);
  const BigC r = 1 + 2 * i * w * E - E * E;
  const BigC p = E * E * (i * w - 1) + i * w + 1;
  return r / (r - p);
}

}  // namespace

TEST(Bernstein, EndpointConditions) {
  for (double w : {0.0, 0.01, 1.0, 3.0 * pi / 4.0, pi}) {
    const BernsteinBasis B = make_bernstein(Frequency(w));
    EXPECT_NEAR(bernstein(B, 0, 0.0), 1.0, 1e-14);
    EXPECT_NEAR(bernstein(B, 1, 0.0), 0.0, 1e-14);
    EXPECT_NEAR(bernstein(B, 2, 0.0), 0.0, 1e-14);
    EXPECT_NEAR(bernstein(B, 3, 0.0), 0.0, 1e-14);
    EXPECT_NEAR(bernstein(B, 0, 1.0), 0.0, 1e-14);
    EXPECT_NEAR(B.pieces[0].derivative(1, 1.0), 0.0, 1e-13);
    EXPECT_NEAR(B.pieces[0].derivative(2, 1.0), 0.0, 1e-12);
    EXPECT_NEAR(bernstein(B, 1, 1.0), 0.0, 1e-14);
    EXPECT_NEAR(B.pieces[1].derivative(1, 1.0), 0.0, 1e-13);
    EXPECT_NEAR(B.pieces[2].derivative(1, 0.0), 0.0, 1e-13);
    EXPECT_NEAR(B.pieces[3].derivative(1, 0.0), 0.0, 1e-13);
  }
}

TEST(Bernstein, MatchRealClosedForms) {
  for (double w : {0.05, 1.0, 2.0, 3.0 * pi / 4.0, pi}) {
    const Frequency f(w);
    for (int ell = 0; ell < 4; ++ell) {
      for (double x : {0.0, 0.2, 0.5, 0.85, 1.0}) {
        EXPECT_NEAR(bernstein(f, ell, x), bernstein_real_form(w, ell, x), 1e-13) << w << " " << ell;
      }
    }
  }
}

TEST(Bernstein, CubicBernsteinOnSmallPath) {
  const Frequency f(0.0);
  for (double x : {0.0, 0.3, 0.6, 1.0}) {
    const double u = 1 - x;
    EXPECT_NEAR(bernstein(f, 0, x), u * u * u, 1e-15);
    EXPECT_NEAR(bernstein(f, 1, x), 3 * x * u * u, 1e-15);
    EXPECT_NEAR(bernstein(f, 2, x), 3 * x * x * u, 1e-15);
    EXPECT_NEAR(bernstein(f, 3, x), x * x * x, 1e-15);
  }
}

TEST(Bernstein, PartitionSymmetryNonNegativity) {
  for (int k = 0; k <= 50; ++k) {
    const double w = k == 0 ? 0.0 : pi * k / 50.0;
    const BernsteinBasis B = make_bernstein(Frequency(w));
    for (int i = 0; i <= 400; ++i) {
      const double x = i / 400.0;
      double sum = 0.0;
      for (int ell = 0; ell < 4; ++ell) {
        const double v = bernstein(B, ell, x);
        sum += v;
        EXPECT_GE(v, -1e-12) << w << " " << ell << " " << x;
        EXPECT_NEAR(v, bernstein(B, 3 - ell, 1.0 - x), 1e-13);
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
  EXPECT_NEAR(bernstein(Frequency(3 * pi / 4), 1, 0.4), bernstein(Frequency(3 * pi / 4), 2, 0.6),
              1e-14);
}

TEST(Bernstein, DomainChecks) {
  EXPECT_THROW((void)bernstein(Frequency(1.0), 4, 0.5), std::invalid_argument);
  EXPECT_THROW((void)bernstein(Frequency(1.0), 0, 1.5), std::domain_error);
  EXPECT_THROW((void)bernstein(Frequency(1.0), 0, -0.1), std::domain_error);
}

TEST(Bernstein, EndpointDerivativeKappa) {
  for (double w : {0.3, 1.0, 2.0, pi}) {
    const BernsteinBasis B = make_bernstein(Frequency(w));
    const double expected = w * (std::cos(w) - 1) / (w - std::sin(w));
    const double h = 1e-6;
    const double fd = (-3 * bernstein(B, 0, 0) + 4 * bernstein(B, 0, h) - bernstein(B, 0, 2 * h)) /
                      (2 * h);
    EXPECT_NEAR(fd, expected, 1e-8);
    EXPECT_NEAR(B.kappa, expected, 1e-12);
    EXPECT_NEAR(B.pieces[1].derivative(1, 0.0), -expected, 1e-12);
  }
}

TEST(Lambda, LimitAndComplexForm) {
  EXPECT_NEAR(bezier_lambda(Frequency(1e-3)), 1.0 / 3.0, 1e-4);
  EXPECT_NEAR(bezier_lambda(Frequency(1e-2)), 1.0 / 3.0, 1e-3);
  EXPECT_EQ(bezier_lambda(Frequency(0.0)), 1.0 / 3.0);
  for (double w : {1e-3, 0.01, 0.5, 1.0, 2.0, 3.0 * pi / 4.0, pi}) {
    const BigC l = lambda_complex_big(w);
    EXPECT_LT(std::abs(static_cast<double>(l.imag())), 1e-13);
    EXPECT_NEAR(bezier_lambda(Frequency(w)), static_cast<double>(l.real()), 1e-14) << w;
  }
  // Double-precision complex route, where it is well conditioned.
  for (double w : {0.5, 1.0, 2.0, pi}) {
    const std::complex<double> i(0, 1);
    const std::complex<double> E = std::exp(i * w);
    const std::complex<double> r = 1.0 + 2.0 * i * w * E - E * E;
    const std::complex<double> p = E * E * (i * w - 1.0) + i * w + 1.0;
    const std::complex<double> l = r / (r - p);
    EXPECT_LT(std::abs(l.imag()), 1e-13);
    EXPECT_NEAR(l.real(), bezier_lambda(Frequency(w)), 1e-12);
  }
}

TEST(Lambda, GeneratorsInBernsteinForm) {
  // phi_1 = b0 + b1, phi_2 = lambda b1, phi_1(t-1) = b2 + b3, phi_2(t-1) = -lambda b2.
  for (double w : {0.0, 0.7, 2.0, pi}) {
    const Frequency f(w);
    const BernsteinBasis B = make_bernstein(f);
    for (double t : {0.0, 0.3, 0.5, 0.9}) {
      EXPECT_NEAR(phi(f, Generator::value, t), bernstein(B, 0, t) + bernstein(B, 1, t), 1e-13);
      EXPECT_NEAR(phi(f, Generator::slope, t), B.lambda * bernstein(B, 1, t), 1e-13);
      EXPECT_NEAR(phi(f, Generator::value, t - 1), bernstein(B, 2, t) + bernstein(B, 3, t), 1e-13);
      EXPECT_NEAR(phi(f, Generator::slope, t - 1), -B.lambda * bernstein(B, 2, t), 1e-13);
    }
  }
}

TEST(Lambda, BernsteinPiecesLieInE4) {
  // Delta_(0,0,w,-w) annihilates each piece extended as an E4 function.
  for (double w : {0.8, 2.0, pi}) {
    const BernsteinBasis B = make_bernstein(Frequency(w));
    const FrequencyList ops{0.0, 0.0, w, -w};
    for (int ell = 0; ell < 4; ++ell) {
      const auto& piece = B.pieces[static_cast<std::size_t>(ell)];
      EXPECT_LT(std::abs(annihilate(ops, [&](double x) { return piece(x); }, 0.7)), 1e-12);
    }
  }
}

TEST(Conversion, ConstantAndRoundTrip) {
  const Frequency f(3.0 * pi / 4.0);
  const auto seg = hermite_to_bezier(f, 1.0, HermiteSegment<double>{2.5, 0.0, 2.5, 0.0});
  for (double p : seg.p) EXPECT_EQ(p, 2.5);
  const auto back = bezier_to_hermite(BezierSegment<double>{{1.5, 1.5, 1.5, 1.5}, f}, 1.0);
  EXPECT_EQ(back.f0, 1.5);
  EXPECT_EQ(back.d0, 0.0);
  EXPECT_EQ(back.f1, 1.5);
  EXPECT_EQ(back.d1, 0.0);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  for (int k = 0; k < 100; ++k) {
    const HermiteSegment<double> h{U(rng), U(rng), U(rng), U(rng)};
    const auto r = bezier_to_hermite(hermite_to_bezier(f, 1.0, h), 1.0);
    EXPECT_NEAR(r.f0, h.f0, 1e-13);
    EXPECT_NEAR(r.d0, h.d0, 1e-13);
    EXPECT_NEAR(r.f1, h.f1, 1e-13);
    EXPECT_NEAR(r.d1, h.d1, 1e-13);
  }
}

TEST(Conversion, ReconstructionMatchesHermiteForm) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (double h : {1.0, 0.5, 0.125}) {
    const Frequency f(2.0);
    for (int k = 0; k < 20; ++k) {
      const HermiteSegment<double> s{U(rng), U(rng), U(rng), U(rng)};
      const auto seg = hermite_to_bezier(f, h, s);
      for (int i = 1; i <= 17; ++i) {
        const double u = i / 18.0;
        const double x = u * h;
        const double herm = s.f0 * phi_rescaled(f, h, Generator::value, x) +
                            s.d0 * phi_rescaled(f, h, Generator::slope, x) +
                            s.f1 * phi_rescaled(f, h, Generator::value, x - h) +
                            s.d1 * phi_rescaled(f, h, Generator::slope, x - h);
        EXPECT_NEAR(seg(u), herm, 1e-11);
      }
      // d/dx of the reconstructed segment at x = 0 equals d0.
      const double e = 1e-6;
      const double fd = (-3 * seg(0.0) + 4 * seg(e) - seg(2 * e)) / (2 * e * h);
      EXPECT_NEAR(fd, s.d0, 1e-6 * (1 + std::abs(s.d0)) / h);
    }
  }
}

TEST(Conversion, SmallFrequencyHandleIsOneThird) {
  const auto seg = hermite_to_bezier(Frequency(0.0), 1.0, HermiteSegment<double>{0.0, 3.0, 0.0, 0.0});
  EXPECT_NEAR(seg.p[1], 1.0, 1e-15);
  EXPECT_THROW((void)hermite_to_bezier(Frequency(3.0), 2.0, HermiteSegment<double>{}),
               std::domain_error);
}
