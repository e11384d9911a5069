// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ehspline/ehspline.hpp"
#include "ehspline/cli/verify.hpp"

using namespace ehspline;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Collects named residuals against their tolerances.
class Tally {
 public:
  void below(const std::string& what, double value, double tol) {
    const bool ok = std::isfinite(value) && value < tol;
    record(ok, what + "=" + sci(value) + " (<" + sci(tol) + ")");
  }
  void holds(const std::string& what, bool ok) { record(ok, what + (ok ? " ok" : " violated")); }
  [[nodiscard]] Outcome outcome() const { return {pass_, detail_}; }

 private:
  static std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
  }
  void record(bool ok, const std::string& text) {
    pass_ = pass_ && ok;
    if (!detail_.empty()) detail_ += "; ";
    detail_ += text;
  }
  bool pass_ = true;
  std::string detail_;
};

const std::vector<double> kHermiteOmegas{0.01, 0.5, 1.0, 3.0 * pi / 4.0, pi};

Outcome hermite_conditions() {
  double worst = 0.0;
  for (double w : kHermiteOmegas) {
    const GeneratorPair g = make_generators(Frequency(w));
    const double residuals[] = {
        g.phi(Generator::value, 0.0) - 1.0,  g.phi_deriv(Generator::value, 0.0),
        g.phi(Generator::slope, 0.0),        g.phi_deriv(Generator::slope, 0.0) - 1.0,
        g.phi(Generator::value, 1.0),        g.phi_deriv(Generator::value, 1.0),
        g.phi(Generator::slope, 1.0),        g.phi_deriv(Generator::slope, 1.0),
        g.phi(Generator::value, -1.0),       g.phi_deriv(Generator::value, -1.0),
        g.phi(Generator::slope, -1.0),       g.phi_deriv(Generator::slope, -1.0),
    };
    for (double r : residuals) worst = std::max(worst, std::abs(r));
  }
  Tally t;
  t.below("max residual", worst, 1e-12);
  return t.outcome();
}

Outcome partition_of_unity() {
  double pou = 0.0, lin = 0.0;
  for (double w : {0.0, 0.5, 3.0 * pi / 4.0, pi}) {
    const Frequency f(w);
    const auto ones = sample_hermite([](double) { return 1.0; }, [](double) { return 0.0; }, -1, 11);
    const auto line = sample_hermite([](double x) { return 3.0 * x - 2.0; }, [](double) { return 3.0; },
                                     -1, 11);
    const GeneratorPair g = make_generators(f);
    for (int i = 0; i < 10000; ++i) {
      const double x = 10.0 * i / 10000.0;
      pou = std::max(pou, std::abs(spline_eval(g, ones, x).value - 1.0));
      lin = std::max(lin, std::abs(spline_eval(g, line, x).value - (3.0 * x - 2.0)));
    }
  }
  Tally t;
  t.below("partition of unity", pou, 1e-12);
  t.below("affine data", lin, 1e-12);
  return t.outcome();
}

Outcome ellipse_reproduction() {
  const ClosedHermiteCurve c = unit_circle(8);
  double on_circle = 0.0;
  for (int i = 0; i < 10000; ++i) {
    on_circle = std::max(on_circle, std::abs(norm(c.eval(8.0 * i / 10000.0).value) - 1.0));
  }
  const auto refined = subdivide(c.frequency(), c.hermite_data(), 5);
  double sub = 0.0;
  for (const auto& n : refined.nodes()) sub = std::max(sub, std::abs(norm(n.value) - 1.0));
  Tally t;
  t.below("eval radius", on_circle, 1e-10);
  t.below("J=5 radius", sub, 1e-9);
  return t.outcome();
}

Outcome reproduction_identities() {
  double worst = 0.0;
  for (double w : {0.5, 1.0, 3.0 * pi / 4.0, pi}) {
    for (ReproductionTarget r : {ReproductionTarget::constant, ReproductionTarget::linear,
                                 ReproductionTarget::cosine, ReproductionTarget::sine}) {
      worst = std::max(worst, reproduction_check(Frequency(w), r));
    }
  }
  Tally t;
  t.below("sup error", worst, 1e-12);
  return t.outcome();
}

Outcome green_identities() {
  double r_err = 0.0, p_err = 0.0;
  for (double w : {0.01, 0.5, 1.0, 3.0 * pi / 4.0, pi}) {
    const Frequency f(w);
    for (int i = 0; i <= 1000; ++i) {
      const double x = -5.0 + 10.0 * i / 1000.0;
      for (Generator g : {Generator::value, Generator::slope}) {
        r_err = std::max(r_err, std::abs(rho_from_phi(f, g, x) - rho(f, g, x)));
        p_err = std::max(p_err, std::abs(phi_from_rho(f, g, x) - phi(f, g, x)));
      }
    }
  }
  Tally t;
  t.below("rho_from_phi", r_err, 1e-10);
  t.below("phi_from_rho", p_err, 1e-10);
  return t.outcome();
}

Outcome bspline_dual() {
  double agree = 0.0, pou = 0.0;
  bool support = true;
  for (double w : {0.3, 1.0, 3.0 * pi / 4.0, pi}) {
    const Frequency f(w);
    for (int order : {3, 4}) {
      for (int i = 0; i <= 2000; ++i) {
        const double x = -0.5 + (order + 1.0) * i / 2000.0;
        agree = std::max(agree, std::abs(bspline(f, order, x, BSplineMethod::green) -
                                         bspline(f, order, x, BSplineMethod::superfunction)));
      }
      for (BSplineMethod m : {BSplineMethod::green, BSplineMethod::superfunction}) {
        for (double x : {-1.0, -1e-9, static_cast<double>(order), order + 1e-9, order + 2.0}) {
          support = support && bspline(f, order, x, m) == 0.0;
        }
      }
    }
    for (int i = 0; i < 1000; ++i) {
      const double x = i / 1000.0;
      for (BSplineMethod m : {BSplineMethod::green, BSplineMethod::superfunction}) {
        double s = 0.0;
        for (int n = -4; n <= 1; ++n) s += bspline(f, 4, x - n, m);
        pou = std::max(pou, std::abs(s - 1.0));
      }
    }
  }
  Tally t;
  t.below("green vs superfunction", agree, 1e-10);
  t.below("B4 partition", pou, 1e-10);
  t.holds("support", support);
  return t.outcome();
}

Outcome gram_checks() {
  double quad = 0.0;
  for (double w : {0.5, 1.0, 3.0 * pi / 4.0, pi}) {
    const GramEntries c = gram_entries(Frequency(w));
    const GramEntries q = cli::gram_entries_by_quadrature(Frequency(w));
    for (double d : {c.a - q.a, c.b - q.b, c.c - q.c, c.d - q.d, c.e - q.e}) {
      quad = std::max(quad, std::abs(d));
    }
  }
  double lmin = INFINITY;
  for (double w : {0.01, 0.5, 1.0, 3.0 * pi / 4.0, pi}) {
    const GramEntries g = gram_entries(Frequency(w));
    for (int k = 0; k < 2048; ++k) {
      lmin = std::min(lmin, gram_matrix(g, pi * k / 2047.0).eigenvalues().first);
    }
  }
  bool monotone = true;
  double prev = lower_bound_G_at_zero();
  double gmin = prev;
  for (int i = 1; i <= 200; ++i) {
    const double G = lower_bound_G(Frequency(pi * i / 200.0));
    monotone = monotone && G >= prev - 1e-15;
    gmin = std::min(gmin, G);
    prev = G;
  }
  Tally t;
  t.below("closed form vs quadrature", quad, 1e-8);
  t.holds("lambda_min=" + std::to_string(lmin) + " > 0", lmin > 0.0);
  t.holds("G positive", gmin > 0.0);
  t.holds("G nondecreasing", monotone);
  return t.outcome();
}

HermiteData<double> random_nodes(std::mt19937_64& rng, std::size_t L) {
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  std::vector<HermiteNode<double>> nodes;
  for (std::size_t k = 0; k < L; ++k) nodes.push_back({U(rng), U(rng)});
  return HermiteData<double>::finite(std::move(nodes));
}

Outcome subdivision_exactness() {
  std::mt19937_64 rng(2024);
  double err = 0.0;
  for (double w : {0.5, 3.0 * pi / 4.0, pi}) {
    const Frequency f(w);
    const auto data = random_nodes(rng, 5);
    const auto a = subdivide(f, data, 6);
    for (long n = a.first_index(); n <= a.last_index(); ++n) {
      const auto d = spline_eval(f, data, std::ldexp(static_cast<double>(n), -6));
      err = std::max({err, std::abs(a.at(n).value - d.value), std::abs(a.at(n).slope - d.slope)});
    }
  }
  const Frequency f(3.0 * pi / 4.0);
  const double merrien =
      std::max(max_abs_diff(normalize_mask(masks(f, 16).hm1, 16), merrien_left_mask()),
               max_abs_diff(normalize_mask(masks(f, 16).hp1, 16), merrien_right_mask()));
  Tally t;
  t.below("J=6 vs spline_eval", err, 1e-10);
  t.below("Merrien j=16", merrien, 1e-3);
  return t.outcome();
}

Outcome commuting_square() {
  std::mt19937_64 rng(77);
  double err = 0.0;
  for (double w : {0.5, 2.0, pi}) {
    const Frequency f(w);
    for (int trial = 0; trial < 10; ++trial) {
      HermiteData<double> a = random_nodes(rng, 6);
      ScalarControl<double> c = to_scalar_control(f, a, 0);
      for (int j = 0; j < 3; ++j) {
        a = refine_step(a, masks(f, j));
        c = scalar_refine_step(c, f);
        const auto e = to_scalar_control(f, a, j + 1);
        for (std::size_t k = 0; k < e.points.size(); ++k) {
          err = std::max(err, std::abs(c.points[k] - e.points[k]));
        }
      }
    }
  }
  Tally t;
  t.below("max discrepancy", err, 1e-11);
  return t.outcome();
}

double interpolation_error(double h) {
  const Frequency f(1.0);
  const long N = std::lround(4.0 / h);
  const auto data = sample_hermite([](double x) { return std::sin(2 * x); },
                                   [](double x) { return 2 * std::cos(2 * x); }, 0, N, h);
  double err = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double x = 4.0 * i / 4000.0;
    err = std::max(err, std::abs(spline_eval_on_grid(f, h, data, x).value - std::sin(2 * x)));
  }
  return err;
}

Outcome fourth_order() {
  const double e4 = interpolation_error(0.25), e8 = interpolation_error(0.125),
               e16 = interpolation_error(0.0625);
  const double r1 = e4 / e8, r2 = e8 / e16;
  Tally t;
  t.holds("E(1/4)/E(1/8)=" + std::to_string(r1) + " in [12,20]", r1 >= 12.0 && r1 <= 20.0);
  t.holds("E(1/8)/E(1/16)=" + std::to_string(r2) + " in [12,20]", r2 >= 12.0 && r2 <= 20.0);
  return t.outcome();
}

Outcome bezier_limits() {
  double pou = 0.0, sym = 0.0, neg = 0.0;
  for (int k = 0; k <= 40; ++k) {
    const BernsteinBasis B = make_bernstein(Frequency(pi * k / 40.0));
    for (int i = 0; i <= 1000; ++i) {
      const double x = i / 1000.0;
      double s = 0.0;
      for (int ell = 0; ell < 4; ++ell) {
        const double v = bernstein(B, ell, x);
        s += v;
        sym = std::max(sym, std::abs(v - bernstein(B, 3 - ell, 1.0 - x)));
        neg = std::max(neg, -v);
      }
      pou = std::max(pou, std::abs(s - 1.0));
    }
  }
  Tally t;
  t.below("|lambda(1e-2)-1/3|", std::abs(bezier_lambda(Frequency(1e-2)) - 1.0 / 3.0), 1e-3);
  t.below("partition", pou, 1e-12);
  t.below("symmetry", sym, 1e-12);
  t.below("negativity", neg, 1e-12);
  return t.outcome();
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_golden() {
  const std::string cli = EHSPLINE_CLI_PATH;
  const fs::path data = EHSPLINE_DATA_DIR;
  const fs::path dir = fs::temp_directory_path() / ("ehspline_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  Tally t;
  for (const char* name : {"circle8", "cusp8"}) {
    const std::string in = (data / (std::string(name) + ".json")).string();
    const fs::path a = dir / (std::string(name) + "_a.svg"), b = dir / (std::string(name) + "_b.svg");
    const int ca = shell("'" + cli + "' render '" + in + "' -o '" + a.string() + "'");
    const int cb = shell("'" + cli + "' render '" + in + "' -o '" + b.string() + "'");
    const std::string sa = slurp(a);
    t.holds(std::string(name) + " byte-identical",
            ca == 0 && cb == 0 && !sa.empty() && sa == slurp(b));
  }
  const int v = shell("'" + cli + "' verify --suite all --omega0 3pi/4 > /dev/null");
  t.holds("verify all exit " + std::to_string(v), v == 0);
  fs::remove_all(dir);
  return t.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Hermite conditions", hermite_conditions},
      {"partition of unity and affine invariance", partition_of_unity},
      {"ellipse reproduction", ellipse_reproduction},
      {"reproduction identities", reproduction_identities},
      {"Green's-function identities", green_identities},
      {"B-spline dual construction", bspline_dual},
      {"Gram quadrature and stability", gram_checks},
      {"subdivision exactness", subdivision_exactness},
      {"vector/scalar commuting square", commuting_square},
      {"fourth-order approximation", fourth_order},
      {"Bezier limits and Bernstein properties", bezier_limits},
      {"CLI golden files", cli_golden},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d %-42s %s  [%s]\n", index++, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
