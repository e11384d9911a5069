#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ehspline/cli/commands.hpp"
#include "ehspline/cli/omega.hpp"

namespace cli = ehspline::cli;

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Ellipse-preserving exponential Hermite splines"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ehspline 1.0");

  std::string omega_text;
  std::vector<double> range{-1.0, 1.0};
  cli::BasisOptions basis;
  auto* b = app.add_subcommand("basis", "Sample a Hermite generator (CSV x,value)");
  b->add_option("--omega0", omega_text, "Design frequency, number or <p>pi/<q>")->required();
  b->add_option("--which", basis.which, "Generator 1 (value) or 2 (slope)")
      ->check(CLI::IsMember({1, 2}));
  b->add_flag("--deriv", basis.deriv, "Sample the first derivative");
  b->add_option("--range", range, "Sample interval lo hi")->expected(2)->allow_extra_args(false);
  b->add_option("--samples", basis.samples, "Number of samples (>= 2)");
  std::string basis_out;
  b->add_option("-o,--out", basis_out, "Output file (default stdout)");

  cli::SubdivideOptions sub;
  std::string scheme = "vector";
  std::string sub_out;
  auto* s = app.add_subcommand("subdivide", "Refine a curve document");
  s->add_option("input", sub.input, "Curve document (JSON)")->required();
  s->add_option("--levels,-J", sub.levels, "Number of dyadic levels")
      ->check(CLI::Range(0, cli::kMaxLevels));
  s->add_option("--scheme", scheme, "vector or scalar")
      ->check(CLI::IsMember({"vector", "scalar"}));
  s->add_option("-o,--out", sub_out, "Output file (default stdout)");

  cli::RenderCommandOptions ren;
  auto* r = app.add_subcommand("render", "Render a curve document to SVG");
  r->add_option("input", ren.input, "Curve document (JSON)")->required();
  r->add_option("--samples-per-span", ren.render.samples_per_span, "Samples per parameter unit")
      ->check(CLI::Range(1, 100000));
  r->add_option("-o,--out", ren.out, "SVG output path")->required();
  r->add_flag("--handles", ren.render.handles, "Draw node markers and tangent handles");

  std::string suite = "all";
  auto* v = app.add_subcommand("verify", "Run numerical self-checks");
  v->add_option("--suite", suite, "riesz, reproduction, masks, gram or all")
      ->check(CLI::IsMember({"riesz", "reproduction", "masks", "gram", "all"}));
  v->add_option("--omega0", omega_text, "Design frequency, number or <p>pi/<q>")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kBadFlags;
  }

  auto emit = [](const std::string& path, const std::string& text) {
    if (path.empty()) {
      std::cout << text;
    } else {
      cli::write_file(path, text);
    }
  };

  if (b->parsed()) {
    basis.omega0 = cli::parse_omega(omega_text);
    basis.lo = range[0];
    basis.hi = range[1];
    std::ostringstream os;
    cli::cmd_basis(basis, os);
    emit(basis_out, os.str());
    return cli::kOk;
  }
  if (s->parsed()) {
    sub.scheme = scheme == "scalar" ? cli::Scheme::scalar : cli::Scheme::vector;
    std::ostringstream os;
    cli::cmd_subdivide(sub, os);
    emit(sub_out, os.str());
    return cli::kOk;
  }
  if (r->parsed()) {
    cli::cmd_render(ren);
    return cli::kOk;
  }
  static const std::map<std::string, cli::Suite> suites{{"riesz", cli::Suite::riesz},
                                                        {"reproduction", cli::Suite::reproduction},
                                                        {"masks", cli::Suite::masks},
                                                        {"gram", cli::Suite::gram},
                                                        {"all", cli::Suite::all}};
  cli::VerifyOptions vo;
  vo.suite = suites.at(suite);
  vo.omega0 = cli::parse_omega(omega_text);
  return cli::cmd_verify(vo, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kBadFlags;
  } catch (const cli::DocumentError& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return cli::kMalformedInput;
  } catch (const cli::OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUnwritableOutput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: domain: " << e.what() << "\n";
    return cli::kDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kBadFlags;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kDomainError;
  }
}
