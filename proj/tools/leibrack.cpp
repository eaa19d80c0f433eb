#include "leibrack/corpus.hpp"
#include "leibrack/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
  CLI::App app{"Integrate a Leibniz algebra into its local augmented Lie rack"};
  app.require_subcommand(1);

  std::size_t quad_order = 8;
  double chart_radius = 0.5;
  double fd_step = 1e-3;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  bool json = false;
  app.add_option("--quad-order", quad_order, "Gauss-Legendre order")->capture_default_str();
  app.add_option("--chart-radius", chart_radius, "radius of the local chart around 1")->capture_default_str();
  app.add_option("--fd-step", fd_step, "finite-difference step")->capture_default_str();
  app.add_option("--samples", samples, "random sample points")->capture_default_str();
  app.add_option("--seed", seed, "sampling seed")->capture_default_str();
  app.add_flag("--json", json, "machine-readable report on stdout");

  std::string path;
  auto *verify = app.add_subcommand("verify", "exact checks: Leibniz identity, is_lie, center, squares ideal");
  verify->add_option("file", path, "algebra file")->required();
  verify->fallthrough();
  auto *analyze = app.add_subcommand("analyze", "central extension data and the exact cocycle check");
  analyze->add_option("file", path, "algebra file")->required();
  analyze->fallthrough();
  auto *integrate = app.add_subcommand("integrate", "build the local rack and run the invariant suite");
  integrate->add_option("file", path, "algebra file")->required();
  integrate->fallthrough();
  std::string name;
  auto *example = app.add_subcommand("example", "run a built-in algebra end to end");
  example->add_option("name", name, "built-in name")->required()->check(CLI::IsMember(leibrack::builtin_names()));
  example->fallthrough();

  CLI11_PARSE(app, argc, argv);

  leibrack::SuiteConfig cfg;
  cfg.chart_radius = chart_radius;
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.integrator.fd_step = fd_step;

  leibrack::CommandResult result;
  try {
    cfg.integrator.quad = leibrack::QuadratureRule(quad_order);
    if (*verify)
      result = leibrack::cmd_verify(path);
    else if (*analyze)
      result = leibrack::cmd_analyze(path);
    else if (*integrate)
      result = leibrack::cmd_integrate(path, cfg);
    else
      result = leibrack::cmd_example(name, cfg);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (json)
    std::cout << result.report.dump(2) << "\n";
  else
    std::cout << leibrack::render_text(result.report);
  return result.exit_code;
}
