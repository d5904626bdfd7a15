#include "k3lat/commands.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/report.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitConfig = 65;
constexpr int kExitInternal = 70;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact-arithmetic toolkit for a rank-2 even hyperbolic surface "
      "lattice and the induced geometry of its Hilbert square"};
  app.require_subcommand(1);

  std::string config_path;
  bool json_out = false;
  int degree_max = 0;  // 0 = use the config value
  int orbit = 0;       // 0 = use the config value
  int power = 1;
  unsigned long seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "path to a JSON config file")
        ->required();
    sub->add_flag("--json", json_out, "emit the JSON report instead of text");
    return sub;
  };
  auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--degree-max", degree_max,
                    "override the -2 class search budget")
        ->check(CLI::PositiveNumber);
    return sub;
  };
  auto add_orbit = [&](CLI::App* sub) {
    sub->add_option("--orbit", orbit, "override the orbit length")
        ->check(CLI::PositiveNumber);
    return sub;
  };

  CLI::App* s_verify = add_orbit(add_degree(add_common(app.add_subcommand(
      "verify-paper", "run the full pinned-claim verification suite"))));
  CLI::App* s_info = add_common(
      app.add_subcommand("info", "lattice facts and configured classes"));
  CLI::App* s_curves = add_degree(add_common(app.add_subcommand(
      "curves", "extremal rational-curve classes and their degrees")));
  CLI::App* s_cones = add_degree(add_common(app.add_subcommand(
      "cones", "effective and nef cones with certified extremal rays")));
  CLI::App* s_involution = add_common(app.add_subcommand(
      "involution", "the covering involution fixing the ample class"));
  CLI::App* s_dynamics = add_orbit(add_degree(add_common(app.add_subcommand(
      "dynamics",
      "the composite of the two certified involutions on the extended "
      "lattice"))));
  s_dynamics
      ->add_option("--power", power, "also show this power of the composite")
      ->check(CLI::NonNegativeNumber);
  CLI::App* s_product = add_degree(add_common(app.add_subcommand(
      "product", "the surface squared and its Mori-dream-space checklist")));
  s_product->add_option("--seed", seed,
                        "seed for the sampled membership diagnostics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    k3lat::Config cfg = k3lat::load_config(config_path);
    k3lat::CommandOptions opt;
    if (degree_max > 0) opt.degree_max = degree_max;
    if (orbit > 0) opt.orbit = orbit;
    opt.power = power;
    opt.seed = seed;

    k3lat::Report report;
    if (s_verify->parsed())
      report = k3lat::cmd_verify_paper(cfg, opt);
    else if (s_info->parsed())
      report = k3lat::cmd_info(cfg);
    else if (s_curves->parsed())
      report = k3lat::cmd_curves(cfg, opt);
    else if (s_cones->parsed())
      report = k3lat::cmd_cones(cfg, opt);
    else if (s_involution->parsed())
      report = k3lat::cmd_involution(cfg);
    else if (s_dynamics->parsed())
      report = k3lat::cmd_dynamics(cfg, opt);
    else
      report = k3lat::cmd_product(cfg, opt);

    if (json_out)
      std::cout << k3lat::to_json(report).dump(2) << "\n";
    else
      std::cout << k3lat::render_text(report);
    return k3lat::exit_code(report);
  } catch (const k3lat::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const k3lat::InconclusiveConeError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const k3lat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
