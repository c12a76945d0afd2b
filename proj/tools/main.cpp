#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bimeasure/cli/run.hpp"
#include "bimeasure/cli/verify.hpp"

int main(int argc, char** argv) {
  using bimeasure::cli::Command;
  bimeasure::cli::RunConfig config;

  CLI::App app{"Finite bicomplex and hyperbolic measure theory toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", config.input_path, "Input JSON file (default stdin)");
  app.add_option("--output", config.output_path, "Output file (default stdout)");
  app.add_option("--seed", config.seed, "Seed for generated instances");
  app.add_option("--tol", config.tol, "Tolerance")->check(CLI::PositiveNumber);
  app.add_option("--cases", config.cases, "Cases per verify suite")->check(CLI::PositiveNumber);

  app.add_subcommand("decompose", "Jordan, Hahn, polar and Lebesgue-Radon-Nikodym decompositions");
  app.add_subcommand("integrate", "Integral of a function, or a dominated convergence run");
  app.add_subcommand("pushforward", "Push a D-probability forward along a map");
  app.add_subcommand("find-invariant", "Cesaro averages and the cycle basis of invariant measures");

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", config.suite, "Glob selecting suites");
  verify->add_flag("--timings", config.timings, "Include wall times in the report");
  bool list = false;
  verify->add_flag("--list", list, "Print suite names and exit");

  auto* gen = app.add_subcommand("gen", "Emit a seeded random instance");
  gen->add_option("--kind", config.kind,
                  "t-measure, d-measure, signed-measure, d-probability, function, map, "
                  "interval-map-discretization")
      ->required();
  gen->add_option("--atoms", config.atoms, "Number of atoms (bins for interval maps)")
      ->check(CLI::PositiveNumber);
  gen->add_option("--knots", config.knots, "Piecewise-linear map as x0:y0,x1:y1,... (default tent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bimeasure::cli::kExitInput;
  }

  if (list) {
    for (const auto& name : bimeasure::cli::suite_names()) std::cout << name << "\n";
    return 0;
  }
  config.command = *bimeasure::cli::command_from_string(app.get_subcommands().front()->get_name());
  return bimeasure::cli::run(config, std::cin, std::cout, std::cerr);
}
