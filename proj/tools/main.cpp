// pcx: batch front end. Every command writes <out>/<command>.json and, with
// --dot, a DOT graph next to it. Exit status: 0 pass, 1 property failure,
// 2 configuration or input error.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "pcx/error.hpp"

namespace {

void add_options(CLI::App& app, pcxcli::RunConfig& c) {
  app.add_option("--table", c.table, "projection table file (replaces the free-group backend)");
  app.add_option("--theta", c.theta, "declared theta");
  app.add_option("--k", c.k, "rank of the free group");
  app.add_option("--f", c.f, "base word of the axes");
  app.add_option("--p", c.p, "power of the spinning rotations");
  app.add_option("--K", c.K, "edge threshold of P_K");
  app.add_option("--radius", c.radius, "window radius");
  app.add_option("--tree-radius", c.tree_radius, "Cayley tree truncation, 0 for automatic");
  app.add_option("--inner", c.inner, "table finiteness prefix");
  app.add_option("--exponent-cap", c.exponent_cap, "rotation exponent cap");
  app.add_option("--bfs-cap", c.bfs_cap, "orbit search exponent cap");
  app.add_option("--bfs-depth", c.bfs_depth, "orbit search depth");
  app.add_option("--move-depth", c.move_depth, "max depth of rotation centres checked for well-definedness, -1 for all");
  app.add_option("--ball-radius", c.ball_radius, "group ball radius of WPD probes");
  app.add_option("--stages", c.stages, "windmill stages");
  app.add_option("--seed", c.seed, "sampling seed");
  app.add_option("--samples", c.samples, "number of samples");
  app.add_option("--out", c.out, "output directory (PCX_OUT_DIR overrides)");
  app.add_flag("--dot", c.dot, "also write a DOT graph");
  app.add_option("--ce", c.ce, "C_e");
  app.add_option("--cg", c.cg, "C_g");
  app.add_option("--cp", c.cp, "C_p");
  app.add_option("--B", c.B, "projection bound B");
  app.add_option("--h", c.h, "rotation word to shorten, e.g. (a^1)(Ba^-2)");
  app.add_option("--x", c.x, "axis word of the base point");
  app.add_option("--element", c.element, "WPD element");
  app.add_option("--D", c.D, "WPD displacement bound");
  app.add_option("--M", c.M, "WPD exponent");
  app.add_option("--c-wpd", c.c_wpd, "threshold for the WPD criterion series");
  app.add_option("--conjugator", c.conjugator, "g in the series element g f^n");
  app.add_option("--series", c.series, "length of the criterion series");
  app.add_option("--f1", c.f1, "first element of the independence table");
  app.add_option("--f2", c.f2, "second element of the independence table");
  app.add_option("--range", c.range, "exponent range of the independence table");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projection complexes, spinning families and their quotients"};
  app.set_help_flag("--help", "print this help and exit");
  pcxcli::RunConfig cfg;
  add_options(app, cfg);
  app.set_config("--config", "", "key=value configuration file; flags override it");
  app.require_subcommand(1, 1);
  for (const auto& name : pcxcli::command_names()) app.add_subcommand(name)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "pcx: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  if (const char* env = std::getenv("PCX_OUT_DIR"); env && *env) cfg.out = env;

  pcxcli::Outcome outcome;
  try {
    pcxcli::validate(cfg);
    outcome = pcxcli::run_command(command, cfg);
  } catch (const pcx::Error& e) {
    std::cerr << "pcx " << command << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "pcx " << command << ": " << e.what() << "\n";
    return 2;
  }

  pcx::Json report{{"command", command},
                   {"config", pcxcli::to_json(cfg)},
                   {"pass", outcome.pass},
                   {"result", outcome.result}};
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  const std::filesystem::path path = std::filesystem::path(cfg.out) / (command + ".json");
  std::ofstream json(path);
  json << report.dump(2) << "\n";
  if (!json) {
    std::cerr << "pcx " << command << ": cannot write " << path.string() << "\n";
    return 2;
  }
  if (cfg.dot && !outcome.dot.empty()) std::ofstream(std::filesystem::path(cfg.out) / (command + ".dot")) << outcome.dot;
  std::cout << command << ": " << (outcome.pass ? "pass" : "FAIL") << " (" << path.string() << ")\n";
  return outcome.pass ? 0 : 1;
}
