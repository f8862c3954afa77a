// vecsim: training vector field construction and vector field-based simulation.
//
// Exit codes: 0 success, 1 validation error, 2 I/O error.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "vecsim/errors.hpp"
#include "vecsim/rng.hpp"
#include "vecsim/version.hpp"

int main(int argc, char** argv) {
  using namespace vecsim::cli;

  CLI::App app{"Vector field-based multiple-point simulation of tree-like images"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print version and RNG generator");

  DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "Write the erosion sequence T_n and contours C_n as PGM files");
  decompose->add_option("--image", dec.image, "Training image (PGM)")->required();
  decompose->add_option("--config", dec.config, "Config file")->required();
  decompose->add_option("--out-dir", dec.out_dir, "Output directory")->required();

  BuildTvfArgs tvf;
  auto* build = app.add_subcommand("build-tvf", "Build the training vector field of an image");
  build->add_option("--image", tvf.image, "Training image (PGM)")->required();
  build->add_option("--config", tvf.config, "Config file")->required();
  build->add_option("--out", tvf.out, "Output field (VECF)")->required();
  build->add_option("--rng-seed", tvf.seed.flag, "Overrides rng_seed from the config");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Draw realizations from a training vector field");
  simulate->add_option("--tvf", sim.tvf, "Training field (VECF)")->required();
  simulate->add_option("--config", sim.config, "Config file")->required();
  simulate->add_option("--count", sim.count, "Number of realizations")->check(CLI::PositiveNumber);
  simulate->add_option("--out-dir", sim.out_dir, "Output directory")->required();
  simulate->add_option("--jobs", sim.jobs, "Realizations run in parallel")->check(CLI::PositiveNumber);
  simulate->add_option("--first-index", sim.first_index, "Index of the first realization");
  simulate->add_option("--rng-seed", sim.seed.flag, "Overrides rng_seed from the config");

  EtypeArgs et;
  auto* etype = app.add_subcommand("etype", "Average real_*.pgm files into an E-type map");
  etype->add_option("--in-dir", et.in_dir, "Directory of realizations")->required();
  etype->add_option("--out", et.out, "Output grayscale PGM")->required();

  StatsArgs st;
  auto* stats = app.add_subcommand("stats", "Pattern base statistics, or ensemble connectivity report");
  stats->add_option("--tvf", st.tvf, "Training field (VECF)");
  stats->add_option("--in-dir", st.in_dir, "Directory of realizations");
  stats->add_option("--training", st.training, "Training image (PGM)");
  stats->add_option("--out", st.out, "Output CSV");
  stats->add_option("--config", st.config, "Config file (template extents, seed region)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (show_version) {
      std::cout << "vecsim " << vecsim::kVersion << " (rng " << vecsim::kGeneratorName << ")\n";
      return 0;
    }
    if (*decompose) return run_decompose(dec);
    if (*build) return run_build_tvf(tvf);
    if (*simulate) return run_simulate(sim);
    if (*etype) return run_etype(et);
    if (*stats) return run_stats(st);
    std::cerr << app.help();
    return 1;
  } catch (const vecsim::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const vecsim::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
