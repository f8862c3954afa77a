#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "vecsim/vecsim.hpp"

namespace fs = std::filesystem;

namespace vecsim::cli {
namespace {

std::string numbered(const char* prefix, std::size_t i, const char* ext) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%04zu%s", prefix, i, ext);
  return buf;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create directory '" + dir.string() + "'");
}

// Precedence: VECSIM_SEED, then --rng-seed, then the config file.
SimulationConfig load_config(const std::string& path, const SeedOverride& seed) {
  SimulationConfig cfg = parse_config(path);
  if (seed.flag) cfg.rng_seed = *seed.flag;
  if (const char* env = std::getenv("VECSIM_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      cfg.rng_seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError(std::string("VECSIM_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return cfg;
}

void print_digest(const SimulationConfig& cfg) {
  std::cout << "config_digest " << config_digest(cfg) << " rng_seed " << cfg.rng_seed << '\n';
}

std::vector<fs::path> realization_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: '" + dir.string() + "'");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.starts_with("real_") && entry.path().extension() == ".pgm") {
      files.push_back(entry.path());
    }
  }
  std::ranges::sort(files);
  if (files.empty()) throw ValidationError("no real_*.pgm files in '" + dir.string() + "'");
  return files;
}

}  // namespace

int run_decompose(const DecomposeArgs& args) {
  const SimulationConfig cfg = load_config(args.config, {});
  print_digest(cfg);
  const BinaryGrid image = read_pgm(args.image);
  const auto seq = decompose(image, StructuringElement::from_shape(cfg.structuring_element), cfg.erosion_stop,
                             cfg.component_connectivity);
  ensure_dir(args.out_dir);
  for (std::size_t i = 0; i < seq.erosions.size(); ++i) {
    write_pgm(seq.erosions[i], fs::path(args.out_dir) / numbered("T_", i, ".pgm"));
  }
  for (std::size_t i = 0; i < seq.contours.size(); ++i) {
    write_pgm(seq.contours[i], fs::path(args.out_dir) / numbered("C_", i, ".pgm"));
  }
  std::cout << "erosion_steps " << seq.steps() << '\n'
            << "sand_cells " << image.sand_count() << '\n'
            << "residual_cells " << seq.residual().sand_count() << '\n';
  return 0;
}

int run_build_tvf(const BuildTvfArgs& args) {
  const SimulationConfig cfg = load_config(args.config, args.seed);
  print_digest(cfg);
  const BinaryGrid image = read_pgm(args.image);
  const TvfBuild build = build_tvf(image, cfg);
  write_field(build.field, args.out);
  char coverage[32];
  std::snprintf(coverage, sizeof coverage, "%.2f", 100.0 * build.coverage());
  std::cout << "erosion_steps " << build.erosion_steps << '\n'
            << "coverage_percent " << coverage << '\n'
            << "interpolation_passes " << build.interpolation_passes << '\n'
            << "midpoint_fallbacks " << build.midpoint_fallbacks << '\n';
  return 0;
}

int run_simulate(const SimulateArgs& args) {
  const SimulationConfig cfg = load_config(args.config, args.seed);
  print_digest(cfg);
  if (args.count < 1) throw ValidationError("--count must be >= 1");
  if (args.jobs < 1) throw ValidationError("--jobs must be >= 1");
  const VectorField tvf = read_field(args.tvf);
  const Simulator sim(tvf, cfg);
  ensure_dir(args.out_dir);
  const fs::path out(args.out_dir);
  const std::string digest = config_digest(cfg);

  const std::size_t count = static_cast<std::size_t>(args.count);
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> workers;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      const std::uint64_t index = args.first_index + k;
      try {
        const Realization re = sim.run(index);
        write_pgm(re.facies, out / numbered("real_", index, ".pgm"));
        write_field(re.field, out / numbered("real_", index, ".vecf"));
        const nlohmann::ordered_json prov = {
            {"index", index},
            {"rng_seed", re.rng_seed},
            {"config_digest", re.config_digest},
            {"generator", kGeneratorName},
            {"version", kVersion},
        };
        write_file_atomic(out / numbered("real_", index, ".json"), prov.dump(2) + "\n");
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t n_workers = std::min<std::size_t>(static_cast<std::size_t>(args.jobs), count);
  for (std::size_t t = 1; t < n_workers; ++t) workers.emplace_back(work);
  work();
  for (auto& w : workers) w.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  nlohmann::ordered_json manifest = {
      {"generator", kGeneratorName},
      {"version", kVersion},
      {"config_digest", digest},
      {"rng_seed", cfg.rng_seed},
      {"config", to_text(cfg)},
      {"base_size", sim.base_size()},
      {"realizations", nlohmann::ordered_json::array()},
  };
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t index = args.first_index + k;
    manifest["realizations"].push_back({{"index", index},
                                        {"pgm", numbered("real_", index, ".pgm")},
                                        {"vecf", numbered("real_", index, ".vecf")}});
    std::cout << "wrote " << numbered("real_", index, ".pgm") << '\n';
  }
  write_file_atomic(out / "manifest.json", manifest.dump(2) + "\n");
  return 0;
}

int run_etype(const EtypeArgs& args) {
  std::cout << "config_digest none\n";
  std::vector<BinaryGrid> grids;
  for (const auto& f : realization_files(args.in_dir)) grids.push_back(read_pgm(f));
  const EtypeMap map = etype(grids);
  write_file_atomic(args.out, encode_gray_pgm(map.values));
  std::cout << "realizations " << map.count << '\n';
  return 0;
}

int run_stats(const StatsArgs& args) {
  std::optional<SimulationConfig> cfg;
  if (!args.config.empty()) cfg = load_config(args.config, {});
  if (cfg) {
    print_digest(*cfg);
  } else {
    std::cout << "config_digest none\n";
  }

  if (!args.tvf.empty()) {
    const VectorField tvf = read_field(args.tvf);
    const int w = cfg ? cfg->template_w : SimulationConfig{}.template_w;
    const int h = cfg ? cfg->template_h : SimulationConfig{}.template_h;
    const PatternBase base = extract_patterns(tvf, make_template(w, h));
    const double nd = 1.0 - static_cast<double>(tvf.defined_count()) / static_cast<double>(tvf.size());
    std::cout << "field " << tvf.width() << "x" << tvf.height() << '\n'
              << "template " << w << "x" << h << '\n'
              << "base_size " << base.size() << '\n'
              << "nd_fraction " << nd << '\n';
    return 0;
  }

  if (args.in_dir.empty() || args.training.empty() || args.out.empty()) {
    throw ValidationError("stats needs either --tvf, or --in-dir with --training and --out");
  }
  const BinaryGrid training = read_pgm(args.training);
  const auto files = realization_files(args.in_dir);
  std::vector<BinaryGrid> grids;
  for (const auto& f : files) grids.push_back(read_pgm(f));
  const int conn = cfg ? cfg->component_connectivity : 8;
  const ConnectivityReport report = connectivity_report(grids, training, conn);

  std::ostringstream csv;
  csv.precision(9);
  csv << "realization,components,largest_fraction,sand_fraction\n";
  csv << "training," << report.training.components << ',' << report.training.largest_fraction << ','
      << report.training.sand_fraction << '\n';
  for (std::size_t i = 0; i < files.size(); ++i) {
    const auto& row = report.realizations[i];
    csv << files[i].stem().string() << ',' << row.components << ',' << row.largest_fraction << ','
        << row.sand_fraction << '\n';
  }
  write_file_atomic(args.out, csv.str());

  std::cout << "realizations " << files.size() << '\n'
            << "training_components " << report.training.components << '\n'
            << "median_component_ratio " << report.median_component_ratio << '\n';
  if (grids.size() >= 2) {
    const int r = cfg ? cfg->seed_rows_r : 0;
    const int t = cfg ? cfg->seed_cols_t : 0;
    std::cout << "variability " << variability(grids, r, t) << '\n';
  }
  return 0;
}

}  // namespace vecsim::cli
