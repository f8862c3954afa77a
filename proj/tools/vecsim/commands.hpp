#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace vecsim::cli {

/// Value of --rng-seed, when given.
struct SeedOverride {
  std::optional<std::uint64_t> flag;
};

struct DecomposeArgs {
  std::string image;
  std::string config;
  std::string out_dir;
};

struct BuildTvfArgs {
  std::string image;
  std::string config;
  std::string out;
  SeedOverride seed;
};

struct SimulateArgs {
  std::string tvf;
  std::string config;
  std::string out_dir;
  int count = 1;
  int jobs = 1;
  std::uint64_t first_index = 0;
  SeedOverride seed;
};

struct EtypeArgs {
  std::string in_dir;
  std::string out;
};

struct StatsArgs {
  std::string tvf;
  std::string in_dir;
  std::string training;
  std::string out;
  std::string config;
};

int run_decompose(const DecomposeArgs& args);
int run_build_tvf(const BuildTvfArgs& args);
int run_simulate(const SimulateArgs& args);
int run_etype(const EtypeArgs& args);
int run_stats(const StatsArgs& args);

}  // namespace vecsim::cli
