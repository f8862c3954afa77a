#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "vecsim/direction.hpp"

namespace vecsim {

/// Erosion stops after exactly `k` erosions (or earlier if the image vanishes).
struct FixedSteps {
  int k = 0;
  friend bool operator==(const FixedSteps&, const FixedSteps&) = default;
};
/// Stop before the erosion that would leave fewer than `fraction` of the
/// original sand cells.
struct ResidualFraction {
  double fraction = 0.1;
  friend bool operator==(const ResidualFraction&, const ResidualFraction&) = default;
};
/// Stop before the erosion that would push the component count above `count`.
struct MaxComponents {
  int count = 1;
  friend bool operator==(const MaxComponents&, const MaxComponents&) = default;
};
using ErosionStop = std::variant<FixedSteps, ResidualFraction, MaxComponents>;

enum class Normalization { paper_raw, unit_scaled };
enum class ElementShape { cross, square };

struct SimulationConfig {
  DirectionalInterval di{0.0, kPi / 2};
  int step_n = 1;
  int step_m = 3;
  ErosionStop erosion_stop = ResidualFraction{0.1};
  ElementShape structuring_element = ElementShape::cross;
  int component_connectivity = 8;
  int interp_radius = 1;
  double beta = 0.5;
  double accept_a = 0.001;
  double b_param = 2.0;
  int seed_rows_r = 3;
  int seed_cols_t = 3;
  int template_w = 3;
  int template_h = 3;
  std::uint64_t rng_seed = 1;
  Normalization normalization = Normalization::unit_scaled;

  /// Throws ValidationError naming the offending key.
  void validate() const;

  friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

/// Parses `key = value` text. Keys absent from the text take the defaults
/// above, except: `b_param` defaults to pi / diameter(di); `seed_rows_r` and
/// `seed_cols_t` default to the template extents. `di_min`/`di_max` are
/// required unless `default_di` is supplied. Angles accept plain radians or
/// the forms `pi`, `pi/4`, `3*pi/4`, `-pi/2`.
SimulationConfig parse_config_text(std::string_view text,
                                   std::optional<DirectionalInterval> default_di = std::nullopt);
SimulationConfig parse_config(const std::filesystem::path& path,
                              std::optional<DirectionalInterval> default_di = std::nullopt);

/// Canonical `key = value` rendering; parse_config_text(to_text(c)) == c.
std::string to_text(const SimulationConfig& cfg);

/// FNV-1a 64 over to_text(cfg), as 16 lowercase hex digits.
std::string config_digest(const SimulationConfig& cfg);

std::string_view to_string(Normalization n);
std::string to_string(const ErosionStop& stop);

}  // namespace vecsim
