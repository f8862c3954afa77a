#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "vecsim/config.hpp"
#include "vecsim/grid.hpp"
#include "vecsim/patterns.hpp"
#include "vecsim/rng.hpp"

namespace vecsim {

/// Grid under simulation. Cells before `cursor` in scan order (bottom-up,
/// left-to-right) are all simulated.
struct SimGrid {
  VectorField values;
  BinaryGrid simulated;
  std::size_t cursor = 0;

  int width() const noexcept { return values.width(); }
  int height() const noexcept { return values.height(); }
  std::size_t seeded_cells() const noexcept { return simulated.sand_count(); }
};

/// Copies the bottom `rows` rows and left `cols` columns of `tvf` verbatim
/// (ND included) and marks everything else unsimulated. Throws
/// ValidationError if the seed cannot fully inform the first data event of a
/// (template_w, template_h) template, or if it covers the whole grid.
SimGrid init_grid(const VectorField& tvf, int rows, int cols, int template_w, int template_h);

/// Randomised interval-accept search. Candidates are visited in a fresh
/// uniform permutation, drawn lazily (Fisher-Yates) so only the visited prefix
/// costs anything. The first candidate with d <= accept_a wins; otherwise the
/// minimum-d candidate, ties going to the earliest in the permutation.
///
/// Offsets marked Slot::absent on either side are dropped from that
/// comparison, and unit_scaled d_tvf renormalises by the surviving count.
class PatternSelector {
 public:
  PatternSelector(const PatternTable& table, const DistanceParams& params, double accept_a);

  /// Index into the table of the chosen candidate. Throws ValidationError on an
  /// empty table.
  std::size_t select(std::span<const double> event_reps, std::span<const Slot> event_slots,
                     Cell location, Rng& rng);

  /// Full distance between the event and candidate i, without early exit.
  double distance(std::span<const double> event_reps, std::span<const Slot> event_slots,
                  Cell location, std::size_t i) const;

 private:
  double tvf_distance(std::span<const double> event_reps, std::span<const Slot> event_slots,
                      std::size_t i, double bound_scale, double cutoff) const;

  const PatternTable* table_;
  DistanceParams params_;
  double accept_a_;
  double penalty_sq_;
  std::vector<std::uint32_t> order_;
};

/// Chooses from `base` for `data_event` (its anchor is the simulated location).
/// Returns the index of the chosen pattern.
std::size_t select_pattern(const Pattern& data_event, const PatternBase& base,
                           const SimulationConfig& cfg, Rng& rng);

struct Realization {
  VectorField field;
  BinaryGrid facies;
  std::uint64_t rng_seed = 0;
  std::uint64_t index = 0;
  std::string config_digest;
};

/// Holds the pattern table for one training field so many realizations can be
/// drawn from it. Immutable after construction; run() may be called from
/// several threads at once.
class Simulator {
 public:
  /// Throws ValidationError if the field does not fit the template or seed.
  Simulator(VectorField tvf, SimulationConfig cfg);

  /// Realization `index`, drawn from stream (cfg.rng_seed, index).
  Realization run(std::uint64_t index) const;

  const SimulationConfig& config() const noexcept { return cfg_; }
  /// Size of the in-bounds pattern base, excluding right-border candidates.
  std::size_t base_size() const noexcept { return base_size_; }
  std::size_t candidate_count() const noexcept { return table_.size(); }

 private:
  VectorField tvf_;
  SimulationConfig cfg_;
  PatternTable table_;
  std::size_t base_size_ = 0;
  std::string digest_;
};

Realization simulate(const VectorField& tvf, const SimulationConfig& cfg, std::uint64_t realization_index);

/// Sand wherever the realization has a direction.
BinaryGrid to_binary(const Realization& re);

}  // namespace vecsim
