#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vecsim/config.hpp"
#include "vecsim/direction.hpp"
#include "vecsim/grid.hpp"
#include "vecsim/morphology.hpp"
#include "vecsim/rng.hpp"

namespace vecsim {

/// Position of a contour walk plus the cells it has already stepped on.
class WalkState {
 public:
  explicit WalkState(Cell start) : current_(start), visited_{start} {}

  Cell current() const noexcept { return current_; }
  const std::vector<Cell>& visited() const noexcept { return visited_; }
  bool has_visited(Cell c) const noexcept;
  void advance(Cell next);

 private:
  Cell current_;
  std::vector<Cell> visited_;
};

/// One size-1 step: a uniformly random 8-neighbour that is on the contour,
/// not yet visited, and reached along a direction inside `di`. nullopt when
/// there is none.
std::optional<Cell> walk_step(const BinaryGrid& contour, const WalkState& state,
                              const DirectionalInterval& di, Rng& rng);

/// Angle of segment p->q against the x axis, in (-pi, pi]. Throws
/// ValidationError when p == q.
double secant_angle(Cell p, Cell q);

/// End cell of a walk of `steps` size-1 steps from `start`, or nullopt if the
/// walk gets stuck first.
std::optional<Cell> walk(const BinaryGrid& contour, Cell start, int steps,
                         const DirectionalInterval& di, Rng& rng);

/// Tangent estimate at p: mean of the two secants reached by independent walks
/// of `step_n` and `step_m` steps, both taken as representatives inside `di`.
/// nullopt if either walk fails. The result is wrapped into [-pi, pi].
std::optional<double> vector_at(const BinaryGrid& contour, Cell p, int step_n, int step_m,
                                const DirectionalInterval& di, Rng& rng);

/// Runs vector_at on every contour cell of the decomposition. Each cell draws
/// from its own stream (cfg.rng_seed, cell index), so the result does not
/// depend on visiting order. Residual cells and failed cells stay ND.
VectorField build_contour_field(const DecompositionSequence& seq, const SimulationConfig& cfg);

struct InterpolationResult {
  VectorField field;
  /// Passes that assigned at least one cell.
  int passes = 0;
  /// Radius in effect when the last cell was filled.
  int final_radius = 0;
  /// Cells that fell back to the DI midpoint.
  std::size_t midpoint_fallbacks = 0;
};

/// Fills every ND reservoir cell with the mean of the defined cells within
/// Chebyshev `radius`. Each pass reads only values known at its start. A pass
/// that assigns nothing widens the radius by one; past max(width, height) the
/// remaining cells get the DI midpoint.
InterpolationResult interpolate(const VectorField& field, const BinaryGrid& reservoir, int radius,
                                const DirectionalInterval& di);

struct TvfBuild {
  VectorField field;
  std::size_t erosion_steps = 0;
  std::size_t sand_cells = 0;
  std::size_t assigned_before_interpolation = 0;
  int interpolation_passes = 0;
  std::size_t midpoint_fallbacks = 0;

  double coverage() const noexcept {
    return sand_cells == 0 ? 0.0
                           : static_cast<double>(assigned_before_interpolation) /
                                 static_cast<double>(sand_cells);
  }
};

/// decompose -> build_contour_field -> interpolate. The field is defined
/// exactly on the sand of `grid`. Throws EmptyInputError on an all-background
/// image.
TvfBuild build_tvf(const BinaryGrid& grid, const SimulationConfig& cfg);

}  // namespace vecsim
