#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vecsim/grid.hpp"

namespace vecsim {

/// Per-cell sand frequency over an ensemble.
struct EtypeMap {
  Grid<double> values;
  std::size_t count = 0;
};

/// Throws ValidationError on an empty list or mismatched shapes.
EtypeMap etype(std::span<const BinaryGrid> realizations);

struct ConnectivityRow {
  int components = 0;
  /// Cells of the largest component over all sand cells (0 without sand).
  double largest_fraction = 0.0;
  /// Sand cells over all cells.
  double sand_fraction = 0.0;
};

struct ConnectivityReport {
  ConnectivityRow training;
  std::vector<ConnectivityRow> realizations;
  /// Median over realizations of components / training components.
  double median_component_ratio = 0.0;
};

ConnectivityRow connectivity_row(const BinaryGrid& grid, int connectivity = 8);

/// Throws ValidationError on shape mismatch or a training image without sand.
ConnectivityReport connectivity_report(std::span<const BinaryGrid> realizations, const BinaryGrid& training,
                                       int connectivity = 8);

/// Mean pairwise Hamming fraction over cells outside the seed (bottom
/// `seed_rows` rows and left `seed_cols` columns). Needs at least two grids.
double variability(std::span<const BinaryGrid> realizations, int seed_rows = 0, int seed_cols = 0);

}  // namespace vecsim
