#pragma once

#include <cstddef>
#include <vector>

#include "vecsim/config.hpp"
#include "vecsim/grid.hpp"

namespace vecsim {

/// Set of offsets that must all land on sand for a cell to survive erosion.
class StructuringElement {
 public:
  /// Throws ValidationError if `offsets` is empty or lacks the origin.
  explicit StructuringElement(std::vector<Cell> offsets);

  /// {(0,0), (+-1,0), (0,+-1)}; yields 1-cell-thick 8-connected contours.
  static StructuringElement cross();
  /// Full 3x3 block.
  static StructuringElement square();
  static StructuringElement from_shape(ElementShape shape);

  const std::vector<Cell>& offsets() const noexcept { return offsets_; }

 private:
  std::vector<Cell> offsets_;
};

/// Cell survives iff every offset lands in bounds on sand.
BinaryGrid erode(const BinaryGrid& grid, const StructuringElement& selem);

/// Sand cells of `grid` removed by one erosion.
BinaryGrid contour(const BinaryGrid& grid, const StructuringElement& selem);

/// Sand cells in a but not in b. Shapes must match.
BinaryGrid difference(const BinaryGrid& a, const BinaryGrid& b);

struct Components {
  int count = 0;
  /// 0 for background, 1..count for sand, numbered in scan order of first cell.
  Grid<int> labels;
};

/// Flood-fill labeling with 4- or 8-connectivity.
Components connected_components(const BinaryGrid& grid, int connectivity);

/// T_0 ... T_k (successive erosions) and C_0 ... C_{k-1} with C_i = T_i - T_{i+1}.
/// The sand of T_0 is the disjoint union of all contours and the residual T_k.
struct DecompositionSequence {
  std::vector<BinaryGrid> erosions;
  std::vector<BinaryGrid> contours;

  std::size_t steps() const noexcept { return contours.size(); }
  const BinaryGrid& residual() const { return erosions.back(); }
};

/// Repeated erosion until `stop` fires or the residual is empty. Each applied
/// step strictly shrinks the sand set. Throws EmptyInputError if `grid` has no
/// sand. `connectivity` is used by the MaxComponents criterion.
DecompositionSequence decompose(const BinaryGrid& grid, const StructuringElement& selem,
                                const ErosionStop& stop, int connectivity = 8);

}  // namespace vecsim
