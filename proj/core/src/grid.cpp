#include "vecsim/grid.hpp"

#include <algorithm>
#include <string>

namespace vecsim {

BinaryGrid BinaryGrid::from_cells(int width, int height, std::vector<std::uint8_t> cells) {
  BinaryGrid g(width, height);
  if (cells.size() != g.size()) {
    throw ValidationError("cell count " + std::to_string(cells.size()) + " does not match " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
  if (std::ranges::any_of(cells, [](std::uint8_t v) { return v > 1; })) {
    throw ValidationError("binary grid values must be 0 or 1");
  }
  g.cells_ = std::move(cells);
  return g;
}

std::size_t BinaryGrid::sand_count() const noexcept {
  return static_cast<std::size_t>(std::ranges::count_if(cells_, [](auto v) { return v != 0; }));
}

std::size_t VectorField::defined_count() const noexcept {
  return static_cast<std::size_t>(
      std::ranges::count_if(cells_, [](const Direction& d) { return d.has_value(); }));
}

BinaryGrid VectorField::support() const {
  BinaryGrid out(width_, height_);
  for (std::size_t i = 0; i < cells_.size(); ++i) out.cells()[i] = cells_[i] ? 1 : 0;
  return out;
}

}  // namespace vecsim
