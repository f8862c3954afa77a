#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vecsim/errors.hpp"

namespace vecsim {

/// Lattice coordinate. y = 0 is the bottom row.
struct Cell {
  int x = 0;
  int y = 0;

  friend constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Row-major 2D lattice; row 0 is the bottom of the image.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int width, int height, const T& fill = T{})
      : width_(width), height_(height), cells_(checked_size(width, height), fill) {}

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return cells_.size(); }

  bool contains(Cell c) const noexcept {
    return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_;
  }
  std::size_t index(Cell c) const noexcept {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.x);
  }
  Cell cell_at(std::size_t i) const noexcept {
    return {static_cast<int>(i % static_cast<std::size_t>(width_)),
            static_cast<int>(i / static_cast<std::size_t>(width_))};
  }

  const T& operator[](Cell c) const noexcept { return cells_[index(c)]; }
  T& operator[](Cell c) noexcept { return cells_[index(c)]; }
  const T& operator()(int x, int y) const noexcept { return cells_[index({x, y})]; }
  T& operator()(int x, int y) noexcept { return cells_[index({x, y})]; }

  std::span<const T> cells() const noexcept { return cells_; }
  std::span<T> cells() noexcept { return cells_; }

  bool same_shape(const auto& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 protected:
  static std::size_t checked_size(int width, int height) {
    if (width < 0 || height < 0) throw ValidationError("grid dimensions must be non-negative");
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> cells_;
};

/// Facies lattice: 1 = sand (reservoir), 0 = background.
class BinaryGrid : public Grid<std::uint8_t> {
 public:
  using Grid::Grid;

  /// Validates that every value is 0 or 1 and that the length matches.
  static BinaryGrid from_cells(int width, int height, std::vector<std::uint8_t> cells);

  bool is_sand(Cell c) const noexcept { return contains(c) && (*this)[c] != 0; }
  std::size_t sand_count() const noexcept;

  friend bool operator==(const BinaryGrid&, const BinaryGrid&) = default;
};

/// A direction in radians, or nullopt for ND (no direction).
using Direction = std::optional<double>;

/// Training / simulated vector field. Unit norm is implicit for defined entries.
class VectorField : public Grid<Direction> {
 public:
  using Grid::Grid;

  std::size_t defined_count() const noexcept;
  /// Facies induced by the field: sand where a direction is defined.
  BinaryGrid support() const;

  friend bool operator==(const VectorField&, const VectorField&) = default;
};

}  // namespace vecsim
