#include "vecsim/morphology.hpp"

#include <algorithm>
#include <variant>

namespace vecsim {

StructuringElement::StructuringElement(std::vector<Cell> offsets) : offsets_(std::move(offsets)) {
  if (offsets_.empty()) throw ValidationError("structuring element must be nonempty");
  if (std::ranges::find(offsets_, Cell{0, 0}) == offsets_.end()) {
    throw ValidationError("structuring element must contain the origin");
  }
  std::ranges::sort(offsets_);
  const auto dup = std::ranges::unique(offsets_);
  offsets_.erase(dup.begin(), dup.end());
}

StructuringElement StructuringElement::cross() {
  return StructuringElement({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

StructuringElement StructuringElement::square() {
  std::vector<Cell> offs;
  for (int dy = -1; dy <= 1; ++dy)
    for (int dx = -1; dx <= 1; ++dx) offs.push_back({dx, dy});
  return StructuringElement(std::move(offs));
}

StructuringElement StructuringElement::from_shape(ElementShape shape) {
  return shape == ElementShape::cross ? cross() : square();
}

BinaryGrid erode(const BinaryGrid& grid, const StructuringElement& selem) {
  BinaryGrid out(grid.width(), grid.height());
  const auto& offs = selem.offsets();
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      if (!grid(x, y)) continue;
      const Cell p{x, y};
      out(x, y) = std::ranges::all_of(offs, [&](Cell o) { return grid.is_sand(p + o); }) ? 1 : 0;
    }
  }
  return out;
}

BinaryGrid difference(const BinaryGrid& a, const BinaryGrid& b) {
  if (!a.same_shape(b)) throw ValidationError("grid shapes differ");
  BinaryGrid out(a.width(), a.height());
  auto src = a.cells();
  auto sub = b.cells();
  auto dst = out.cells();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = (src[i] && !sub[i]) ? 1 : 0;
  return out;
}

BinaryGrid contour(const BinaryGrid& grid, const StructuringElement& selem) {
  return difference(grid, erode(grid, selem));
}

Components connected_components(const BinaryGrid& grid, int connectivity) {
  if (connectivity != 4 && connectivity != 8) throw ValidationError("connectivity must be 4 or 8");
  static constexpr Cell kNeighbors[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                        {1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
  const std::size_t n_neighbors = connectivity == 8 ? 8 : 4;

  Components result{0, Grid<int>(grid.width(), grid.height(), 0)};
  std::vector<Cell> stack;
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      if (!grid(x, y) || result.labels(x, y) != 0) continue;
      const int label = ++result.count;
      result.labels(x, y) = label;
      stack.push_back({x, y});
      while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        for (std::size_t k = 0; k < n_neighbors; ++k) {
          const Cell q = c + kNeighbors[k];
          if (grid.is_sand(q) && result.labels[q] == 0) {
            result.labels[q] = label;
            stack.push_back(q);
          }
        }
      }
    }
  }
  return result;
}

DecompositionSequence decompose(const BinaryGrid& grid, const StructuringElement& selem,
                                const ErosionStop& stop, int connectivity) {
  const std::size_t initial = grid.sand_count();
  if (initial == 0) throw EmptyInputError("cannot decompose an image without sand cells");

  DecompositionSequence seq;
  seq.erosions.push_back(grid);

  // Returns true if the erosion producing `next` should be applied.
  auto accept = [&](const BinaryGrid& next) {
    return std::visit(
        [&](const auto& rule) -> bool {
          using Rule = std::decay_t<decltype(rule)>;
          if constexpr (std::is_same_v<Rule, FixedSteps>) {
            return seq.steps() < static_cast<std::size_t>(rule.k);
          } else if constexpr (std::is_same_v<Rule, ResidualFraction>) {
            return static_cast<double>(next.sand_count()) >= rule.fraction * static_cast<double>(initial);
          } else {
            return connected_components(next, connectivity).count <= rule.count;
          }
        },
        stop);
  };

  while (seq.erosions.back().sand_count() > 0) {
    if (const auto* fixed = std::get_if<FixedSteps>(&stop); fixed && seq.steps() >= static_cast<std::size_t>(fixed->k)) {
      break;
    }
    const BinaryGrid& current = seq.erosions.back();
    BinaryGrid next = erode(current, selem);
    // An element without neighbours never shrinks anything.
    if (next.sand_count() == current.sand_count()) break;
    if (!accept(next)) break;
    seq.contours.push_back(difference(current, next));
    seq.erosions.push_back(std::move(next));
  }
  return seq;
}

}  // namespace vecsim
