#include "vecsim/tvf.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace vecsim {
namespace {

constexpr std::array<Cell, 8> kNeighbors = {
    Cell{1, 0}, Cell{1, 1}, Cell{0, 1}, Cell{-1, 1}, Cell{-1, 0}, Cell{-1, -1}, Cell{0, -1}, Cell{1, -1}};

}  // namespace

bool WalkState::has_visited(Cell c) const noexcept {
  return std::ranges::find(visited_, c) != visited_.end();
}

void WalkState::advance(Cell next) {
  current_ = next;
  visited_.push_back(next);
}

std::optional<Cell> walk_step(const BinaryGrid& contour, const WalkState& state,
                              const DirectionalInterval& di, Rng& rng) {
  std::array<Cell, 8> options{};
  std::size_t n = 0;
  const Cell p = state.current();
  for (const Cell d : kNeighbors) {
    const Cell q = p + d;
    if (!contour.is_sand(q) || state.has_visited(q)) continue;
    if (!di.contains(std::atan2(static_cast<double>(d.y), static_cast<double>(d.x)))) continue;
    options[n++] = q;
  }
  if (n == 0) return std::nullopt;
  if (n == 1) return options[0];
  return options[uniform_below(rng, n)];
}

double secant_angle(Cell p, Cell q) {
  if (p == q) throw ValidationError("secant of a degenerate segment");
  return std::atan2(static_cast<double>(q.y - p.y), static_cast<double>(q.x - p.x));
}

std::optional<Cell> walk(const BinaryGrid& contour, Cell start, int steps,
                         const DirectionalInterval& di, Rng& rng) {
  WalkState state(start);
  for (int i = 0; i < steps; ++i) {
    const auto next = walk_step(contour, state, di, rng);
    if (!next) return std::nullopt;
    state.advance(*next);
  }
  return state.current();
}

std::optional<double> vector_at(const BinaryGrid& contour, Cell p, int step_n, int step_m,
                                const DirectionalInterval& di, Rng& rng) {
  const auto qn = walk(contour, p, step_n, di, rng);
  if (!qn) return std::nullopt;
  const auto qm = walk(contour, p, step_m, di, rng);
  if (!qm) return std::nullopt;
  const double an = di.clamp(secant_angle(p, *qn));
  const double am = di.clamp(secant_angle(p, *qm));
  return wrap_angle(0.5 * (an + am));
}

VectorField build_contour_field(const DecompositionSequence& seq, const SimulationConfig& cfg) {
  const BinaryGrid& base = seq.erosions.front();
  VectorField field(base.width(), base.height());
  for (const BinaryGrid& c : seq.contours) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c.cells()[i]) continue;
      Rng rng = make_stream(cfg.rng_seed, StreamKind::tvf_cell, i);
      field.cells()[i] = vector_at(c, c.cell_at(i), cfg.step_n, cfg.step_m, cfg.di, rng);
    }
  }
  return field;
}

InterpolationResult interpolate(const VectorField& field, const BinaryGrid& reservoir, int radius,
                                const DirectionalInterval& di) {
  if (!field.same_shape(reservoir)) throw ValidationError("field and reservoir shapes differ");
  if (radius < 1) throw ValidationError("interpolation radius must be >= 1");

  InterpolationResult res{field, 0, radius, 0};
  VectorField& out = res.field;
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (reservoir.cells()[i] && !out.cells()[i]) pending.push_back(i);
  }
  const int max_radius = std::max(out.width(), out.height());
  std::vector<std::pair<std::size_t, double>> updates;
  std::vector<std::size_t> still_pending;

  while (!pending.empty()) {
    updates.clear();
    still_pending.clear();
    const int r = res.final_radius;
    for (const std::size_t i : pending) {
      const Cell c = out.cell_at(i);
      double sum = 0.0;
      int n = 0;
      const int y0 = std::max(0, c.y - r), y1 = std::min(out.height() - 1, c.y + r);
      const int x0 = std::max(0, c.x - r), x1 = std::min(out.width() - 1, c.x + r);
      for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
          if (const Direction& d = out(x, y)) {
            sum += di.clamp(*d);
            ++n;
          }
        }
      }
      if (n > 0) {
        updates.emplace_back(i, wrap_angle(sum / n));
      } else {
        still_pending.push_back(i);
      }
    }
    if (updates.empty()) {
      if (++res.final_radius > max_radius) {
        for (const std::size_t i : pending) out.cells()[i] = wrap_angle(di.midpoint());
        res.midpoint_fallbacks = pending.size();
        break;
      }
      continue;
    }
    for (const auto& [i, angle] : updates) out.cells()[i] = angle;
    ++res.passes;
    pending.swap(still_pending);
  }
  return res;
}

TvfBuild build_tvf(const BinaryGrid& grid, const SimulationConfig& cfg) {
  const auto selem = StructuringElement::from_shape(cfg.structuring_element);
  const DecompositionSequence seq = decompose(grid, selem, cfg.erosion_stop, cfg.component_connectivity);

  TvfBuild out;
  out.erosion_steps = seq.steps();
  out.sand_cells = grid.sand_count();
  VectorField partial = build_contour_field(seq, cfg);
  out.assigned_before_interpolation = partial.defined_count();
  auto interp = interpolate(partial, grid, cfg.interp_radius, cfg.di);
  out.field = std::move(interp.field);
  out.interpolation_passes = interp.passes;
  out.midpoint_fallbacks = interp.midpoint_fallbacks;
  return out;
}

}  // namespace vecsim
