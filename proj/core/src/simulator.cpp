#include "vecsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace vecsim {

SimGrid init_grid(const VectorField& tvf, int rows, int cols, int template_w, int template_h) {
  if (rows < template_h || cols < template_w) {
    throw ValidationError("seed of " + std::to_string(rows) + " rows x " + std::to_string(cols) +
                          " columns is smaller than the template extents");
  }
  if (rows >= tvf.height() || cols >= tvf.width()) {
    throw ValidationError("seed must leave at least one row and one column to simulate");
  }
  SimGrid g{VectorField(tvf.width(), tvf.height()), BinaryGrid(tvf.width(), tvf.height()), 0};
  for (int y = 0; y < tvf.height(); ++y) {
    for (int x = 0; x < tvf.width(); ++x) {
      if (y < rows || x < cols) {
        g.values(x, y) = tvf(x, y);
        g.simulated(x, y) = 1;
      }
    }
  }
  while (g.cursor < g.simulated.size() && g.simulated.cells()[g.cursor]) ++g.cursor;
  return g;
}

PatternSelector::PatternSelector(const PatternTable& table, const DistanceParams& params, double accept_a)
    : table_(&table),
      params_(params),
      accept_a_(accept_a),
      penalty_sq_(params.mismatch_penalty() * params.mismatch_penalty()),
      order_(table.size()) {
  std::iota(order_.begin(), order_.end(), 0u);
}

double PatternSelector::tvf_distance(std::span<const double> event_reps, std::span<const Slot> event_slots,
                                     std::size_t i, double bound_scale, double cutoff) const {
  const auto reps = table_->reps(i);
  const auto slots = table_->slots(i);
  double sum = 0.0;
  std::size_t surviving = 0;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const Slot es = event_slots[k];
    const Slot cs = slots[k];
    if (es == Slot::absent || cs == Slot::absent) continue;
    ++surviving;
    sum += slot_term(es, event_reps[k], cs, reps[k], penalty_sq_);
    // sum only grows and the final divisor is at most the event's count.
    if (sum * bound_scale > cutoff) return std::numeric_limits<double>::infinity();
  }
  if (params_.normalization == Normalization::unit_scaled && surviving > 0) {
    sum /= static_cast<double>(surviving) * params_.mismatch_penalty() * params_.mismatch_penalty();
  }
  return sum;
}

double PatternSelector::distance(std::span<const double> event_reps, std::span<const Slot> event_slots,
                                 Cell location, std::size_t i) const {
  const double loc = dist_loc(location, table_->anchor(i), params_.normalization, params_.field_width,
                              params_.field_height);
  if (params_.beta == 0.0) return loc;
  const double inf = std::numeric_limits<double>::infinity();
  return combine_distances(params_.beta, tvf_distance(event_reps, event_slots, i, 0.0, inf), loc);
}

std::size_t PatternSelector::select(std::span<const double> event_reps, std::span<const Slot> event_slots,
                                    Cell location, Rng& rng) {
  const std::size_t n = order_.size();
  if (n == 0) throw ValidationError("pattern base is empty");

  const double beta = params_.beta;
  const double inf = std::numeric_limits<double>::infinity();
  const std::size_t present = static_cast<std::size_t>(
      std::ranges::count_if(event_slots, [](Slot s) { return s != Slot::absent; }));
  // Lower bound on beta * d_tvf contributed per unit of raw squared sum.
  double bound_scale = beta;
  if (params_.normalization == Normalization::unit_scaled) {
    bound_scale = present > 0 ? beta / (static_cast<double>(present) * penalty_sq_) : 0.0;
  }

  double best = inf;
  std::size_t best_index = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = k + static_cast<std::size_t>(uniform_below(rng, n - k));
    std::swap(order_[k], order_[j]);
    const std::size_t i = order_[k];

    const double loc = dist_loc(location, table_->anchor(i), params_.normalization, params_.field_width,
                                params_.field_height);
    double d = loc;
    if (beta > 0.0) {
      const double floor = (1.0 - beta) * loc;
      const bool can_accept = floor <= accept_a_;
      if (!can_accept && !(floor < best)) continue;
      const double limit = can_accept ? std::max(accept_a_, best) : best;
      // Slack keeps rounding in the bound from discarding a candidate whose
      // exact distance sits on the limit.
      const double cutoff = limit - floor + 1e-12 * (1.0 + std::abs(limit));
      const double tvf = tvf_distance(event_reps, event_slots, i, bound_scale, cutoff);
      if (tvf == inf) continue;
      d = combine_distances(beta, tvf, loc);
    }
    if (d <= accept_a_) return i;
    if (d < best) {
      best = d;
      best_index = i;
    }
  }
  return best_index;
}

std::size_t select_pattern(const Pattern& data_event, const PatternBase& base, const SimulationConfig& cfg,
                           Rng& rng) {
  if (base.patterns.empty()) throw ValidationError("pattern base is empty");
  if (data_event.values.size() != base.tmpl.size()) throw ValidationError("data event does not match template");
  PatternTable table(base.tmpl, cfg.di);
  VectorField scratch(base.field_width, base.field_height);
  // Rebuild each pattern in a scratch field so the table encodes it exactly.
  for (const Pattern& p : base.patterns) {
    for (std::size_t k = 0; k < base.tmpl.size(); ++k) scratch[p.anchor + base.tmpl.offsets[k]] = p.values[k];
    scratch[p.anchor] = p.center_value;
    table.add(scratch, p.anchor);
  }
  std::vector<double> reps(base.tmpl.size());
  std::vector<Slot> slots(base.tmpl.size());
  for (std::size_t k = 0; k < reps.size(); ++k) table.encode(data_event.values[k], reps[k], slots[k]);
  PatternSelector selector(table, DistanceParams::from(cfg, base.field_width, base.field_height), cfg.accept_a);
  return selector.select(reps, slots, data_event.anchor, rng);
}

Simulator::Simulator(VectorField tvf, SimulationConfig cfg)
    : tvf_(std::move(tvf)),
      cfg_(std::move(cfg)),
      table_(make_template(cfg_.template_w, cfg_.template_h), cfg_.di),
      digest_(config_digest(cfg_)) {
  cfg_.validate();
  const int w = cfg_.template_w;
  const int h = cfg_.template_h;
  if (tvf_.width() < 2 * w + 1 || tvf_.height() < h + 1) {
    throw ValidationError("training field is smaller than the template bounding box");
  }
  // Validates the seed geometry up front.
  (void)init_grid(tvf_, cfg_.seed_rows_r, cfg_.seed_cols_t, w, h);

  for (int y = h; y < tvf_.height(); ++y)
    for (int x = w; x < tvf_.width() - w; ++x) table_.add(tvf_, {x, y});
  base_size_ = table_.size();
  // Right-border anchors: their out-of-bounds offsets are stored as absent.
  for (int y = h; y < tvf_.height(); ++y)
    for (int x = std::max(w, tvf_.width() - w); x < tvf_.width(); ++x) table_.add(tvf_, {x, y});
}

Realization Simulator::run(std::uint64_t index) const {
  SimGrid grid = init_grid(tvf_, cfg_.seed_rows_r, cfg_.seed_cols_t, cfg_.template_w, cfg_.template_h);
  Rng rng = make_stream(cfg_.rng_seed, StreamKind::realization, index);
  PatternSelector selector(table_, DistanceParams::from(cfg_, tvf_.width(), tvf_.height()), cfg_.accept_a);

  const Template& tmpl = table_.tmpl();
  std::vector<double> reps(tmpl.size());
  std::vector<Slot> slots(tmpl.size());
  const std::size_t total = grid.values.size();
  for (; grid.cursor < total; ++grid.cursor) {
    if (grid.simulated.cells()[grid.cursor]) continue;
    const Cell u = grid.values.cell_at(grid.cursor);
    for (std::size_t k = 0; k < tmpl.size(); ++k) {
      const Cell c = u + tmpl.offsets[k];
      if (grid.values.contains(c)) {
        table_.encode(grid.values[c], reps[k], slots[k]);
      } else {
        reps[k] = 0.0;
        slots[k] = Slot::absent;
      }
    }
    const std::size_t chosen = selector.select(reps, slots, u, rng);
    grid.values[u] = table_.center(chosen);
    grid.simulated[u] = 1;
  }

  Realization re;
  re.facies = grid.values.support();
  re.field = std::move(grid.values);
  re.rng_seed = cfg_.rng_seed;
  re.index = index;
  re.config_digest = digest_;
  return re;
}

Realization simulate(const VectorField& tvf, const SimulationConfig& cfg, std::uint64_t realization_index) {
  return Simulator(tvf, cfg).run(realization_index);
}

BinaryGrid to_binary(const Realization& re) { return re.field.support(); }

}  // namespace vecsim
