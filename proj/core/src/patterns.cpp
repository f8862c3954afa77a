#include "vecsim/patterns.hpp"

#include <string>

namespace vecsim {

Template make_template(int w, int h) {
  if (w < 1 || h < 1) throw ValidationError("template extents must be >= 1");
  Template t{w, h, {}};
  t.offsets.reserve(static_cast<std::size_t>(h * (2 * w + 1) + w));
  for (int dy = h; dy >= 1; --dy) {
    for (int dx = -w; dx <= w; ++dx) t.offsets.push_back({dx, -dy});
  }
  for (int dx = w; dx >= 1; --dx) t.offsets.push_back({-dx, 0});
  return t;
}

PatternBase extract_patterns(const VectorField& field, const Template& tmpl) {
  if (field.width() < 2 * tmpl.w + 1 || field.height() < tmpl.h + 1) {
    throw ValidationError("field " + std::to_string(field.width()) + "x" + std::to_string(field.height()) +
                          " is smaller than the template bounding box " + std::to_string(2 * tmpl.w + 1) +
                          "x" + std::to_string(tmpl.h + 1));
  }
  PatternBase base{tmpl, field.width(), field.height(), {}};
  base.patterns.reserve(static_cast<std::size_t>(field.width() - 2 * tmpl.w) *
                        static_cast<std::size_t>(field.height() - tmpl.h));
  for (int y = tmpl.h; y < field.height(); ++y) {
    for (int x = tmpl.w; x < field.width() - tmpl.w; ++x) {
      const Cell anchor{x, y};
      Pattern p{{}, field[anchor], anchor};
      p.values.reserve(tmpl.size());
      for (const Cell o : tmpl.offsets) p.values.push_back(field[anchor + o]);
      base.patterns.push_back(std::move(p));
    }
  }
  return base;
}

DistanceParams DistanceParams::from(const SimulationConfig& cfg, int field_width, int field_height) {
  return {cfg.di, cfg.b_param, cfg.beta, cfg.normalization, field_width, field_height};
}

double angle_diff(const Direction& u, const Direction& v, double b, const DirectionalInterval& di) {
  if (u && v) return di.representative(*u) - di.representative(*v);
  if (!u && !v) return 0.0;
  return kPi / b;
}

double dist_tvf(const Pattern& a, const Pattern& b, const DistanceParams& params) {
  if (a.values.size() != b.values.size()) throw ValidationError("patterns come from different templates");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double d = angle_diff(a.values[i], b.values[i], params.b, params.di);
    sum += d * d;
  }
  if (params.normalization == Normalization::unit_scaled && !a.values.empty()) {
    const double pen = params.mismatch_penalty();
    sum /= static_cast<double>(a.values.size()) * pen * pen;
  }
  return sum;
}

double dist_loc(Cell p, Cell q, Normalization normalization, int field_width, int field_height) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  double d = dx * dx + dy * dy;
  if (normalization == Normalization::unit_scaled) {
    const double wx = field_width - 1;
    const double wy = field_height - 1;
    const double diag = wx * wx + wy * wy;
    d = diag > 0.0 ? d / diag : 0.0;
  }
  return d;
}

double dist(const Pattern& a, const Pattern& b, const DistanceParams& params) {
  const double loc = dist_loc(a.anchor, b.anchor, params.normalization, params.field_width, params.field_height);
  if (params.beta == 0.0) return loc;
  return combine_distances(params.beta, dist_tvf(a, b, params), loc);
}

PatternTable::PatternTable(Template tmpl, DirectionalInterval di) : tmpl_(std::move(tmpl)), di_(di) {}

void PatternTable::encode(const Direction& d, double& rep, Slot& slot) const noexcept {
  if (d) {
    rep = di_.representative(*d);
    slot = Slot::angle;
  } else {
    rep = 0.0;
    slot = Slot::nd;
  }
}

void PatternTable::add(const VectorField& field, Cell anchor) {
  anchors_.push_back(anchor);
  centers_.push_back(field.contains(anchor) ? field[anchor] : Direction{});
  for (const Cell o : tmpl_.offsets) {
    const Cell c = anchor + o;
    double rep = 0.0;
    Slot slot = Slot::absent;
    if (field.contains(c)) encode(field[c], rep, slot);
    reps_.push_back(rep);
    slots_.push_back(slot);
  }
}

}  // namespace vecsim
