#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vecsim/config.hpp"
#include "vecsim/direction.hpp"
#include "vecsim/grid.hpp"

namespace vecsim {

/// Causal L-shaped template: the h rows below the centre spanning [-w, w], plus
/// the w cells to its left on the centre row. Every offset is visited before
/// the centre by a bottom-up, left-to-right scan.
struct Template {
  int w = 0;
  int h = 0;
  std::vector<Cell> offsets;

  std::size_t size() const noexcept { return offsets.size(); }
  friend bool operator==(const Template&, const Template&) = default;
};

/// Offsets listed row by row from the lowest, then the centre row left to right.
/// Throws ValidationError unless w >= 1 and h >= 1.
Template make_template(int w, int h);

struct Pattern {
  std::vector<Direction> values;
  Direction center_value;
  Cell anchor;
};

struct PatternBase {
  Template tmpl;
  int field_width = 0;
  int field_height = 0;
  std::vector<Pattern> patterns;

  std::size_t size() const noexcept { return patterns.size(); }
};

/// One pattern per anchor whose template fits in bounds, enumerated bottom-up,
/// left-to-right. Yields (W - 2w) * (H - h) patterns. Throws ValidationError if
/// the field is smaller than the template bounding box.
PatternBase extract_patterns(const VectorField& field, const Template& tmpl);

/// Everything the distances need besides the two patterns.
struct DistanceParams {
  DirectionalInterval di{0.0, kPi / 2};
  double b = 2.0;
  double beta = 0.5;
  Normalization normalization = Normalization::unit_scaled;
  int field_width = 1;
  int field_height = 1;

  static DistanceParams from(const SimulationConfig& cfg, int field_width, int field_height);
  /// Value charged when exactly one side is ND.
  double mismatch_penalty() const noexcept { return kPi / b; }
};

/// Difference of DI representatives when both are defined; 0 when both are
/// ND; pi / b when exactly one is ND.
double angle_diff(const Direction& u, const Direction& v, double b, const DirectionalInterval& di);

/// Sum of squared angle_diff over the template. unit_scaled divides by
/// |offsets| * (pi / b)^2. Throws ValidationError on a template mismatch.
double dist_tvf(const Pattern& a, const Pattern& b, const DistanceParams& params);

/// Squared Euclidean distance; unit_scaled divides by (W-1)^2 + (H-1)^2.
double dist_loc(Cell p, Cell q, Normalization normalization, int field_width, int field_height);

/// beta * dist_tvf + (1 - beta) * dist_loc, using each pattern's anchor as its location.
double dist(const Pattern& a, const Pattern& b, const DistanceParams& params);

/// Flat per-offset encoding used by the search loop. Representatives are
/// precomputed so comparisons are plain subtractions.
enum class Slot : std::uint8_t { nd = 0, angle = 1, absent = 2 };

/// Patterns laid out contiguously for scanning. Offsets that fall outside the
/// field are stored as Slot::absent and dropped from comparisons.
class PatternTable {
 public:
  PatternTable(Template tmpl, DirectionalInterval di);

  const Template& tmpl() const noexcept { return tmpl_; }
  std::size_t size() const noexcept { return anchors_.size(); }

  /// Appends the pattern anchored at `anchor`, reading `field`.
  void add(const VectorField& field, Cell anchor);

  Cell anchor(std::size_t i) const noexcept { return anchors_[i]; }
  const Direction& center(std::size_t i) const noexcept { return centers_[i]; }
  std::span<const double> reps(std::size_t i) const noexcept {
    return {reps_.data() + i * stride(), stride()};
  }
  std::span<const Slot> slots(std::size_t i) const noexcept {
    return {slots_.data() + i * stride(), stride()};
  }

  /// Encodes a single direction the way add() does.
  void encode(const Direction& d, double& rep, Slot& slot) const noexcept;

 private:
  std::size_t stride() const noexcept { return tmpl_.size(); }

  Template tmpl_;
  DirectionalInterval di_;
  std::vector<Cell> anchors_;
  std::vector<Direction> centers_;
  std::vector<double> reps_;
  std::vector<Slot> slots_;
};

/// beta * tvf + (1 - beta) * loc, with the endpoints returned exactly.
inline double combine_distances(double beta, double tvf, double loc) noexcept {
  if (beta == 0.0) return loc;
  if (beta == 1.0) return tvf;
  return beta * tvf + (1.0 - beta) * loc;
}

/// Squared-difference contribution of one offset; `penalty_sq` is (pi / b)^2.
inline double slot_term(Slot sa, double ra, Slot sb, double rb, double penalty_sq) noexcept {
  if (sa == Slot::angle && sb == Slot::angle) {
    const double d = ra - rb;
    return d * d;
  }
  return sa == sb ? 0.0 : penalty_sq;
}

}  // namespace vecsim
