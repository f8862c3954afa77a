#pragma once

#include <numbers>

namespace vecsim {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into [-pi, pi].
double wrap_angle(double theta) noexcept;

/// Closed interval of directions with diameter in (0, pi). Every direction of a
/// tree-like image lies inside it; contour walks only move along it.
class DirectionalInterval {
 public:
  /// Slack used by contains(); covers decimal round-off in configured bounds
  /// such as 1.5707963267948966 versus atan2(1, 0).
  static constexpr double kTolerance = 1e-9;

  DirectionalInterval(double theta_min, double theta_max);

  double theta_min() const noexcept { return min_; }
  double theta_max() const noexcept { return max_; }
  double diameter() const noexcept { return max_ - min_; }
  double midpoint() const noexcept { return 0.5 * (min_ + max_); }

  /// Representative of theta modulo 2pi in [theta_min - tol, theta_min + 2pi - tol).
  double representative(double theta) const noexcept;
  bool contains(double theta) const noexcept;
  /// Representative clamped into [theta_min, theta_max].
  double clamp(double theta) const noexcept;

  friend bool operator==(const DirectionalInterval&, const DirectionalInterval&) = default;

 private:
  double min_;
  double max_;
};

}  // namespace vecsim
