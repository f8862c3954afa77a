#include "vecsim/direction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vecsim/errors.hpp"

namespace vecsim {

double wrap_angle(double theta) noexcept {
  if (theta >= -kPi && theta <= kPi) return theta;
  double r = std::remainder(theta, kTwoPi);
  return r;
}

DirectionalInterval::DirectionalInterval(double theta_min, double theta_max)
    : min_(theta_min), max_(theta_max) {
  if (!std::isfinite(theta_min) || !std::isfinite(theta_max)) {
    throw ValidationError("directional interval bounds must be finite");
  }
  const double d = theta_max - theta_min;
  if (!(d > 0.0) || !(d < kPi)) {
    std::ostringstream os;
    os << "directional interval [" << theta_min << ", " << theta_max
       << "] must have diameter in (0, pi)";
    throw ValidationError(os.str());
  }
}

double DirectionalInterval::representative(double theta) const noexcept {
  const double lo = min_ - kTolerance;
  double r = theta;
  if (r < lo || r >= lo + kTwoPi) {
    r = lo + std::fmod(theta - lo, kTwoPi);
    if (r < lo) r += kTwoPi;
    if (r >= lo + kTwoPi) r -= kTwoPi;
  }
  return r;
}

bool DirectionalInterval::contains(double theta) const noexcept {
  return representative(theta) <= max_ + kTolerance;
}

double DirectionalInterval::clamp(double theta) const noexcept {
  return std::clamp(representative(theta), min_, max_);
}

}  // namespace vecsim
