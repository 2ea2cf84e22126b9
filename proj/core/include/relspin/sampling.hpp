#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "relspin/bell.hpp"
#include "relspin/kinematics.hpp"

namespace relspin {

/// Uniform on the unit sphere.
template <typename Rng>
Direction random_direction(Rng& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const double z = unit(rng);
  const double phi = angle(rng);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Direction::normalize({r * std::cos(phi), r * std::sin(phi), z});
}

/// Random direction with |beta| uniform on [0, max_speed].
template <typename Rng>
BeamVelocity random_velocity(Rng& rng, double max_speed) {
  std::uniform_real_distribution<double> speed(0.0, max_speed);
  const double magnitude = speed(rng);
  return BeamVelocity::along(random_direction(rng), magnitude);
}

template <typename Rng>
ChshSettings random_settings(Rng& rng) {
  return {random_direction(rng), random_direction(rng), random_direction(rng), random_direction(rng)};
}

}  // namespace relspin
