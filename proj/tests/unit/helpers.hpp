#pragma once

#include <cmath>
#include <random>

#include "relspin/matrix.hpp"
#include "relspin/vec3.hpp"

namespace testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline relspin::CMatrix random_hermitian(std::mt19937_64& gen, std::size_t dim) {
  std::normal_distribution<double> g;
  relspin::CMatrix a(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    a(r, r) = g(gen);
    for (std::size_t c = r + 1; c < dim; ++c) {
      a(r, c) = {g(gen), g(gen)};
      a(c, r) = std::conj(a(r, c));
    }
  }
  return a;
}

inline relspin::Vec3 rotate_about(relspin::Vec3 v, relspin::Vec3 axis, double angle) {
  // Rodrigues, axis unit.
  using relspin::cross;
  using relspin::dot;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return c * v + s * cross(axis, v) + (1.0 - c) * dot(axis, v) * axis;
}

/// |<u|v>| = |u| |v|, i.e. equal up to a global phase for unit vectors.
inline double phase_distance(const relspin::CVector& u, const relspin::CVector& v) {
  return std::fabs(std::abs(relspin::inner(u, v)) - 1.0);
}

}  // namespace testing
