#pragma once

#include <array>
#include <optional>
#include <vector>

#include "relspin/vec3.hpp"

namespace relspin {

/// Unit 3-vector (detector axis or momentum direction).
class Direction {
 public:
  static constexpr double kUnitTolerance = 1e-12;

  /// Throws InvalidArgument unless |v| = 1 within kUnitTolerance.
  static Direction from_unit(Vec3 v);
  /// Throws InvalidArgument for a zero vector.
  static Direction normalize(Vec3 v);
  /// (cos phi sin theta, sin phi sin theta, cos theta)
  static Direction spherical(double theta, double phi);

  static Direction x_axis() { return Direction(Vec3{1.0, 0.0, 0.0}); }
  static Direction y_axis() { return Direction(Vec3{0.0, 1.0, 0.0}); }
  static Direction z_axis() { return Direction(Vec3{0.0, 0.0, 1.0}); }

  const Vec3& vec() const noexcept { return v_; }
  double x() const noexcept { return v_.x; }
  double y() const noexcept { return v_.y; }
  double z() const noexcept { return v_.z; }

  Direction operator-() const { return Direction(-v_); }
  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  explicit Direction(Vec3 v) : v_(v) {}
  Vec3 v_;
};

/// Dimensionless beam velocity beta = v/c, 0 <= |beta| <= 1. The boundary
/// |beta| = 1 is admitted as a limiting input.
class BeamVelocity {
 public:
  /// Throws InvalidArgument when |beta| > 1 + 1e-12 or a component is not finite.
  explicit BeamVelocity(Vec3 beta);
  BeamVelocity() = default;

  static BeamVelocity rest() { return BeamVelocity(); }
  static BeamVelocity along(const Direction& n, double magnitude);
  /// beta * (cos phi, sin phi, 0)
  static BeamVelocity in_plane(double magnitude, double phi);
  /// beta * (cos phi sin theta, sin phi sin theta, cos theta)
  static BeamVelocity spherical(double magnitude, double theta, double phi);

  const Vec3& vec() const noexcept { return beta_; }
  double magnitude() const { return norm(beta_); }
  /// |beta|^2 clamped to [0, 1].
  double squared() const;
  /// 1 - beta^2 as (1 - |beta|)(1 + |beta|), accurate near |beta| = 1.
  double one_minus_squared() const;
  /// Momentum direction n = beta/|beta|; empty at rest.
  std::optional<Direction> direction() const;
  /// 1/sqrt(1 - beta^2); +inf at |beta| = 1.
  double gamma() const;

 private:
  Vec3 beta_{};
};

struct Decomposition {
  Vec3 parallel;
  Vec3 perpendicular;
};

/// Splits a into the component along n and the remainder.
Decomposition decompose(const Direction& a, const Direction& n);

/// Same, relative to the beam direction; at rest the parallel part is zero.
Decomposition decompose(const Direction& a, const BeamVelocity& beta);

/// Effective spin axis sqrt(1 - beta^2) a_perp + a_par.
Vec3 alpha_vector(const Direction& a, const BeamVelocity& beta);

/// sqrt(1 + (beta.a)^2 - beta^2), evaluated without forming alpha.
double alpha_length(const Direction& a, const BeamVelocity& beta);

/// Total spin j stored as 2j so half-integers are exact.
class Spin {
 public:
  static Spin from_twice(int two_j);
  static Spin half() { return from_twice(1); }

  int twice() const noexcept { return two_j_; }
  double value() const noexcept { return 0.5 * two_j_; }

 private:
  explicit Spin(int two_j) : two_j_(two_j) {}
  int two_j_;
};

struct SpinProjectionSpectrum {
  Spin j;
  /// lambda_{j3} for j3 = -j, ..., +j in units of hbar, ascending.
  std::vector<double> eigenvalues;
};

/// Eigenvalues of a.S for a spin-j particle moving with beta.
SpinProjectionSpectrum spin_eigenvalues(const Direction& a, const BeamVelocity& beta, Spin j);

/// Eigenvalues of a.w with w = W/(mc): the spin-1/2 spectrum scaled by gamma.
/// `gamma` must match beta within 1e-9 relative, else GammaInconsistent.
std::vector<double> w_projection_eigenvalues(const Direction& a, const BeamVelocity& beta,
                                             double gamma);

using StructureConstants = std::array<std::array<std::array<double, 3>, 3>, 3>;

/// Orthonormal lab-frame basis (e1, e2, e3) with e3 along the beam (z at rest).
std::array<Direction, 3> beam_frame(const BeamVelocity& beta);

/// c_klm with [S_k, S_l] = i c_klm S_m for S_k = alpha(e_k, beta).sigma/2 in
/// the beam frame. For beta along e3: c_123 = 1 - beta^2, c_231 = c_312 = 1.
StructureConstants spin_structure_constants(const BeamVelocity& beta);

/// Max entry of [S_k, S_l] - i c_klm S_m over all nine (k, l).
double structure_recontraction_residual(const BeamVelocity& beta, const StructureConstants& c);

}  // namespace relspin
