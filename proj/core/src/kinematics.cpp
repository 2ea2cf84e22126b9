#include "relspin/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "relspin/errors.hpp"
#include "relspin/matrix.hpp"

namespace relspin {

Direction Direction::from_unit(Vec3 v) {
  const double len = norm(v);
  if (!std::isfinite(len) || std::fabs(len - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::InvalidArgument,
                "direction is not a unit vector (|v| = " + std::to_string(len) + ")");
  }
  return Direction(v);
}

Direction Direction::normalize(Vec3 v) {
  const double len = norm(v);
  if (!std::isfinite(len) || len == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero or non-finite direction");
  }
  return Direction(v / len);
}

Direction Direction::spherical(double theta, double phi) {
  return Direction(Vec3{std::cos(phi) * std::sin(theta), std::sin(phi) * std::sin(theta),
                        std::cos(theta)});
}

BeamVelocity::BeamVelocity(Vec3 beta) : beta_(beta) {
  const double len = norm(beta);
  if (!std::isfinite(len) || len > 1.0 + 1e-12) {
    throw Error(ErrorCode::InvalidArgument,
                "beam velocity must satisfy |beta| <= 1 (got " + std::to_string(len) + ")");
  }
}

BeamVelocity BeamVelocity::along(const Direction& n, double magnitude) {
  if (!(magnitude >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "beam speed must be non-negative");
  }
  return BeamVelocity(magnitude * n.vec());
}

BeamVelocity BeamVelocity::in_plane(double magnitude, double phi) {
  return along(Direction::spherical(M_PI / 2.0, phi), magnitude);
}

BeamVelocity BeamVelocity::spherical(double magnitude, double theta, double phi) {
  return along(Direction::spherical(theta, phi), magnitude);
}

double BeamVelocity::squared() const { return std::clamp(dot(beta_, beta_), 0.0, 1.0); }

double BeamVelocity::one_minus_squared() const {
  const double mag = std::min(magnitude(), 1.0);
  return (1.0 - mag) * (1.0 + mag);
}

std::optional<Direction> BeamVelocity::direction() const {
  if (dot(beta_, beta_) == 0.0) return std::nullopt;
  return Direction::normalize(beta_);
}

double BeamVelocity::gamma() const {
  const double one_minus = one_minus_squared();
  if (one_minus <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / std::sqrt(one_minus);
}

Decomposition decompose(const Direction& a, const Direction& n) {
  const Vec3 par = dot(n.vec(), a.vec()) * n.vec();
  return {par, a.vec() - par};
}

Decomposition decompose(const Direction& a, const BeamVelocity& beta) {
  if (const auto n = beta.direction()) return decompose(a, *n);
  return {Vec3{}, a.vec()};
}

Vec3 alpha_vector(const Direction& a, const BeamVelocity& beta) {
  const auto [par, perp] = decompose(a, beta);
  return std::sqrt(beta.one_minus_squared()) * perp + par;
}

double alpha_length(const Direction& a, const BeamVelocity& beta) {
  const double ba = dot(beta.vec(), a.vec());
  return std::sqrt(beta.one_minus_squared() + ba * ba);
}

Spin Spin::from_twice(int two_j) {
  if (two_j < 0) throw Error(ErrorCode::InvalidArgument, "total spin must be non-negative");
  return Spin(two_j);
}

SpinProjectionSpectrum spin_eigenvalues(const Direction& a, const BeamVelocity& beta, Spin j) {
  const double scale = alpha_length(a, beta);
  SpinProjectionSpectrum out{j, {}};
  out.eigenvalues.reserve(static_cast<std::size_t>(j.twice()) + 1);
  for (int k = 0; k <= j.twice(); ++k) {
    const double j3 = 0.5 * static_cast<double>(2 * k - j.twice());
    out.eigenvalues.push_back(j3 * scale);
  }
  return out;
}

std::vector<double> w_projection_eigenvalues(const Direction& a, const BeamVelocity& beta,
                                             double gamma) {
  const double expected = beta.gamma();
  if (!std::isfinite(expected) || !std::isfinite(gamma) ||
      std::fabs(gamma - expected) > 1e-9 * expected) {
    throw Error(ErrorCode::GammaInconsistent,
                "gamma " + std::to_string(gamma) + " does not match 1/sqrt(1-beta^2) = " +
                    std::to_string(expected));
  }
  auto values = spin_eigenvalues(a, beta, Spin::half()).eigenvalues;
  for (auto& v : values) v *= gamma;
  return values;
}

std::array<Direction, 3> beam_frame(const BeamVelocity& beta) {
  const Direction e3 = beta.direction().value_or(Direction::z_axis());
  const Vec3 helper = std::fabs(e3.x()) > 0.9 ? Vec3{0.0, 1.0, 0.0} : Vec3{1.0, 0.0, 0.0};
  const Direction e1 = Direction::normalize(helper - dot(helper, e3.vec()) * e3.vec());
  const Direction e2 = Direction::normalize(cross(e3.vec(), e1.vec()));
  return {e1, e2, e3};
}

namespace {

CMatrix sigma_dot(const Vec3& v) {
  return v.x * pauli::x() + v.y * pauli::y() + v.z * pauli::z();
}

// -i Tr(X T^dagger) / Tr(T T^dagger): coefficient of X along generator T.
double generator_coefficient(const CMatrix& x, const CMatrix& t) {
  const cplx num = (x * t.adjoint()).trace();
  const cplx den = (t * t.adjoint()).trace();
  return (cplx{0.0, -1.0} * num / den).real();
}

}  // namespace

StructureConstants spin_structure_constants(const BeamVelocity& beta) {
  const auto frame = beam_frame(beta);
  const double perp_scale = std::sqrt(beta.one_minus_squared());

  // S_k = s_k T_k with T_k = e_k.sigma/2, s_1 = s_2 = sqrt(1-beta^2), s_3 = 1.
  // c_klm = (coefficient of [T_k,T_l] along T_m) * s_k s_l / s_m, with the
  // perpendicular factors cancelled before evaluation so beta = 1 is finite.
  std::array<CMatrix, 3> unit_gen;
  for (int k = 0; k < 3; ++k) unit_gen[k] = 0.5 * sigma_dot(frame[k].vec());
  const std::array<int, 3> perp_power{1, 1, 0};

  StructureConstants c{};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      const CMatrix comm = commutator(unit_gen[k], unit_gen[l]);
      for (int m = 0; m < 3; ++m) {
        const double coeff = generator_coefficient(comm, unit_gen[m]);
        if (std::fabs(coeff) < 1e-14) continue;
        const int power = perp_power[k] + perp_power[l] - perp_power[m];
        c[k][l][m] = coeff * std::pow(perp_scale, power);
      }
    }
  return c;
}

double structure_recontraction_residual(const BeamVelocity& beta, const StructureConstants& c) {
  const auto frame = beam_frame(beta);
  std::array<CMatrix, 3> s;
  for (int k = 0; k < 3; ++k) s[k] = 0.5 * sigma_dot(alpha_vector(frame[k], beta));

  double worst = 0.0;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      CMatrix rhs = CMatrix::zero(2);
      for (int m = 0; m < 3; ++m) rhs += cplx{0.0, c[k][l][m]} * s[m];
      worst = std::max(worst, max_abs_diff(commutator(s[k], s[l]), rhs));
    }
  return worst;
}

}  // namespace relspin
