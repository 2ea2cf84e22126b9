#include "relspin/spin_observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "relspin/errors.hpp"

namespace relspin {

namespace {

CMatrix sigma_dot(const Vec3& v) {
  return v.x * pauli::x() + v.y * pauli::y() + v.z * pauli::z();
}

// Of the two algebraically equivalent eigenvector candidates, take the one
// with the larger norm so neither pole loses precision.
CVector pick_larger(CVector first, CVector second) {
  return first.norm() >= second.norm() ? first : second;
}

[[noreturn]] void throw_degenerate(const Direction& a, double alpha_norm) {
  throw Error(ErrorCode::DegenerateObservable,
              "spin projection along (" + std::to_string(a.x()) + ", " + std::to_string(a.y()) +
                  ", " + std::to_string(a.z()) + ") has |alpha| = " +
                  std::to_string(alpha_norm) + "; the +-1 observable is undefined");
}

}  // namespace

HelicityBasis helicity_basis(const Direction& n) {
  const double nx = n.x();
  const double ny = n.y();
  const double nz = n.z();
  const cplx n_plus{nx, ny};   // nx + i ny
  const cplx n_minus{nx, -ny};  // nx - i ny

  CVector plus = pick_larger(CVector{1.0 + nz, n_plus}, CVector{n_minus, 1.0 - nz});
  CVector minus = pick_larger(CVector{-n_minus, 1.0 + nz}, CVector{1.0 - nz, -n_plus});
  return {fix_phase(plus.normalized()), fix_phase(minus.normalized())};
}

PairState singlet_state(const Direction& n) {
  const auto [plus, minus] = helicity_basis(n);
  CVector psi = kron(plus, minus) - kron(minus, plus);
  psi *= cplx{1.0 / std::sqrt(2.0), 0.0};
  return {n, std::move(psi)};
}

CMatrix total_helicity(const Direction& n) {
  const CMatrix h = sigma_dot(n.vec());
  return kron(h, pauli::identity()) + kron(pauli::identity(), h);
}

SpinObservable spin_observable(const Direction& a, const BeamVelocity& beta) {
  const Vec3 alpha = alpha_vector(a, beta);
  const double alpha_norm = norm(alpha);
  if (!(alpha_norm > kDegenerateAlpha)) throw_degenerate(a, alpha_norm);
  return {a, beta, sigma_dot(alpha / alpha_norm), alpha_norm};
}

double eprb_closed_form(const Direction& a, const Direction& b, const BeamVelocity& beta) {
  // Same expression regrouped with |a_par|^2 + |a_perp|^2 = 1 so that no term
  // cancels as |beta| -> 1:
  //   1 + beta^2 [(n.a)^2 - 1] = |a_par|^2 + (1 - beta^2) |a_perp|^2
  //   a.b - beta^2 a_perp.b_perp = a_par.b_par + (1 - beta^2) a_perp.b_perp
  const double shrink = beta.one_minus_squared();
  const auto da = decompose(a, beta);
  const auto db = decompose(b, beta);

  const double den_a = std::sqrt(dot(da.parallel, da.parallel) + shrink * dot(da.perpendicular, da.perpendicular));
  const double den_b = std::sqrt(dot(db.parallel, db.parallel) + shrink * dot(db.perpendicular, db.perpendicular));
  if (!(den_a > kDegenerateAlpha)) throw_degenerate(a, den_a);
  if (!(den_b > kDegenerateAlpha)) throw_degenerate(b, den_b);

  const double numerator = dot(da.parallel, db.parallel) + shrink * dot(da.perpendicular, db.perpendicular);
  return -numerator / (den_a * den_b);
}

double eprb_oracle(const Direction& a, const Direction& b, const BeamVelocity& beta) {
  const SpinObservable obs_a = spin_observable(a, beta);
  const SpinObservable obs_b = spin_observable(b, beta);
  const PairState psi = singlet_state(beta.direction().value_or(Direction::z_axis()));

  const cplx value = expectation(psi.amplitudes, kron(obs_a.matrix, obs_b.matrix), psi.amplitudes);
  if (std::fabs(value.imag()) >= 1e-13) {
    throw std::logic_error("eprb_oracle: expectation has imaginary part " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace relspin
