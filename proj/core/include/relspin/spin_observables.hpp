#pragma once

#include "relspin/kinematics.hpp"
#include "relspin/matrix.hpp"

namespace relspin {

/// Below this |alpha| the +-1 normalization of a spin projection is undefined.
inline constexpr double kDegenerateAlpha = 1e-12;

struct HelicityBasis {
  CVector plus;   // (n.sigma) plus = +plus
  CVector minus;  // (n.sigma) minus = -minus
};

/// Eigenvectors of n.sigma in the sigma_z basis; the first component above
/// 1e-12 in modulus is real and positive.
HelicityBasis helicity_basis(const Direction& n);

/// Zero-helicity singlet of two particles sharing momentum direction n.
struct PairState {
  Direction n;
  /// Amplitudes in the fixed product basis {|up,up>, |up,dn>, |dn,up>, |dn,dn>}
  /// of sigma_z. For n = z these are the helicity-basis amplitudes.
  CVector amplitudes;
};

PairState singlet_state(const Direction& n);

/// n.sigma (x) I + I (x) n.sigma
CMatrix total_helicity(const Direction& n);

/// Binary observable alpha.sigma / |alpha| with eigenvalues +-1.
struct SpinObservable {
  Direction axis;
  BeamVelocity beta;
  CMatrix matrix;
  double alpha_norm;
};

/// Throws DegenerateObservable when |alpha(a, beta)| <= kDegenerateAlpha.
SpinObservable spin_observable(const Direction& a, const BeamVelocity& beta);

/// Closed-form singlet correlation
///   -(a.b - beta^2 a_perp.b_perp) / (sqrt(1+beta^2[(n.a)^2-1]) sqrt(1+beta^2[(n.b)^2-1])).
double eprb_closed_form(const Direction& a, const Direction& b, const BeamVelocity& beta);

/// Brute-force Re <psi| a_hat (x) b_hat |psi> from the 4x4 matrices and the
/// singlet vector. Never calls eprb_closed_form.
double eprb_oracle(const Direction& a, const Direction& b, const BeamVelocity& beta);

}  // namespace relspin
