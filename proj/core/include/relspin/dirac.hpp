#pragma once

#include <array>
#include <string>
#include <vector>

#include "relspin/errors.hpp"
#include "relspin/kinematics.hpp"
#include "relspin/matrix.hpp"

// Free Dirac particle at fixed momentum, standard (Dirac-Pauli)
// representation, units hbar = c = 1.
//
// Chirality convention: gamma5 = i gamma_0 gamma_1 gamma_2 gamma_3 with lower
// indices, i.e. -[[0, I], [I, 0]] here. With it the spin precession reads
// ds/dt = omega x s for omega = -2 gamma5 p.

namespace relspin::dirac {

struct DiracContext {
  Vec3 p;
  double m;
  double p0;  // +sqrt(p^2 + m^2)

  double momentum() const { return norm(p); }
  /// beta = p / p0
  BeamVelocity velocity() const;
  /// p/|p|, or z when p = 0.
  Direction direction() const;
};

struct DiracOperatorSet {
  DiracContext ctx;

  CMatrix gamma0;
  std::array<CMatrix, 3> gamma;  // gamma^k
  CMatrix gamma5;
  std::array<CMatrix, 3> alpha;  // gamma^0 gamma^k, the velocity operator

  CMatrix H;
  CMatrix H_inverse;  // H / (p^2 + m^2)
  CMatrix Lambda;     // H / p0
  CMatrix Pi_plus;
  CMatrix Pi_minus;

  std::array<CMatrix, 3> s;  // diag(sigma, sigma)/2
  CMatrix W0;                // p.s
  std::array<CMatrix, 3> W;  // (s H + H s)/2

  std::array<CMatrix, 3> S;            // W H^-1
  std::array<CMatrix, 3> S_projector;  // Pi+ s Pi+ + Pi- s Pi-
  std::array<CMatrix, 3> S_explicit;   // (m^2/p0^2) s + (p^2/p0^2)(n.s) n + (i m / 2 p0^2) p x gamma

  std::array<CMatrix, 3> omega;  // -2 gamma5 p
  std::array<CMatrix, 3> Omega;  // even part of omega; zero when p = 0
};

/// Throws NullContext for p = 0 and m = 0, InvalidArgument for m < 0.
DiracOperatorSet build_context(Vec3 p, double m);

/// One verified identity: the largest residual seen and whether it is within
/// tolerance. `failure` is the error raised by enforce() if it is not.
struct CheckRecord {
  std::string check;
  double max_residual;
  double tolerance;
  bool pass;
  ErrorCode failure;
};

using Report = std::vector<CheckRecord>;

/// Throws the first failing record's error.
void enforce(const Report& report);
bool all_pass(const Report& report);

/// W H^-1, projector and explicit forms of S pairwise.
Report spin_forms_check(const DiracOperatorSet& ops, double tol = 1e-11);

/// W0^2 - W.W = -(3/4) m^2 I.
Report casimir_check(const DiracOperatorSet& ops, double tol = 1e-10);

/// Pi+ X Pi- = 0 for X in {S_k, Omega_k}.
Report evenness_check(const DiracOperatorSet& ops, double tol = 1e-12);

/// Spectrum of a.S is {-l, -l, +l, +l} with l = |alpha(a, p/p0)|/2, one
/// eigenvector per energy sign in each pair, and [a.S, H] = 0.
Report spin_spectrum_check(const DiracOperatorSet& ops, const Direction& a,
                           double spectrum_tol = 1e-10, double commutator_tol = 1e-12);

struct SpinEigenstates {
  CVector plus;   // a.S eigenvalue +l, positive energy, normalized
  CVector minus;  // a.S eigenvalue -l
  double lambda;
};

/// Positive-energy eigenstates of a.S built from the helicity spinors w+-.
/// The transverse mixing coefficient is w-+^dagger (a.sigma) w+-. Requires
/// m > 0; throws EigenstateResidual when the construction vanishes (a = -n).
SpinEigenstates spin_eigenstates(const DiracOperatorSet& ops, const Direction& a);

/// H Psi = p0 Psi and (a.S) Psi+- = +-l Psi+-.
Report eigenstate_check(const DiracOperatorSet& ops, const Direction& a, double tol = 1e-10);

/// i[H, s_k] = (omega x s)_k; for m = 0 also [omega_k, H] = 0.
Report precession_check(const DiracOperatorSet& ops, double tol = 1e-12);

/// beta^-2 Omega.S
CMatrix rotational_hamiltonian(const DiracOperatorSet& ops);
/// omega.S, the massless form of the rotational Hamiltonian.
CMatrix massless_rotational_hamiltonian(const DiracOperatorSet& ops);

/// H = beta^-2 Omega.S on each energy-sign subspace and on the full space,
/// plus evenness of Omega. Requires m > 0 and |p| > 0.
Report hamiltonian_identity_check(const DiracOperatorSet& ops, double tol = 1e-10,
                                  double even_tol = 1e-12);

/// m = 0: H = c.p with c = (alpha.p) p / p^2, and c is even.
Report massless_even_velocity_check(Vec3 p, double tol = 1e-12);

/// Largest |eigenvalue| of n.omega, i.e. the precession angular frequency.
double precession_frequency(const DiracOperatorSet& ops);

/// Massless-field kinetic quantities for helicity lambda at momentum p_mag.
struct KineticQuantities {
  double kinetic_mass;      // m_k = p_mag
  double moment_of_inertia; // I_k = lambda (lambda p_mag) / p_mag^2
  double radius;            // r = |lambda| / p_mag
  double angular_velocity;  // p_mag / |lambda|, so that I_k omega^2 = m_k
  double moment_residual;   // |I_k - m_k r^2|
};

/// `helicity` must be a nonzero half-integer (ZeroHelicity for 0).
KineticQuantities kinetic_quantities(double helicity, double p_mag);

/// Lower bound |lambda| / (2 <p^2>) on Delta Q1 Delta Q2.
double com_uncertainty_bound(double helicity, double p2_mean);

}  // namespace relspin::dirac
