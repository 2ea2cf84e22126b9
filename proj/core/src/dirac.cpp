#include "relspin/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relspin/format.hpp"
#include "relspin/spin_observables.hpp"

namespace relspin::dirac {

namespace {

const cplx kI{0.0, 1.0};

CMatrix block(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  CMatrix out(4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t k = 0; k < 2; ++k) {
      out(r, k) = a(r, k);
      out(r, k + 2) = b(r, k);
      out(r + 2, k) = c(r, k);
      out(r + 2, k + 2) = d(r, k);
    }
  return out;
}

template <typename Coeffs>
CMatrix contract(const Coeffs& v, const std::array<CMatrix, 3>& m) {
  CMatrix out = CMatrix::zero(m[0].dim());
  for (int k = 0; k < 3; ++k) out += cplx{v[k], 0.0} * m[k];
  return out;
}

CMatrix sigma_dot(const Vec3& v) {
  return v.x * pauli::x() + v.y * pauli::y() + v.z * pauli::z();
}

CheckRecord record(std::string name, double residual, double tol, ErrorCode failure) {
  return {std::move(name), residual, tol, residual <= tol, failure};
}

void require_massive(const DiracOperatorSet& ops, const char* what) {
  if (!(ops.ctx.m > 0.0)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " requires m > 0");
}

}  // namespace

BeamVelocity DiracContext::velocity() const { return BeamVelocity(p / p0); }

Direction DiracContext::direction() const {
  return dot(p, p) > 0.0 ? Direction::normalize(p) : Direction::z_axis();
}

DiracOperatorSet build_context(Vec3 p, double m) {
  if (!(m >= 0.0) || !std::isfinite(m)) throw Error(ErrorCode::InvalidArgument, "mass must be finite and >= 0");
  const double p2 = dot(p, p);
  if (!std::isfinite(p2)) throw Error(ErrorCode::InvalidArgument, "momentum must be finite");
  if (p2 == 0.0 && m == 0.0) throw Error(ErrorCode::NullContext, "p = 0 and m = 0 define no particle");

  DiracOperatorSet ops;
  ops.ctx = {p, m, std::sqrt(p2 + m * m)};
  const double p0 = ops.ctx.p0;
  const double energy2 = p2 + m * m;

  const CMatrix i2 = pauli::identity();
  const CMatrix z2 = CMatrix::zero(2);
  const std::array<CMatrix, 3> sigma{pauli::x(), pauli::y(), pauli::z()};

  ops.gamma0 = block(i2, z2, z2, -1.0 * i2);
  for (int k = 0; k < 3; ++k) {
    ops.gamma[k] = block(z2, sigma[k], -1.0 * sigma[k], z2);
    ops.alpha[k] = ops.gamma0 * ops.gamma[k];
    ops.s[k] = 0.5 * block(sigma[k], z2, z2, sigma[k]);
  }
  // Lower-index product: gamma_0 = gamma^0, gamma_k = -gamma^k.
  ops.gamma5 = -kI * (ops.gamma0 * ops.gamma[0] * ops.gamma[1] * ops.gamma[2]);

  const auto pc = p.components();
  ops.H = contract(pc, ops.alpha) + m * ops.gamma0;
  ops.H_inverse = (1.0 / energy2) * ops.H;
  ops.Lambda = (1.0 / p0) * ops.H;
  const CMatrix id4 = CMatrix::identity(4);
  ops.Pi_plus = 0.5 * (id4 + ops.Lambda);
  ops.Pi_minus = 0.5 * (id4 - ops.Lambda);

  ops.W0 = contract(pc, ops.s);
  const Vec3 n = dot(p, p) > 0.0 ? p / std::sqrt(p2) : Vec3{};
  const auto nc = n.components();
  const CMatrix n_dot_s = contract(nc, ops.s);
  const Vec3 e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int k = 0; k < 3; ++k) {
    ops.W[k] = 0.5 * anticommutator(ops.s[k], ops.H);
    ops.S[k] = ops.W[k] * ops.H_inverse;
    ops.S_projector[k] = ops.Pi_plus * ops.s[k] * ops.Pi_plus + ops.Pi_minus * ops.s[k] * ops.Pi_minus;

    // (p x gamma)_k = sum_j (e_k x p)_j gamma^j
    const CMatrix p_cross_gamma = contract(cross(e[k], p).components(), ops.gamma);
    ops.S_explicit[k] = (m * m / energy2) * ops.s[k] + (p2 / energy2 * nc[k]) * n_dot_s +
                        (kI * (m / (2.0 * energy2))) * p_cross_gamma;

    ops.omega[k] = (-2.0 * pc[k]) * ops.gamma5;
  }

  if (p2 > 0.0) {
    const double pm = std::sqrt(p2);
    const CMatrix gamma_n = contract(nc, ops.gamma);
    const CMatrix factor = (1.0 / (1.0 + m * m / p2)) * (id4 + (m / pm) * gamma_n);
    for (int k = 0; k < 3; ++k) ops.Omega[k] = factor * ops.omega[k];
  } else {
    for (int k = 0; k < 3; ++k) ops.Omega[k] = CMatrix::zero(4);
  }
  return ops;
}

void enforce(const Report& report) {
  for (const auto& r : report) {
    if (!r.pass) {
      throw Error(r.failure, r.check + ": residual " + format_double(r.max_residual) + " exceeds " +
                                 format_double(r.tolerance));
    }
  }
}

bool all_pass(const Report& report) {
  return std::all_of(report.begin(), report.end(), [](const CheckRecord& r) { return r.pass; });
}

Report spin_forms_check(const DiracOperatorSet& ops, double tol) {
  double wh_proj = 0.0;
  double wh_expl = 0.0;
  double proj_expl = 0.0;
  for (int k = 0; k < 3; ++k) {
    wh_proj = std::max(wh_proj, max_abs_diff(ops.S[k], ops.S_projector[k]));
    wh_expl = std::max(wh_expl, max_abs_diff(ops.S[k], ops.S_explicit[k]));
    proj_expl = std::max(proj_expl, max_abs_diff(ops.S_projector[k], ops.S_explicit[k]));
  }
  return {record("spin_forms_wh_vs_projector", wh_proj, tol, ErrorCode::IdentityMismatch),
          record("spin_forms_wh_vs_explicit", wh_expl, tol, ErrorCode::IdentityMismatch),
          record("spin_forms_projector_vs_explicit", proj_expl, tol, ErrorCode::IdentityMismatch)};
}

Report casimir_check(const DiracOperatorSet& ops, double tol) {
  CMatrix casimir = ops.W0 * ops.W0;
  for (int k = 0; k < 3; ++k) casimir -= ops.W[k] * ops.W[k];
  const CMatrix expected = (-0.75 * ops.ctx.m * ops.ctx.m) * CMatrix::identity(4);
  return {record("casimir", max_abs_diff(casimir, expected), tol, ErrorCode::IdentityMismatch)};
}

Report evenness_check(const DiracOperatorSet& ops, double tol) {
  double spin = 0.0;
  double rot = 0.0;
  for (int k = 0; k < 3; ++k) {
    spin = std::max(spin, max_abs(ops.Pi_plus * ops.S[k] * ops.Pi_minus));
    rot = std::max(rot, max_abs(ops.Pi_plus * ops.Omega[k] * ops.Pi_minus));
  }
  return {record("spin_even", spin, tol, ErrorCode::IdentityMismatch),
          record("omega_even", rot, tol, ErrorCode::IdentityMismatch)};
}

Report spin_spectrum_check(const DiracOperatorSet& ops, const Direction& a, double spectrum_tol,
                           double commutator_tol) {
  const CMatrix a_dot_s = contract(a.vec().components(), ops.S);
  const auto eig = herm_eig(a_dot_s);
  const double lambda = 0.5 * alpha_length(a, ops.ctx.velocity());
  const double expected[4] = {-lambda, -lambda, lambda, lambda};

  double spectrum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) spectrum = std::max(spectrum, std::fabs(eig.values[i] - expected[i]));
  // Each doubly degenerate pair holds one state of each energy sign: the
  // trace of Lambda over the pair vanishes.
  for (std::size_t pair = 0; pair < 2; ++pair) {
    const cplx sign_trace = expectation(eig.vectors[2 * pair], ops.Lambda, eig.vectors[2 * pair]) +
                            expectation(eig.vectors[2 * pair + 1], ops.Lambda, eig.vectors[2 * pair + 1]);
    spectrum = std::max(spectrum, std::abs(sign_trace));
  }

  const double comm = max_abs(commutator(a_dot_s, ops.H));
  return {record("spin_spectrum", spectrum, spectrum_tol, ErrorCode::SpectrumMismatch),
          record("spin_commutes_with_h", comm, commutator_tol, ErrorCode::SpectrumMismatch)};
}

SpinEigenstates spin_eigenstates(const DiracOperatorSet& ops, const Direction& a) {
  require_massive(ops, "spin_eigenstates");
  const double m = ops.ctx.m;
  const double p0 = ops.ctx.p0;
  const Direction n = ops.ctx.direction();
  const auto w = helicity_basis(n);
  const double lambda = 0.5 * alpha_length(a, ops.ctx.velocity());
  const double along = lambda + 0.5 * dot(a.vec(), n.vec());
  const CMatrix a_sigma = sigma_dot(a.vec());
  const double upper = std::sqrt(p0 + m);
  const double lower = std::sqrt(std::max(0.0, p0 - m));

  const auto build = [&](double sign, const CVector& same, const CVector& other) {
    const cplx mixing = (m / (2.0 * p0)) * expectation(other, a_sigma, same);
    const CVector top = upper * (cplx{along, 0.0} * same + sign * mixing * other);
    const CVector bottom = lower * (cplx{sign * along, 0.0} * same - mixing * other);
    CVector psi(4);
    for (std::size_t i = 0; i < 2; ++i) {
      psi[i] = top[i];
      psi[i + 2] = bottom[i];
    }
    if (psi.norm() <= 1e-12 * upper) {
      throw Error(ErrorCode::EigenstateResidual,
                  "eigenstate construction vanishes for a antiparallel to the momentum");
    }
    return psi.normalized();
  };
  return {build(1.0, w.plus, w.minus), build(-1.0, w.minus, w.plus), lambda};
}

Report eigenstate_check(const DiracOperatorSet& ops, const Direction& a, double tol) {
  const auto states = spin_eigenstates(ops, a);
  const CMatrix a_dot_s = contract(a.vec().components(), ops.S);
  const auto residual = [](const CVector& lhs, const CVector& rhs) { return max_abs(lhs - rhs); };

  const double energy = std::max(residual(ops.H * states.plus, ops.ctx.p0 * states.plus),
                                 residual(ops.H * states.minus, ops.ctx.p0 * states.minus));
  const double spin = std::max(residual(a_dot_s * states.plus, states.lambda * states.plus),
                               residual(a_dot_s * states.minus, -states.lambda * states.minus));
  return {record("eigenstate_energy", energy, tol, ErrorCode::EigenstateResidual),
          record("eigenstate_spin", spin, tol, ErrorCode::EigenstateResidual)};
}

Report precession_check(const DiracOperatorSet& ops, double tol) {
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    const int l = (k + 1) % 3;
    const int j = (k + 2) % 3;
    const CMatrix lhs = kI * commutator(ops.H, ops.s[k]);
    const CMatrix rhs = ops.omega[l] * ops.s[j] - ops.omega[j] * ops.s[l];
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  Report report{record("precession", worst, tol, ErrorCode::PrecessionMismatch)};
  if (ops.ctx.m == 0.0) {
    double comm = 0.0;
    for (int k = 0; k < 3; ++k) comm = std::max(comm, max_abs(commutator(ops.omega[k], ops.H)));
    report.push_back(record("omega_commutes_with_h", comm, tol, ErrorCode::PrecessionMismatch));
  }
  return report;
}

CMatrix rotational_hamiltonian(const DiracOperatorSet& ops) {
  const double beta2 = dot(ops.ctx.p, ops.ctx.p) / (ops.ctx.p0 * ops.ctx.p0);
  if (!(beta2 > 0.0)) throw Error(ErrorCode::InvalidArgument, "rotational Hamiltonian needs |p| > 0");
  CMatrix out = CMatrix::zero(4);
  for (int k = 0; k < 3; ++k) out += ops.Omega[k] * ops.S[k];
  return (1.0 / beta2) * out;
}

CMatrix massless_rotational_hamiltonian(const DiracOperatorSet& ops) {
  CMatrix out = CMatrix::zero(4);
  for (int k = 0; k < 3; ++k) out += ops.omega[k] * ops.S[k];
  return out;
}

Report hamiltonian_identity_check(const DiracOperatorSet& ops, double tol, double even_tol) {
  require_massive(ops, "hamiltonian_identity_check");
  const CMatrix diff = rotational_hamiltonian(ops) - ops.H;
  Report report{
      record("hamiltonian_identity_positive_energy", max_abs(ops.Pi_plus * diff * ops.Pi_plus), tol,
             ErrorCode::IdentityMismatch),
      record("hamiltonian_identity_negative_energy", max_abs(ops.Pi_minus * diff * ops.Pi_minus), tol,
             ErrorCode::IdentityMismatch),
      record("hamiltonian_identity_full_space", max_abs(diff), tol, ErrorCode::IdentityMismatch),
  };
  auto even = evenness_check(ops, even_tol);
  report.push_back(even[1]);
  return report;
}

Report massless_even_velocity_check(Vec3 p, double tol) {
  if (!(dot(p, p) > 0.0)) throw Error(ErrorCode::NullContext, "massless check needs |p| > 0");
  const DiracOperatorSet ops = build_context(p, 0.0);
  const auto pc = p.components();
  const double p2 = dot(p, p);
  const CMatrix v_dot_p = contract(pc, ops.alpha);

  CMatrix c_dot_p = CMatrix::zero(4);
  double evenness = 0.0;
  for (int k = 0; k < 3; ++k) {
    const CMatrix c_k = (pc[k] / p2) * v_dot_p;
    c_dot_p += pc[k] * c_k;
    evenness = std::max(evenness, max_abs(ops.Pi_plus * c_k * ops.Pi_minus));
  }
  return {record("massless_velocity_identity", max_abs_diff(ops.H, c_dot_p), tol, ErrorCode::IdentityMismatch),
          record("massless_velocity_even", evenness, tol, ErrorCode::IdentityMismatch)};
}

double precession_frequency(const DiracOperatorSet& ops) {
  const Direction n = ops.ctx.direction();
  const auto eig = herm_eig(contract(n.vec().components(), ops.omega));
  return std::max(std::fabs(eig.values.front()), std::fabs(eig.values.back()));
}

namespace {

void require_half_integer(double helicity) {
  const double twice = 2.0 * helicity;
  if (!std::isfinite(twice) || twice != std::round(twice)) {
    throw Error(ErrorCode::InvalidArgument, "helicity must be a half-integer");
  }
}

}  // namespace

KineticQuantities kinetic_quantities(double helicity, double p_mag) {
  require_half_integer(helicity);
  if (helicity == 0.0) throw Error(ErrorCode::ZeroHelicity, "kinetic quantities need nonzero helicity");
  if (!(p_mag > 0.0)) throw Error(ErrorCode::InvalidArgument, "momentum magnitude must be positive");

  const double abs_h = std::fabs(helicity);
  const double helicity_projection = helicity * p_mag;  // p.S on the helicity eigenstate
  KineticQuantities q{};
  q.kinetic_mass = p_mag;
  q.moment_of_inertia = helicity * helicity_projection / (p_mag * p_mag);
  q.radius = abs_h / p_mag;
  q.angular_velocity = p_mag / abs_h;
  q.moment_residual = std::fabs(q.moment_of_inertia - q.kinetic_mass * q.radius * q.radius);
  return q;
}

double com_uncertainty_bound(double helicity, double p2_mean) {
  require_half_integer(helicity);
  if (!(p2_mean > 0.0)) throw Error(ErrorCode::InvalidArgument, "<p^2> must be positive");
  return std::fabs(helicity) / (2.0 * p2_mean);
}

}  // namespace relspin::dirac
