"""Regenerates oracle_values.hpp from brute-force numpy linear algebra.

Nothing here uses the closed-form correlation: every correlation is
<psi| a_hat (x) b_hat |psi> with the observables built from 2x2 matrices, and
every Dirac quantity is built from explicit 4x4 gamma matrices.

    python3 tests/oracle/generate.py > tests/oracle/oracle_values.hpp
"""
import numpy as np
from scipy.optimize import minimize

sx = np.array([[0, 1], [1, 0]], complex)
sy = np.array([[0, -1j], [1j, 0]])
sz = np.array([[1, 0], [0, -1]], complex)
SIG = [sx, sy, sz]
I2 = np.eye(2)


def observable(a, beta):
    b = np.linalg.norm(beta)
    if b == 0:
        al = a
    else:
        n = beta / b
        par = (a @ n) * n
        al = np.sqrt(1 - b * b) * (a - par) + par
    m = sum(al[k] * SIG[k] for k in range(3))
    return m / np.linalg.norm(al)


def singlet(n):
    w, v = np.linalg.eigh(sum(n[k] * SIG[k] for k in range(3)))
    minus, plus = v[:, 0], v[:, 1]
    return (np.kron(plus, minus) - np.kron(minus, plus)) / np.sqrt(2)


def corr(a, b, beta):
    bn = np.linalg.norm(beta)
    n = beta / bn if bn > 0 else np.array([0, 0, 1.0])
    psi = singlet(n)
    return np.vdot(psi, np.kron(observable(a, beta), observable(b, beta)) @ psi).real


R = 1 / np.sqrt(2)
A, AP, B, BP = np.array([R, R, 0]), np.array([-R, R, 0]), np.array([0, 1.0, 0]), np.array([1.0, 0, 0])


def chsh(beta, s=(A, AP, B, BP)):
    a, ap, b, bp = s
    return corr(a, b, beta) + corr(a, bp, beta) + corr(ap, b, beta) - corr(ap, bp, beta)


def in_plane(mag, phi):
    return mag * np.array([np.cos(phi), np.sin(phi), 0.0])


def sph(t, p):
    return np.array([np.cos(p) * np.sin(t), np.sin(p) * np.sin(t), np.cos(t)])


def best_chsh(beta, starts=8, seed=5):
    rng = np.random.default_rng(seed)

    def f(x):
        s = [sph(x[2 * k], x[2 * k + 1]) for k in range(4)]
        return -abs(chsh(beta, s))

    best = 0.0
    for _ in range(starts):
        r = minimize(f, rng.uniform(0, np.pi, 8), method="Nelder-Mead",
                     options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 40000})
        best = max(best, -r.fun)
    return best


# Dirac, standard representation.
Z2 = np.zeros((2, 2))
G0 = np.block([[I2, Z2], [Z2, -I2]]).astype(complex)
G = [np.block([[Z2, s], [-s, Z2]]) for s in SIG]
SPIN = [0.5 * np.block([[s, Z2], [Z2, s]]) for s in SIG]


def dirac_spin_eigs(p, m, a):
    p = np.asarray(p, float)
    p0 = np.sqrt(p @ p + m * m)
    H = sum(p[k] * G0 @ G[k] for k in range(3)) + m * G0
    Hinv = np.linalg.inv(H)
    W = [0.5 * (SPIN[k] @ H + H @ SPIN[k]) for k in range(3)]
    aS = sum(a[k] * W[k] @ Hinv for k in range(3))
    return np.linalg.eigvalsh(0.5 * (aS + aS.conj().T)), p0


def emit(name, value, comment):
    print(f"// {comment}")
    print(f"inline constexpr double {name} = {float(value)!r};")


print("#pragma once")
print()
print("// Generated by generate.py; do not edit by hand.")
print()
print("namespace oracle {")
print()
emit("kChshRest", chsh(np.zeros(3)), "standard settings, beta = 0")
emit("kChshPerp099", chsh(np.array([0, 0, 0.99])), "standard settings, beta = 0.99 z")
emit("kChshInPlane09Quarter", chsh(in_plane(0.9, np.pi / 4)), "standard settings, beta = 0.9 at phi = pi/4")
emit("kChshAlongX099", chsh(np.array([0.99, 0, 0])), "standard settings, beta = 0.99 x")
emit("kChshInPlane099Quarter", chsh(in_plane(0.99, np.pi / 4)), "standard settings, beta = 0.99 at phi = pi/4")
phis = np.arange(360) * 2 * np.pi / 360
emit("kRow0999MaxAbs", max(abs(chsh(in_plane(0.999, p))) for p in phis),
     "max over 360 periodic phi of |c| at in-plane beta = 0.999")
emit("kMixRestAlongX099", 0.5 * chsh(np.zeros(3)) + 0.5 * chsh(np.array([0.99, 0, 0])),
     "50/50 mixture of beta = 0 and beta = 0.99 x")
emit("kEq19At08", corr(np.array([R, R, 0]), np.array([R, -R, 0]), np.array([0.8, 0, 0])),
     "orthogonal pair at 45 degrees to a beam of speed 0.8")

# Fixed random correlations.
rng = np.random.default_rng(42)
print("// {ax, ay, az, bx, by, bz, betax, betay, betaz, E}")
print("inline constexpr double kCorrelationSamples[][10] = {")
for _ in range(8):
    a = rng.normal(size=3); a /= np.linalg.norm(a)
    b = rng.normal(size=3); b /= np.linalg.norm(b)
    d = rng.normal(size=3); d /= np.linalg.norm(d)
    beta = rng.uniform(0, 0.999) * d
    vals = [*a, *b, *beta, corr(a, b, beta)]
    print("    {" + ", ".join(repr(float(v)) for v in vals) + "},")
print("};")

eigs, p0 = dirac_spin_eigs([1, 2, 2], 1.0, np.array([0.6, 0.0, 0.8]))
emit("kDiracSpinEigTop", eigs[-1], "largest eigenvalue of a.S for p = (1,2,2), m = 1, a = (0.6, 0, 0.8)")
emit("kDiracSpinEigBottom", eigs[0], "smallest eigenvalue of the same operator")
eigs, _ = dirac_spin_eigs([3, 0, 0], 4.0, np.array([0.0, 1.0, 0.0]))
emit("kDiracSpinEigPerp", eigs[-1], "largest eigenvalue of a.S for p = (3,0,0), m = 4, a = y")

emit("kBestChshAlongX099", best_chsh(np.array([0.99, 0, 0])), "Nelder-Mead maximum of |c| at beta = 0.99 x")
print()
print("}  // namespace oracle")
