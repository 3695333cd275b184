"""Fully entangled fraction: canonical lower bound, multistart maximizer and
the two-qubit magic-basis closed form.

The FEF is the maximum of

    g(U) = <psi+| (I (x) U^dag) rho (I (x) U) |psi+>

over single-party unitaries U.  Maximizing over one side only loses nothing:
(A (x) B)|psi+> = (I (x) B A^T)|psi+>, so the one-sided orbit already covers
every maximally entangled state.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, MatrixShapeError
from .linalg import DensityMatrix

#: Default restart counts per local dimension.
DEFAULT_RESTARTS = {2: 20, 3: 60}

_STEP_INIT = 0.5
_STEP_MIN = 1e-4


def canonical_ket(d):
    psi = np.zeros(d * d, dtype=complex)
    psi[:: d + 1] = 1.0 / math.sqrt(d)
    return psi


def fef_lower_bound(rho: DensityMatrix):
    """Canonical overlap <psi+| rho |psi+> (the U = I value of the maximand)."""
    if not rho.is_square_bipartition:
        raise MatrixShapeError(
            f"FEF needs a square bipartition, got {rho.dim_a}x{rho.dim_b}")
    psi = canonical_ket(rho.dim_a)
    return float(np.real(psi.conj() @ rho.matrix @ psi))


def _hermitian_from_params(theta, d):
    h = np.zeros((d, d), dtype=complex)
    h[np.diag_indices(d)] = theta[:d]
    k = d
    for i in range(d):
        for j in range(i + 1, d):
            h[i, j] = theta[k] + 1j * theta[k + 1]
            h[j, i] = theta[k] - 1j * theta[k + 1]
            k += 2
    return h


def _expi_hermitian(theta, d):
    """exp(i H(theta)) with a closed form for d = 2 (hot path)."""
    if d == 2:
        t0, t1, x, y = theta
        alpha = 0.5 * (t0 + t1)
        dz = 0.5 * (t0 - t1)
        r = math.sqrt(x * x + y * y + dz * dz)
        if r < 1e-300:
            c, s = 1.0, 1.0
        else:
            c, s = math.cos(r), math.sin(r) / r
        ph = complex(math.cos(alpha), math.sin(alpha))
        return ph * np.array(
            [[c + 1j * s * dz, 1j * s * (x - 1j * y)],
             [1j * s * (x + 1j * y), c - 1j * s * dz]])
    h = _hermitian_from_params(theta, d)
    vals, vecs = np.linalg.eigh(h)
    return (vecs * np.exp(1j * vals)) @ vecs.conj().T


def _make_objective(d, r_mat):
    """Objective closure g(theta) -> (value, U).

    (I (x) U)|psi+> = vec(U^T)/sqrt(d) in row-major |ij> ordering, so the
    objective is a quadratic form in the entries of U.  The d = 2 path
    avoids numpy dispatch overhead entirely.
    """
    if d == 2:
        r = [[complex(r_mat[i, j]) for j in range(4)] for i in range(4)]

        def objective(theta):
            t0, t1, x, y = theta
            alpha = 0.5 * (t0 + t1)
            dz = 0.5 * (t0 - t1)
            rad = math.sqrt(x * x + y * y + dz * dz)
            if rad < 1e-300:
                c, s = 1.0, 1.0
            else:
                c, s = math.cos(rad), math.sin(rad) / rad
            ph = complex(math.cos(alpha), math.sin(alpha))
            u00 = ph * (c + 1j * s * dz)
            u01 = ph * (1j * s * (x - 1j * y))
            u10 = ph * (1j * s * (x + 1j * y))
            u11 = ph * (c - 1j * s * dz)
            v = (u00, u10, u01, u11)  # vec(U^T)
            acc = 0.0
            for i in range(4):
                vi = v[i].conjugate()
                row = r[i]
                acc += (vi * (row[0] * v[0] + row[1] * v[1]
                              + row[2] * v[2] + row[3] * v[3])).real
            return acc / 2, (u00, u01, u10, u11)

        return objective

    def objective(theta):
        u = _expi_hermitian(theta, d)
        v = u.T.ravel()
        return float(np.real(v.conj() @ r_mat @ v)) / d, u

    return objective


def _coordinate_ascent(theta, objective, tol):
    """Derivative-free coordinate ascent with shrinking step."""
    best, u_best = objective(theta)
    n = len(theta)
    eps = tol * 1e-3
    step = _STEP_INIT
    while step > _STEP_MIN:
        improved = False
        for k in range(n):
            for sgn in (1.0, -1.0):
                cand = theta.copy()
                cand[k] += sgn * step
                val, u = objective(cand)
                if val > best + eps:
                    best, u_best, theta = val, u, cand
                    improved = True
                    # ride the successful direction while it keeps paying
                    while True:
                        cand = theta.copy()
                        cand[k] += sgn * step
                        val, u = objective(cand)
                        if val <= best + eps:
                            break
                        best, u_best, theta = val, u, cand
                    break
        if not improved:
            step *= 0.5
    return best, u_best, theta


@dataclass(frozen=True)
class FefResult:
    """Outcome of the multistart FEF maximization."""

    value: float
    optimizer_unitary: np.ndarray
    restarts_used: int
    converged: bool

    def evaluate(self, rho: DensityMatrix):
        """Re-evaluate the objective at the stored unitary."""
        d = rho.dim_a
        v = self.optimizer_unitary.T.ravel() / math.sqrt(d)
        return float(np.real(v.conj() @ rho.matrix @ v))


def fef(rho: DensityMatrix, restarts=None, seed=0, tol=1e-8):
    """Multistart maximization of the FEF objective over U(d).

    The unitary is parametrized as exp(i H) with d^2 real generator
    parameters; each restart runs coordinate ascent with a shrinking step.
    Restart 0 always starts at the identity, so the result is never below
    the canonical overlap.  Deterministic given ``seed`` and monotone
    nondecreasing in ``restarts``.
    """
    if not rho.is_square_bipartition:
        raise MatrixShapeError(
            f"FEF needs a square bipartition, got {rho.dim_a}x{rho.dim_b}")
    d = rho.dim_a
    if d not in DEFAULT_RESTARTS:
        raise DomainError(f"unsupported local dimension {d}; expected 2 or 3")
    if restarts is None:
        restarts = DEFAULT_RESTARTS[d]
    restarts = int(restarts)
    if restarts < 1:
        raise DomainError(f"restarts must be >= 1, got {restarts}")

    r_mat = np.ascontiguousarray(rho.matrix)
    objective = _make_objective(d, r_mat)
    n = d * d
    values = []
    best, u_best = -np.inf, None
    for i in range(restarts):
        if i == 0:
            theta = np.zeros(n)
        else:
            rng = np.random.default_rng([seed, i])
            theta = rng.uniform(-math.pi, math.pi, size=n)
        val, u, _ = _coordinate_ascent(theta, objective, tol)
        values.append(val)
        if val > best:
            best, u_best = val, u
    if d == 2:
        u_best = np.array([[u_best[0], u_best[1]], [u_best[2], u_best[3]]])
    values.sort(reverse=True)
    converged = bool(restarts == 1 or (values[0] - values[1]) <= 1e-6)
    return FefResult(value=best, optimizer_unitary=u_best,
                     restarts_used=restarts, converged=converged)


# Magic basis: phase-adjusted Bell states; maximally entangled two-qubit
# states are exactly the real unit vectors in this basis.
_MAGIC = np.array([
    [1, 1j, 0, 0],
    [0, 0, 1j, 1],
    [0, 0, 1j, -1],
    [1, -1j, 0, 0],
], dtype=complex) / np.sqrt(2)  # columns e1..e4 over |00>,|01>,|10>,|11>


def fef_two_qubit_closed_form(rho: DensityMatrix):
    """Closed-form two-qubit FEF: largest eigenvalue of Re(rho) in the magic basis.

    Serves as the independent desk oracle for the d = 2 optimizer.
    """
    if rho.dim_a != 2 or rho.dim_b != 2:
        raise DomainError(f"closed form needs a 2x2 bipartition, "
                          f"got {rho.dim_a}x{rho.dim_b}")
    m = _MAGIC.conj().T @ rho.matrix @ _MAGIC
    return float(np.linalg.eigvalsh(m.real)[-1])
