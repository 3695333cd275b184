"""Spectral membership tests for the absolute-FEF set and related quantities.

A d (x) d state stays at FEF <= 1/d under every global unitary exactly when
its largest eigenvalue satisfies lambda_max <= 1/d; the supremum of the FEF
over global rotations equals lambda_max and is attained by an explicit
activating unitary.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import DomainError, MatrixShapeError
from .fef import canonical_ket, fef, fef_lower_bound
from .linalg import DensityMatrix, eig_hermitian

BOUNDARY_TOL = 1e-9

LABEL_USEFUL = "USEFUL"
LABEL_ACTIVATABLE = "ACTIVATABLE"
LABEL_ABSOLUTE = "ABSOLUTE"


class MembershipVerdict(NamedTuple):
    absolute: bool
    boundary: bool
    lambda_max: float


def _require_square(rho: DensityMatrix):
    if not rho.is_square_bipartition:
        raise MatrixShapeError(
            f"expected a square bipartition, got {rho.dim_a}x{rho.dim_b}")


def is_absolute_fef(rho: DensityMatrix, tol=BOUNDARY_TOL):
    """Membership in the absolute-FEF set: lambda_max <= 1/d.

    Returns a :class:`MembershipVerdict`; ties within ``tol`` count as
    members with the boundary flag set.
    """
    _require_square(rho)
    d = rho.dim_a
    lam = float(np.linalg.eigvalsh(rho.matrix)[-1])
    return MembershipVerdict(absolute=lam <= 1 / d + tol,
                             boundary=abs(lam - 1 / d) <= tol,
                             lambda_max=lam)


def max_global_fef(rho: DensityMatrix):
    """Supremum of the FEF over all global unitaries: lambda_max(rho)."""
    _require_square(rho)
    return float(np.linalg.eigvalsh(rho.matrix)[-1])


def activating_unitary(rho: DensityMatrix):
    """Global unitary rotating the top eigenvector onto |psi+>.

    Returns U = sum_k |m_k><v_k| with {v_k} the descending eigenbasis of rho
    and {m_k} an orthonormal basis whose first element is |psi+> (completed
    by Gram-Schmidt over the computational basis).  The rotated state
    achieves canonical overlap lambda_max.
    """
    _require_square(rho)
    d = rho.dim_a
    n = d * d
    spec = eig_hermitian(rho.matrix)
    targets = np.zeros((n, n), dtype=complex)
    targets[:, 0] = canonical_ket(d)
    filled = 1
    for j in range(n):
        if filled == n:
            break
        cand = np.zeros(n, dtype=complex)
        cand[j] = 1.0
        cand -= targets[:, :filled] @ (targets[:, :filled].conj().T @ cand)
        norm = float(np.linalg.norm(cand))
        if norm > 1e-8:
            targets[:, filled] = cand / norm
            filled += 1
    return targets @ spec.eigenvectors.conj().T


def purity(rho: DensityMatrix):
    """Tr(rho^2)."""
    return rho.purity()


def is_absolutely_separable_2q(spectrum):
    """Two-qubit absolute separability from the spectrum.

    The criterion is lambda_1 <= lambda_3 + 2 sqrt(lambda_2 lambda_4) on
    four descending eigenvalues summing to one.
    """
    lam = np.asarray(spectrum, dtype=float)
    if lam.shape != (4,):
        raise DomainError(f"expected 4 eigenvalues, got shape {lam.shape}")
    if np.any(lam < -1e-12):
        raise DomainError("eigenvalues must be nonnegative")
    if np.any(np.diff(lam) > 1e-12):
        raise DomainError("eigenvalues must be sorted in descending order")
    if abs(lam.sum() - 1) > 1e-9:
        raise DomainError(f"eigenvalues must sum to 1, got {lam.sum()!r}")
    return bool(lam[0] <= lam[2] + 2 * math.sqrt(max(lam[1] * lam[3], 0.0)) + 1e-12)


@dataclass(frozen=True)
class ClassificationReport:
    """Three-way teleportation-usefulness verdict for a state.

    ``k_copy_nonlocal`` is None for ABSOLUTE states: the spectral criterion
    gives no conclusion there, and the report must not claim locality.
    """

    label: str
    lambda_max: float
    fef_value: float
    threshold: float
    boundary: bool
    k_copy_nonlocal: Optional[bool]
    teleportation_useful: bool
    fef_converged: bool
    fef_restarts: int


def classify(rho: DensityMatrix, restarts=None, seed=0, tol=1e-8):
    """Classify a state as USEFUL, ACTIVATABLE or ABSOLUTE.

    USEFUL: FEF already exceeds 1/d.  ACTIVATABLE: FEF <= 1/d but some
    global unitary pushes it past the threshold (lambda_max > 1/d).
    ABSOLUTE: no global unitary can help (lambda_max <= 1/d).
    """
    _require_square(rho)
    d = rho.dim_a
    thr = 1 / d
    verdict = is_absolute_fef(rho)
    result = fef(rho, restarts=restarts, seed=seed, tol=tol)
    f_val = result.value

    if f_val > thr + BOUNDARY_TOL:
        label = LABEL_USEFUL
        k_copy = True
        useful = True
        boundary = False
    elif verdict.absolute:
        label = LABEL_ABSOLUTE
        k_copy = None
        useful = False
        boundary = verdict.boundary
    else:
        # activation exists; the activated state has FEF > 1/d, hence k-copy
        label = LABEL_ACTIVATABLE
        k_copy = True
        useful = False
        boundary = abs(f_val - thr) <= BOUNDARY_TOL
    return ClassificationReport(
        label=label, lambda_max=verdict.lambda_max, fef_value=f_val,
        threshold=thr, boundary=boundary, k_copy_nonlocal=k_copy,
        teleportation_useful=useful, fef_converged=result.converged,
        fef_restarts=result.restarts_used)


@dataclass(frozen=True)
class PurityBounds:
    """Purity thresholds bracketing the absolute-FEF set.

    ``max_purity_absolute``: largest Tr(rho^2) compatible with membership.
    ``min_purity_nonabsolute``: infimum of Tr(rho^2) over non-members; the
    infimum is not attained (the constraint lambda_1 > 1/d is open), which
    ``min_attained`` records.
    """

    d: int
    max_purity_absolute: float
    min_purity_nonabsolute: float
    witness_spectra: tuple
    min_attained: bool = False


def _analytic_purity_bounds(d):
    n = d * d
    max_spec = np.zeros(n)
    max_spec[:d] = 1 / d
    min_spec = np.full(n, 1 / (d * (d + 1)))
    min_spec[0] = 1 / d
    return float(np.sum(max_spec**2)), float(np.sum(min_spec**2)), max_spec, min_spec


def _cap_simplex(lam, cap):
    """Project a simplex point to the cap lambda_i <= cap, redistributing excess."""
    lam = lam.copy()
    for _ in range(lam.size):
        over = lam > cap
        if not over.any():
            break
        excess = float(np.sum(lam[over] - cap))
        lam[over] = cap
        free = ~over
        if not free.any():
            break
        lam[free] += excess * lam[free] / max(float(lam[free].sum()), 1e-300)
    return lam


def _numeric_max_purity(d, grid, rng):
    n = d * d
    cap = 1 / d
    best = -np.inf
    for _ in range(grid):
        lam = _cap_simplex(rng.dirichlet(np.full(n, 0.4)), cap)
        best = max(best, float(np.sum(lam**2)))
    # greedy polish: shift mass between pairs toward the capped vertex
    lam = _cap_simplex(rng.dirichlet(np.ones(n)), cap)
    step = 0.25
    val = float(np.sum(lam**2))
    while step > 1e-9:
        improved = False
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                delta = min(step, lam[j], cap - lam[i])
                if delta <= 0:
                    continue
                cand = lam.copy()
                cand[i] += delta
                cand[j] -= delta
                cval = float(np.sum(cand**2))
                if cval > val + 1e-16:
                    lam, val = cand, cval
                    improved = True
        if not improved:
            step *= 0.5
    return max(best, val)


def _numeric_min_purity(d, grid, rng):
    """Minimum purity with lambda_1 pinned just above 1/d, for shrinking eps."""
    n = d * d
    last = None
    for eps in (1e-3, 1e-4, 1e-5):
        lam1 = 1 / d + eps
        rest_total = 1 - lam1
        best = np.inf
        for _ in range(grid):
            rest = rng.dirichlet(np.ones(n - 1)) * rest_total
            best = min(best, lam1**2 + float(np.sum(rest**2)))
        # iterative averaging drives the free block to the equal split
        rest = rng.dirichlet(np.ones(n - 1)) * rest_total
        for _ in range(200):
            rest = 0.5 * (rest + rest_total / (n - 1))
        best = min(best, lam1**2 + float(np.sum(rest**2)))
        last = best
    return last


def purity_bounds(d, grid=2000, seed=0):
    """Analytic purity thresholds, cross-checked by projected random search.

    Raises if the numeric search disagrees with the closed forms (1e-6 for
    the maximum, 1e-4 for the shrinking-constraint minimum).
    """
    d = int(d)
    if d < 2:
        raise DomainError(f"d must be >= 2, got {d}")
    max_p, min_p, max_spec, min_spec = _analytic_purity_bounds(d)
    rng = np.random.default_rng(seed)
    num_max = _numeric_max_purity(d, grid, rng)
    num_min = _numeric_min_purity(d, grid, rng)
    if abs(num_max - max_p) > 1e-6:
        raise ArithmeticError(
            f"numeric max-purity search {num_max!r} disagrees with {max_p!r}")
    if abs(num_min - min_p) > 1e-4:
        raise ArithmeticError(
            f"numeric min-purity search {num_min!r} disagrees with {min_p!r}")
    return PurityBounds(d=d, max_purity_absolute=max_p,
                        min_purity_nonabsolute=min_p,
                        witness_spectra=(max_spec, min_spec),
                        min_attained=False)
