"""Two-qubit Bloch parameters and the Class-I / Class-II membership criteria.

Conventions: rho = I/4 + (1/2) sum a_i s_i (x) I + (1/2) sum b_j I (x) s_j
+ sum t_ij s_i (x) s_j, with a_i = Tr(rho s_i (x) I)/2 and
t_ij = Tr(rho s_i (x) s_j)/4.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bases import PAULI
from .errors import DomainError, MatrixShapeError
from .linalg import DensityMatrix, kron

_MEMBER_TOL = 1e-12


@dataclass(frozen=True)
class BlochParams:
    """Local Bloch vectors and the correlation matrix of a two-qubit state."""

    a: np.ndarray
    b: np.ndarray
    t: np.ndarray

    def reconstruct(self):
        sig = PAULI[1:]
        rho = np.eye(4, dtype=complex) / 4
        for i in range(3):
            rho += 0.5 * self.a[i] * kron(sig[i], np.eye(2))
            rho += 0.5 * self.b[i] * kron(np.eye(2), sig[i])
            for j in range(3):
                rho += self.t[i, j] * kron(sig[i], sig[j])
        return rho


def bloch_extract(rho: DensityMatrix):
    """Extract (a, b, T) from a two-qubit state."""
    if (rho.dim_a, rho.dim_b) != (2, 2):
        raise MatrixShapeError(
            f"Bloch extraction needs a 2x2 bipartition, got {rho.dim_a}x{rho.dim_b}")
    sig = PAULI[1:]
    eye = np.eye(2)
    m = rho.matrix
    a = np.array([np.real(np.sum(kron(s, eye) * m.T)) / 2 for s in sig])
    b = np.array([np.real(np.sum(kron(eye, s) * m.T)) / 2 for s in sig])
    t = np.array([[np.real(np.sum(kron(si, sj) * m.T)) / 4 for sj in sig]
                  for si in sig])
    return BlochParams(a=a, b=b, t=t)


class ClassIResult(NamedTuple):
    member: bool
    eigenvalues: tuple


def classI_membership(t11, t22, t33):
    """Absolute-FEF membership for states with zero Bloch vectors and
    diagonal correlations.

    Eigenvalues are (1 -/+ 4(sums of t_ii))/4; membership holds iff the
    largest combination of the correlations stays at or below 1/4.
    """
    t11, t22, t33 = float(t11), float(t22), float(t33)
    eigs = (
        0.25 * (1 - 4 * (t11 + t22 + t33)),
        0.25 * (1 + 4 * (t11 + t22 - t33)),
        0.25 * (1 + 4 * (t11 - t22 + t33)),
        0.25 * (1 + 4 * (t22 + t33 - t11)),
    )
    if min(eigs) < -1e-12:
        raise DomainError(
            f"(t11, t22, t33) = ({t11}, {t22}, {t33}) is not a valid state: "
            f"smallest eigenvalue {min(eigs):.3e}")
    combos = (-(t11 + t22 + t33), t11 + t22 - t33,
              t11 - t22 + t33, -t11 + t22 + t33)
    return ClassIResult(member=max(combos) <= 0.25 + _MEMBER_TOL,
                        eigenvalues=eigs)


def classII_membership(a, b, c, d):
    """Absolute-FEF membership for computational-basis-diagonal states.

    With a3 = (a+b-c-d)/2, b3 = (a+c-b-d)/2, t33 = (a-b-c+d)/4, membership
    requires |a3+b3| + 2 t33 <= 1/2 and |a3-b3| - 2 t33 <= 1/2, which is
    equivalent to max(a, b, c, d) <= 1/2.  Weights need not be ordered.
    """
    w = np.array([a, b, c, d], dtype=float)
    if np.any(w < -1e-12):
        raise DomainError("weights must be nonnegative")
    if abs(w.sum() - 1) > 1e-12:
        raise DomainError(f"weights must sum to 1, got {w.sum()!r}")
    a, b, c, d = w
    a3 = (a + b - c - d) / 2
    b3 = (a + c - b - d) / 2
    t33 = (a - b - c + d) / 4
    return bool(abs(a3 + b3) + 2 * t33 <= 0.5 + _MEMBER_TOL
                and abs(a3 - b3) - 2 * t33 <= 0.5 + _MEMBER_TOL)
