"""Dense complex matrix helpers and a Hermitian eigensolver.

Matrices are plain numpy ``complex128`` arrays. The eigensolver is a
cyclic Jacobi iteration with complex 2x2 rotations, accurate and fully
deterministic at desk scale (n <= 32); no LAPACK-backed routine is used
anywhere in the package, which keeps outputs byte-reproducible across
platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NoConvergence, NotHermitian

MAX_DIM = 32
MAX_SWEEPS = 100
DEFAULT_HERM_TOL = 1e-10


def as_matrix(m) -> np.ndarray:
    """Coerce to a 2D complex128 array."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise DomainError(f"expected a 2D matrix, got ndim={a.ndim}")
    return a


def frobenius(m) -> float:
    return float(np.sqrt(np.sum(np.abs(np.asarray(m)) ** 2)))


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def hermiticity_defect(m: np.ndarray) -> float:
    """Relative Frobenius defect ||M - M*|| / (||M|| + 1)."""
    return frobenius(m - dagger(m)) / (frobenius(m) + 1.0)


def require_hermitian(m, tol: float = DEFAULT_HERM_TOL) -> np.ndarray:
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NotHermitian(f"matrix is {a.shape[0]}x{a.shape[1]}, not square")
    if hermiticity_defect(a) > tol:
        raise NotHermitian(
            f"symmetry defect {hermiticity_defect(a):.3e} exceeds tol {tol:.3e}"
        )
    return a


@dataclass(frozen=True, eq=False)
class HermitianEigen:
    """Eigendecomposition M = U diag(w) U* with w ascending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        u = self.eigenvectors
        return (u * self.eigenvalues) @ dagger(u)


def hermitian_eig(m, tol: float = DEFAULT_HERM_TOL) -> HermitianEigen:
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Eigenvalues come back sorted ascending; ties keep the order in which
    the Jacobi iteration produced them, so outputs are deterministic.
    Raises NotHermitian on asymmetric input and NoConvergence if the
    off-diagonal mass has not vanished after 100 sweeps.
    """
    a = require_hermitian(m, tol)
    n = a.shape[0]
    if n > MAX_DIM:
        raise DomainError(f"dimension {n} exceeds the desk-scale cap {MAX_DIM}")
    work = a.copy()
    vecs = np.eye(n, dtype=np.complex128)
    scale = frobenius(work)
    off_target = 5e-15 * max(scale, 1.0)
    skip = off_target / (2.0 * n)
    off_mask = ~np.eye(n, dtype=bool)

    for _ in range(MAX_SWEEPS):
        off = math.sqrt(float(np.sum(np.abs(work[off_mask]) ** 2)))
        if off <= off_target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = work[p, q]
                ab = abs(b)
                if ab <= skip:
                    continue
                phase = b / ab
                app = work[p, p].real
                aqq = work[q, q].real
                tau = (aqq - app) / (2.0 * ab)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                cp = phase * c
                sp = phase * s
                col_p = work[:, p].copy()
                col_q = work[:, q].copy()
                work[:, p] = cp * col_p - s * col_q
                work[:, q] = sp * col_p + c * col_q
                row_p = work[p, :].copy()
                row_q = work[q, :].copy()
                work[p, :] = np.conj(cp) * row_p - s * row_q
                work[q, :] = np.conj(sp) * row_p + c * row_q
                work[p, q] = 0.0
                work[q, p] = 0.0
                work[p, p] = work[p, p].real
                work[q, q] = work[q, q].real
                vcol_p = vecs[:, p].copy()
                vcol_q = vecs[:, q].copy()
                vecs[:, p] = cp * vcol_p - s * vcol_q
                vecs[:, q] = sp * vcol_p + c * vcol_q
    else:
        raise NoConvergence(f"Jacobi sweep cap {MAX_SWEEPS} hit at n={n}")

    eigs = np.real(np.diag(work)).copy()
    order = np.argsort(eigs, kind="stable")
    return HermitianEigen(eigenvalues=eigs[order], eigenvectors=vecs[:, order])


def matrix_function(
    m,
    phi: Callable[[float], float],
    tol: float = DEFAULT_HERM_TOL,
    domain: tuple[float, float] | None = None,
) -> np.ndarray:
    """Spectral application U diag(phi(w)) U* of a scalar function.

    ``domain``, when given, is an open interval (lo, hi); any eigenvalue
    outside it raises DomainError before phi is called. The result is
    re-symmetrized so it is Hermitian to the last bit.
    """
    dec = hermitian_eig(m, tol)
    if domain is not None:
        lo, hi = domain
        for w in dec.eigenvalues:
            if not (lo < w < hi):
                raise DomainError(f"eigenvalue {w} outside domain ({lo}, {hi})")
    vals = np.array([float(phi(float(w))) for w in dec.eigenvalues])
    u = dec.eigenvectors
    out = (u * vals) @ dagger(u)
    return 0.5 * (out + dagger(out))


def min_eigenvalue(m, tol: float = DEFAULT_HERM_TOL) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    return float(hermitian_eig(m, tol).eigenvalues[0])
