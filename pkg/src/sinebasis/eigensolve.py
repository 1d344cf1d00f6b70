"""Dense symmetric eigenvalues under a residual contract."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .basis import BasisWindow
from .errors import DomainError, SolverError

RESIDUAL_LIMIT = 1e-10


@dataclass(frozen=True)
class SpectrumEstimate:
    """Lowest ``k`` eigenvalues of an ``basis_size`` x ``basis_size`` matrix."""

    eigenvalues: np.ndarray
    window: Optional[BasisWindow]
    basis_size: int
    residual_bound: float
    vectors: Optional[np.ndarray] = field(default=None, repr=False)

    def __len__(self):
        return len(self.eigenvalues)

    def __getitem__(self, k):
        return float(self.eigenvalues[k])


def jacobi_eigh(A: np.ndarray, max_sweeps: int = 60, tol: float = 1e-15):
    """Cyclic Jacobi rotations; returns ``(eigenvalues, vectors)`` unsorted."""
    A = np.array(A, dtype=float)
    n = A.shape[0]
    V = np.eye(n)
    scale = np.linalg.norm(A) or 1.0
    offdiag = ~np.eye(n, dtype=bool)
    for sweep in range(max_sweeps + 1):
        # summed directly; ||A||^2 - ||diag||^2 cancels catastrophically near convergence
        off = float(np.linalg.norm(A[offdiag]))
        if off <= tol * scale:
            return np.diag(A).copy(), V
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                A[p, q] = A[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    raise SolverError(f"Jacobi iteration did not converge after {max_sweeps} sweeps", iterations=max_sweeps)


def eigenvalues_symmetric(M, k: Optional[int] = None, method: str = "lapack",
                          return_vectors: bool = False) -> SpectrumEstimate:
    """Lowest ``k`` eigenvalues of a symmetric matrix, ascending.

    ``M`` is a HamiltonianMatrix or a plain square array. ``method`` is
    ``"lapack"`` (numpy's eigh) or ``"jacobi"``. Raises SolverError if
    ``max ||M v - e v|| / ||M||`` exceeds 1e-10.
    """
    A = np.asarray(getattr(M, "entries", M), dtype=float)
    window = getattr(M, "window", None)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    if not np.array_equal(A, A.T):
        raise DomainError("matrix is not exactly symmetric")
    k = n if k is None else k
    if not 1 <= k <= n:
        raise DomainError(f"k must lie in 1..{n}, got {k}")

    if method == "lapack":
        vals, vecs = np.linalg.eigh(A)
    elif method == "jacobi":
        vals, vecs = jacobi_eigh(A)
    else:
        raise DomainError(f"unknown eigensolver method {method!r}")
    order = np.argsort(vals, kind="stable")
    vals, vecs = vals[order], vecs[:, order]
    norm = float(np.max(np.abs(vals))) or 1.0

    # Rayleigh-quotient polish: the solver's eigenvalues carry roundoff of
    # order eps * ||A||, while v.Av / v.v is only second order in the vector
    # error. A large ||A|| (strongly singular potentials) otherwise costs
    # several digits on the low states.
    V = vecs[:, :k]
    AV = A @ V
    rq = np.einsum("ij,ij->j", V, AV) / np.einsum("ij,ij->j", V, V)
    order = np.argsort(rq, kind="stable")
    rq, V, AV = rq[order], V[:, order], AV[:, order]
    vals, vecs = rq, V
    R = AV - V * rq
    residual = float(np.max(np.linalg.norm(R, axis=0))) / norm
    if not residual <= RESIDUAL_LIMIT:
        raise SolverError(f"eigen-residual {residual:.3e} exceeds {RESIDUAL_LIMIT:g}")
    out = vals.copy()
    out.setflags(write=False)
    return SpectrumEstimate(out, window, n, residual, vecs.copy() if return_vectors else None)
