"""Particle-in-a-box sine functions scaled to an arbitrary window [a, b]."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class BasisWindow:
    """Interval ``[a, b]`` carrying ``N`` Dirichlet sine functions."""

    a: float
    b: float
    N: int

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"window endpoints must be finite, got [{self.a}, {self.b}]")
        if not self.a < self.b:
            raise DomainError(f"window requires a < b, got [{self.a}, {self.b}]")
        if int(self.N) != self.N or self.N < 1:
            raise DomainError(f"basis size must be a positive integer, got {self.N}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    @property
    def width(self) -> float:
        return self.b - self.a

    @property
    def is_symmetric(self) -> bool:
        return self.a == -self.b

    def with_size(self, N: int) -> "BasisWindow":
        return BasisWindow(self.a, self.b, N)


def symmetric_window(L: float, N: int) -> BasisWindow:
    """Window ``[-L, L]`` of size ``N``."""
    if not L > 0:
        raise DomainError(f"half-width L must be positive, got {L}")
    return BasisWindow(-L, L, N)


def _check_index(n: int, w: BasisWindow) -> None:
    if not 1 <= n <= w.N:
        raise IndexError(f"basis index {n} outside 1..{w.N}")


def basis_function(n: int, w: BasisWindow, x):
    """Evaluate the n-th (1-based) normalized sine function at ``x``.

    Accepts scalars or arrays. Points outside the window evaluate to
    exactly zero, and the endpoints themselves are exact zeros too.
    """
    _check_index(n, w)
    xs = np.asarray(x, dtype=float)
    chi = (xs - w.a) / w.width
    inside = (chi > 0.0) & (chi < 1.0)
    vals = np.where(inside, math.sqrt(2.0 / w.width) * np.sin(n * math.pi * chi), 0.0)
    return float(vals) if vals.ndim == 0 else vals


def basis_matrix(w: BasisWindow, x) -> np.ndarray:
    """All N basis functions sampled at ``x``; shape ``(N, len(x))``."""
    xs = np.asarray(x, dtype=float)
    chi = (xs - w.a) / w.width
    n = np.arange(1, w.N + 1)
    vals = math.sqrt(2.0 / w.width) * np.sin(np.outer(n, math.pi * chi))
    vals[:, (chi <= 0.0) | (chi >= 1.0)] = 0.0
    return vals


def kinetic_diagonal(n: int, w: BasisWindow) -> float:
    """Exact kinetic energy ``(n pi / (b - a))**2`` of the n-th function."""
    _check_index(n, w)
    return (n * math.pi / w.width) ** 2


def kinetic_diagonals(w: BasisWindow) -> np.ndarray:
    n = np.arange(1, w.N + 1, dtype=float)
    return (n * math.pi / w.width) ** 2
