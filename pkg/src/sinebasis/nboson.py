"""Energy bounds for N identical bosons with attractive pair potentials in 1D.

Units have hbar = 1, m = 1/2, and the centre-of-mass motion removed.
Closed forms cover the harmonic pair potential ``c x^2`` and the delta
potential ``-c delta(x)``. For a general pair potential ``c V(x)`` the
product of box ground states ``sqrt(2/a) cos(pi x / a)`` on
``[-a/2, a/2]`` gives

    E_U = (N - 1) min_a [ (pi/a)^2 + (N/2) c I(a) ],

where I(a) is the expectation of V(x1 - x2). The double integral
reduces to ``I(a) = int_{-a}^{a} g(s) V(s) ds`` with the distance
density of two independent particles

    g(s) = [ (a - |s|) (1 + cos(k s) / 2) + 3 sin(k |s|) / (2 k) ] / a^2,
    k = 2 pi / a,

obtained by integrating phi^2(x) phi^2(x + s) over the overlap of the
two boxes, an interval of length a - |s|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import DomainError, UnsupportedCaseError
from .optimizer import golden_section
from .potentials import Potential
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate

KINDS = ("harmonic", "delta", "general")

# ratio of the product-trial upper bound to the exact harmonic energy
HARMONIC_RATIO = math.sqrt(math.pi ** 2 / 3.0 - 2.0)


@dataclass(frozen=True)
class BosonSystem:
    N: int
    c: float
    kind: str = "harmonic"
    potential: Optional[Potential] = None

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise DomainError(f"particle count must be an integer >= 2, got {self.N}")
        if not self.c > 0:
            raise DomainError(f"coupling must be positive, got {self.c}")
        if self.kind not in KINDS:
            raise DomainError(f"unknown pair-potential kind {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.kind == "general":
            if self.potential is None:
                raise DomainError("kind 'general' needs a pair potential")
            if self.potential.point_interaction:
                # delta pair potentials only have closed forms
                object.__setattr__(self, "kind", "delta")


def lower_bound(sys: BosonSystem) -> float:
    """Bottom of the reduced one-body operator (N-1)[-2 d^2/dx^2 + (N/2) V]."""
    N, c = sys.N, sys.c
    if sys.kind == "harmonic":
        return math.sqrt(c) * (N - 1) * math.sqrt(N)
    if sys.kind == "delta":
        return -c * c * (N - 1) * N * N / 32.0
    raise UnsupportedCaseError("lower bounds for general pair potentials need the exact reduced ground state")


def exact_energy(sys: BosonSystem) -> float:
    N, c = sys.N, sys.c
    if sys.kind == "harmonic":
        return math.sqrt(c) * (N - 1) * math.sqrt(N)
    if sys.kind == "delta":
        return -c * c * N * (N * N - 1) / 48.0
    raise UnsupportedCaseError("no exact energy is known for general pair potentials")


def pair_distance_density(s, a: float):
    """Density g(s) of x1 - x2 for two independent box ground states of width a."""
    s = np.abs(np.asarray(s, dtype=float))
    k = 2.0 * math.pi / a
    g = ((a - s) * (1.0 + 0.5 * np.cos(k * s)) + 1.5 * np.sin(k * s) / k) / (a * a)
    return np.where(s < a, g, 0.0)


def pair_expectation(V, a: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """``I(a)``, the mean of V(x1 - x2) in the product trial state."""
    if not a > 0:
        raise DomainError(f"box size must be positive, got {a}")
    f = lambda s: pair_distance_density(s, a) * V(s)
    left, _ = integrate(f, -a, 0.0, cfg)
    right, _ = integrate(f, 0.0, a, cfg)
    return left + right


def trial_energy(sys: BosonSystem, a: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Unminimized product-trial energy at box size ``a``."""
    N, c = sys.N, sys.c
    kinetic = (math.pi / a) ** 2
    if sys.kind == "harmonic":
        pair = c * a * a * (1.0 / 3.0 - 2.0 / math.pi ** 2) / 2.0
    elif sys.kind == "delta":
        pair = -1.5 * c / a
    else:
        pair = c * pair_expectation(sys.potential, a, cfg)
    return (N - 1) * (kinetic + 0.5 * N * pair)


def upper_bound(sys: BosonSystem, a_range: Tuple[float, float] = (1e-3, 1e3),
                cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Product-trial upper bound; closed form unless kind is 'general'.

    The general case minimizes over log(a): a 161-point grid on
    ``a_range`` followed by golden-section.
    """
    N, c = sys.N, sys.c
    if sys.kind == "harmonic":
        return math.sqrt(c) * HARMONIC_RATIO * (N - 1) * math.sqrt(N)
    if sys.kind == "delta":
        return -9.0 * c * c * (N - 1) * N * N / (64.0 * math.pi ** 2)
    return minimize_box(sys, a_range, cfg)[1]


def minimize_box(sys: BosonSystem, a_range: Tuple[float, float] = (1e-3, 1e3),
                 cfg: QuadratureConfig = DEFAULT_CONFIG):
    """Numerically optimal box size; returns ``(a, E_U)``."""
    lo, hi = math.log(a_range[0]), math.log(a_range[1])
    f = lambda t: trial_energy(sys, math.exp(t), cfg)
    grid = np.linspace(lo, hi, 161)
    vals = [f(t) for t in grid]
    i = int(np.argmin(vals))
    t, val, _ = golden_section(f, grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)], 1e-9)
    if vals[i] < val:
        t, val = grid[i], vals[i]
    return math.exp(t), val
