"""Potentials, the d-dimensional radial reduction and exact reference energies."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .basis import BasisWindow
from .errors import ConstraintViolation, DomainError, UnsupportedCaseError

LINE = -math.inf

# relative tolerance for the quasi-exact constraint (2 sqrt C + B)^2 = C (1 + 8 sqrt C)
CONSTRAINT_RTOL = 1e-12


@dataclass(frozen=True)
class Potential:
    """A potential energy function plus the metadata assembly needs.

    ``evaluator`` must accept numpy arrays. ``singularity_order`` is the
    power p for which ``V(r) * r**p`` stays bounded at ``domain_left``.
    ``polynomial`` (ascending coefficients, degree <= 4) enables the
    closed-form matrix element path.
    """

    evaluator: Callable = field(compare=False)
    name: str = "custom"
    params: Tuple[float, ...] = ()
    domain_left: float = LINE
    singularity_order: int = 0
    confinement_box: Optional[Tuple[float, float]] = None
    polynomial: Optional[Tuple[float, ...]] = None
    even: bool = False
    point_interaction: bool = False

    def __call__(self, x):
        return self.evaluator(x)

    @property
    def potential_id(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({', '.join(f'{p:g}' for p in self.params)})"

    @property
    def is_radial(self) -> bool:
        return self.domain_left != LINE

    def confined(self, left: float, right: float) -> "Potential":
        """Same potential with infinite walls outside ``[left, right]``."""
        if not left < right:
            raise DomainError(f"confinement box needs left < right, got [{left}, {right}]")
        return replace(self, confinement_box=(float(left), float(right)))

    def check_window(self, w: BasisWindow) -> None:
        if self.point_interaction:
            raise DomainError(f"{self.name}: point interactions have no quadrature matrix elements")
        if w.a < self.domain_left:
            raise DomainError(
                f"window [{w.a}, {w.b}] extends below the domain edge {self.domain_left} of {self.potential_id}"
            )
        # sin*sin vanishes quadratically at the window edge, so r^-2 integrands stay bounded there
        if self.singularity_order > 2 and w.a <= self.domain_left:
            raise DomainError(
                f"{self.potential_id} has an r^-{self.singularity_order} singularity; "
                f"window left endpoint must exceed {self.domain_left}"
            )
        if self.confinement_box is not None:
            lo, hi = self.confinement_box
            if w.a < lo or w.b > hi:
                raise DomainError(
                    f"window [{w.a}, {w.b}] is not inside the confinement box [{lo}, {hi}]"
                )


def centrifugal_coefficient(d: int, ell: int) -> float:
    """Coefficient of 1/r^2 in the effective radial potential."""
    return (2 * ell + d - 1) * (2 * ell + d - 3) / 4.0


@dataclass(frozen=True)
class RadialProblem:
    d: int
    ell: int
    V: Potential

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise DomainError(f"radial problems need integer d >= 2, got d={self.d}")
        if int(self.ell) != self.ell or self.ell < 0:
            raise DomainError(f"angular momentum must be a non-negative integer, got {self.ell}")
        if self.d == 2 and self.ell == 0:
            raise UnsupportedCaseError(
                "d=2, l=0 gives U(r) = V(r) - 1/(4 r^2), a failure of the effective "
                "potential representation; this case is not supported"
            )


def effective_radial(p: RadialProblem) -> Potential:
    """Line problem on r > 0 equivalent to the radial equation of ``p``."""
    coeff = centrifugal_coefficient(p.d, p.ell)
    base = p.V

    def U(r):
        r = np.asarray(r, dtype=float)
        return base(r) + coeff / (r * r)

    return Potential(
        evaluator=U,
        name=f"{base.name}[d={p.d},l={p.ell}]",
        params=base.params,
        domain_left=0.0,
        singularity_order=max(2, base.singularity_order),
        confinement_box=base.confinement_box,
    )


def _polynomial(coeffs):
    c = np.asarray(coeffs, dtype=float)
    return lambda x: np.polynomial.polynomial.polyval(np.asarray(x, dtype=float), c)


def _zero():
    return Potential(_polynomial([0.0]), name="zero", polynomial=(), even=True)


def _harmonic():
    return Potential(_polynomial([0, 0, 1]), name="harmonic", polynomial=(0.0, 0.0, 1.0), even=True)


def _quartic_anharmonic():
    coeffs = (0.0, 0.0, 1.0, 0.0, 1.0)
    return Potential(_polynomial(coeffs), name="quartic_anharmonic", polynomial=coeffs, even=True)


def _hydrogenic(e):
    e2 = e * e
    return Potential(
        lambda r: -e2 / np.asarray(r, dtype=float),
        name="hydrogenic",
        params=(e,),
        domain_left=0.0,
        singularity_order=1,
    )


def _singular_abc(A, B, C):
    def V(r):
        r = np.asarray(r, dtype=float)
        r2 = r * r
        return A * r2 + B / (r2 * r2) + C / (r2 * r2 * r2)

    order = 6 if C != 0 else (4 if B != 0 else 0)
    return Potential(
        V,
        name="singular_ABC",
        params=(A, B, C),
        domain_left=0.0,
        singularity_order=order,
        polynomial=(0.0, 0.0, float(A)) if order == 0 else None,
    )


def _sine_squared_confined(V0):
    return Potential(
        lambda x: V0 * np.sin(np.asarray(x, dtype=float)) ** 2,
        name="sine_squared_confined",
        params=(V0,),
        confinement_box=(-math.pi / 2, math.pi / 2),
        even=True,
    )


def _delta():
    def V(x):
        raise DomainError("the delta potential cannot be evaluated pointwise")

    return Potential(V, name="delta", point_interaction=True, even=True)


_CATALOG = {
    "zero": (0, _zero),
    "harmonic": (0, _harmonic),
    "quartic_anharmonic": (0, _quartic_anharmonic),
    "hydrogenic": (1, _hydrogenic),
    "singular_ABC": (3, _singular_abc),
    "sine_squared_confined": (1, _sine_squared_confined),
    "delta": (0, _delta),
}

CATALOG_NAMES = tuple(_CATALOG)


def catalog(name: str, params: Sequence[float] = ()) -> Potential:
    """Build a named potential.

    =====================  ======  ==============================
    name                   params  V
    =====================  ======  ==============================
    zero                   -       0
    harmonic               -       x^2
    quartic_anharmonic     -       x^2 + x^4
    hydrogenic             e       -e^2 / r
    singular_ABC           A B C   A r^2 + B r^-4 + C r^-6
    sine_squared_confined  V0      V0 sin^2 x inside |x| <= pi/2
    delta                  -       -delta(x), pair potentials only
    =====================  ======  ==============================
    """
    try:
        arity, build = _CATALOG[name]
    except KeyError:
        raise DomainError(f"unknown potential {name!r}; choose from {', '.join(CATALOG_NAMES)}") from None
    params = tuple(float(p) for p in params)
    if len(params) != arity:
        raise DomainError(f"potential {name!r} takes {arity} parameter(s), got {len(params)}")
    return build(*params)


def oscillator_exact_energy(n: int, ell: int, d: int) -> int:
    """Exact level of -Laplacian + r^2 in d dimensions; n counts from 1."""
    return 4 * n + 2 * ell + d - 4


def hydrogen_exact_energy(n: int, ell: int, e: float = 1.0) -> float:
    """Exact level of -Laplacian - e^2/r in three dimensions; n counts from 1."""
    return -(e ** 4) / (4.0 * (n + ell) ** 2)


def singular_ground_state(B: float, C: float) -> float:
    """Ground state of -d^2/dr^2 + r^2 + B r^-4 + C r^-6 on the solvable manifold.

    Raises ConstraintViolation (carrying the relative residual) when
    ``(2 sqrt C + B)^2 = C (1 + 8 sqrt C)`` does not hold to 1e-12.
    """
    if not C > 0:
        raise DomainError(f"C must be positive, got {C}")
    s = math.sqrt(C)
    rhs = C * (1.0 + 8.0 * s)
    residual = abs((2.0 * s + B) ** 2 - rhs) / rhs
    if residual > CONSTRAINT_RTOL:
        raise ConstraintViolation(
            f"(B, C) = ({B}, {C}) is off the solvable manifold (relative residual {residual:.3e})",
            residual,
        )
    return 4.0 + B / s


class ConfinedHydrogenCase(NamedTuple):
    ell: int
    n: int
    b: float
    E: float


def confined_hydrogen_cases() -> list:
    """Exactly solvable confined hydrogen problems with A = 1.

    Each radius is a node of an unconfined hydrogenic radial function,
    so that function (and its energy) solves the box problem. One-node
    functions give b = (l+2)(2l+2); two-node functions give the pair
    b = (l+3)(2l+3 -/+ sqrt(2l+3)), the inner one as state n=1 and the
    outer one as n=2.
    """
    rows = []
    for ell in range(4):
        nu = ell + 2
        rows.append(ConfinedHydrogenCase(ell, 1, float(nu * (2 * ell + 2)), -1.0 / (4 * nu * nu)))
    for ell in range(4):
        nu = ell + 3
        k = 2 * ell + 3
        root = math.isqrt(k) if math.isqrt(k) ** 2 == k else math.sqrt(k)
        E = -1.0 / (4 * nu * nu)
        rows.append(ConfinedHydrogenCase(ell, 1, nu * (k - root) * 1.0, E))
        rows.append(ConfinedHydrogenCase(ell, 2, nu * (k + root) * 1.0, E))
    return rows
