"""Composite Gauss-Legendre quadrature and potential matrix elements.

Matrix elements of V between sine functions on ``[a, b]`` use

    phi_i phi_j = (cos((i-j) pi chi) - cos((i+j) pi chi)) / (b - a),

so ``P_ij = (C(|i-j|) - C(i+j)) / (b - a)`` with cosine moments
``C(m) = int_a^b V(x) cos(m pi chi) dx``. Polynomials of degree <= 4
get C(m) in closed form, other regular potentials get it by
quadrature. When V is singular at the left edge the two cosine terms
are separately non-integrable (only their difference vanishes there),
so the product of sines is integrated directly on graded panels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np

from .basis import BasisWindow, basis_matrix
from .errors import DomainError, IntegrationError
from .potentials import Potential

MAX_CLOSED_FORM_DEGREE = 4


@dataclass(frozen=True)
class QuadratureConfig:
    nodes_per_panel: int = 64
    panels: int = 8
    geometric_grading: float = 0.5
    target_rel_tol: float = 1e-12

    def __post_init__(self):
        if self.nodes_per_panel < 2:
            raise DomainError(f"nodes_per_panel must be >= 2, got {self.nodes_per_panel}")
        if self.panels < 1:
            raise DomainError(f"panels must be >= 1, got {self.panels}")
        if not 0.0 < self.geometric_grading <= 1.0:
            raise DomainError(f"geometric_grading must lie in (0, 1], got {self.geometric_grading}")
        if not self.target_rel_tol > 0:
            raise DomainError(f"target_rel_tol must be positive, got {self.target_rel_tol}")

    def refined(self) -> "QuadratureConfig":
        return QuadratureConfig(2 * self.nodes_per_panel, self.panels, self.geometric_grading, self.target_rel_tol)


DEFAULT_CONFIG = QuadratureConfig()


@lru_cache(maxsize=32)
def gauss_legendre(order: int) -> Tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def panel_breakpoints(a: float, b: float, cfg: QuadratureConfig, singular_left: bool = False,
                      min_panels: int = 1, pole_gap: Optional[float] = None) -> np.ndarray:
    """Panel edges on [a, b].

    With ``singular_left`` the ``cfg.panels`` panels shrink geometrically
    toward ``a``. If ``pole_gap`` (distance from ``a`` to a pole left of
    it) is smaller than the innermost panel, grading continues until the
    innermost panel fits in the gap. Any panel wider than
    ``(b - a) / min_panels`` is then split evenly, which keeps
    oscillatory integrands to a couple of periods per panel.
    """
    h = b - a
    P = cfg.panels
    g = cfg.geometric_grading
    if singular_left and g < 1.0 and pole_gap is not None and 0 < pole_gap < h:
        first = h * g ** (P - 1) * (1 - g) / (1 - g ** P)
        if first > pole_gap:
            P += math.ceil(math.log(pole_gap / first) / math.log(g))
    if singular_left and g < 1.0:
        widths = cfg.geometric_grading ** np.arange(P - 1, -1, -1, dtype=float)
        edges = a + h * np.concatenate([[0.0], np.cumsum(widths)]) / widths.sum()
    else:
        edges = np.linspace(a, b, P + 1)
    edges[-1] = b
    max_width = h / max(min_panels, 1)
    pieces = [edges[:1]]
    for lo, hi in zip(edges[:-1], edges[1:]):
        k = max(1, math.ceil((hi - lo) / max_width - 1e-12))
        pieces.append(np.linspace(lo, hi, k + 1)[1:])
    out = np.concatenate(pieces)
    out[-1] = b
    return out


def nodes_and_weights(a: float, b: float, cfg: QuadratureConfig, singular_left: bool = False,
                      min_panels: int = 1, pole_gap: Optional[float] = None) -> Tuple[np.ndarray, np.ndarray]:
    edges = panel_breakpoints(a, b, cfg, singular_left, min_panels, pole_gap)
    t, wt = gauss_legendre(cfg.nodes_per_panel)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    x = (mid[:, None] + half[:, None] * t).ravel()
    w = (half[:, None] * wt).ravel()
    return x, w


def _sample(f: Callable, x: np.ndarray) -> np.ndarray:
    try:
        with np.errstate(all="ignore"):
            y = np.asarray(f(x), dtype=float)
        if y.shape != x.shape:
            y = np.broadcast_to(y, x.shape).astype(float)
    except (TypeError, ValueError):
        y = np.array([float(f(xi)) for xi in x])
    bad = ~np.isfinite(y)
    if bad.any():
        x0 = float(x[np.argmax(bad)])
        raise IntegrationError(f"integrand is not finite at x = {x0!r}", abscissa=x0)
    return y


def integrate(f: Callable, a: float, b: float, cfg: QuadratureConfig = DEFAULT_CONFIG,
              singular_left: bool = False, min_panels: int = 1) -> Tuple[float, float]:
    """Integrate ``f`` over [a, b]; returns ``(value, error_estimate)``.

    The error estimate is the change when every panel gets twice as
    many nodes. ``f`` should accept numpy arrays; scalar-only callables
    are evaluated point by point.
    """
    if not a < b:
        raise DomainError(f"integration needs a < b, got [{a}, {b}]")
    x, w = nodes_and_weights(a, b, cfg, singular_left, min_panels)
    value = float(w @ _sample(f, x))
    xr, wr = nodes_and_weights(a, b, cfg.refined(), singular_left, min_panels)
    refined = float(wr @ _sample(f, xr))
    return value, abs(value - refined)


# -- cosine moments -------------------------------------------------------

_SIN_HALF = np.array([0.0, 1.0, 0.0, -1.0])  # sin(m pi / 2) by m mod 4
_COS_HALF = np.array([1.0, 0.0, -1.0, 0.0])


def polynomial_cos_moments(coeffs, a: float, b: float, m) -> np.ndarray:
    """Exact ``int_a^b p(x) cos(m pi (x-a)/(b-a)) dx`` for integer m >= 0.

    Expands p around the window midpoint, x = c + h u with u in
    [-1/2, 1/2], and integrates u^k cos(m pi u + m pi / 2) by parts.
    """
    m = np.asarray(m, dtype=np.int64)
    coeffs = [float(c) for c in coeffs]
    h = b - a
    c0 = 0.5 * (a + b)
    deg = len(coeffs) - 1
    if deg < 0:
        return np.zeros(m.shape)
    # coefficients of p(c0 + h u) in powers of u
    d = np.zeros(deg + 1)
    for k, ck in enumerate(coeffs):
        if ck == 0.0:
            continue
        for p in range(k + 1):
            d[p] += ck * math.comb(k, p) * c0 ** (k - p) * h ** p

    out = np.zeros(m.shape)
    zero = m == 0
    if zero.any():
        out[zero] = sum(d[p] * (0.5 ** (p + 1) - (-0.5) ** (p + 1)) / (p + 1) for p in range(deg + 1))
    pos = ~zero
    if pos.any():
        mp = m[pos]
        t = mp * math.pi
        s2 = _SIN_HALF[mp % 4]
        c2 = _COS_HALF[mp % 4]
        ic = 2.0 * s2 / t
        is_ = np.zeros_like(t)
        acc = d[0] * (c2 * ic - s2 * is_)
        for p in range(1, deg + 1):
            half_p = 0.5 ** p
            even = p % 2 == 0
            ic_new = (2.0 * half_p * s2 / t if even else 0.0) - (p / t) * is_
            is_new = (-2.0 * half_p * c2 / t if not even else 0.0) + (p / t) * ic
            ic, is_ = ic_new, is_new
            acc = acc + d[p] * (c2 * ic - s2 * is_)
        out[pos] = acc
    return h * out


def quadrature_cos_moments(V: Callable, a: float, b: float, m, cfg: QuadratureConfig,
                           singular_left: bool = False) -> np.ndarray:
    m = np.asarray(m, dtype=np.int64)
    min_panels = max(1, math.ceil(int(m.max(initial=0)) / 4))
    x, w = nodes_and_weights(a, b, cfg, singular_left, min_panels)
    wv = w * _sample(V, x)
    chi = (x - a) / (b - a)
    return np.cos(np.outer(m, math.pi * chi)) @ wv


# -- matrix elements ------------------------------------------------------

def _route(V: Potential) -> str:
    if V.polynomial is not None and len(V.polynomial) <= MAX_CLOSED_FORM_DEGREE + 1:
        return "closed_form"
    if V.singularity_order == 0:
        return "cosine_moments"
    return "sine_product"


def _pole_gap(V: Potential, w: BasisWindow) -> Optional[float]:
    gap = w.a - V.domain_left
    return gap if math.isfinite(gap) and gap > 0 else None


def potential_matrix_element(V: Potential, i: int, j: int, w: BasisWindow,
                             cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """``(phi_i, V phi_j)`` for 1-based indices on window ``w``."""
    for n in (i, j):
        if not 1 <= n <= w.N:
            raise IndexError(f"basis index {n} outside 1..{w.N}")
    V.check_window(w)
    i, j = min(i, j), max(i, j)
    if V.even and w.is_symmetric and (i + j) % 2:
        return 0.0
    h = w.width
    route = _route(V)
    if route == "closed_form":
        c = polynomial_cos_moments(V.polynomial, w.a, w.b, [j - i, i + j])
        return float((c[0] - c[1]) / h)
    if route == "cosine_moments":
        c = quadrature_cos_moments(V, w.a, w.b, [j - i, i + j], cfg)
        return float((c[0] - c[1]) / h)
    x, wt = nodes_and_weights(w.a, w.b, cfg, True, max(1, math.ceil((i + j) / 4)), _pole_gap(V, w))
    chi = (x - w.a) / h
    prod = (2.0 / h) * np.sin(i * math.pi * chi) * np.sin(j * math.pi * chi)
    return float(wt @ (_sample(V, x) * prod))


def _mirror_upper(P: np.ndarray) -> np.ndarray:
    return np.triu(P) + np.triu(P, 1).T


def _matrix(V: Potential, w: BasisWindow, cfg: QuadratureConfig) -> np.ndarray:
    N, h = w.N, w.width
    route = _route(V)
    if route == "sine_product":
        x, wt = nodes_and_weights(w.a, w.b, cfg, True, max(1, math.ceil(2 * N / 4)), _pole_gap(V, w))
        Phi = basis_matrix(w, x)
        P = (Phi * (wt * _sample(V, x))) @ Phi.T
    else:
        m = np.arange(2 * N + 1)
        if route == "closed_form":
            C = polynomial_cos_moments(V.polynomial, w.a, w.b, m)
        else:
            C = quadrature_cos_moments(V, w.a, w.b, m, cfg)
        n = np.arange(1, N + 1)
        P = (C[np.abs(n[:, None] - n[None, :])] - C[n[:, None] + n[None, :]]) / h
    P = _mirror_upper(P)
    if V.even and w.is_symmetric:
        n = np.arange(N)
        P[(n[:, None] + n[None, :]) % 2 == 1] = 0.0
    return P


def potential_matrix(V: Potential, w: BasisWindow, cfg: QuadratureConfig = DEFAULT_CONFIG,
                     estimate_error: bool = False) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """Full N x N potential matrix, optionally with per-element error estimates."""
    V.check_window(w)
    P = _matrix(V, w, cfg)
    if not estimate_error:
        return P, None
    if _route(V) == "closed_form":
        return P, np.zeros_like(P)
    return P, np.abs(P - _matrix(V, w, cfg.refined()))
