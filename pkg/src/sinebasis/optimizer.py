"""Minimization of variational eigenvalues over the basis window."""

from __future__ import annotations

import csv
import io
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .basis import BasisWindow, symmetric_window
from .eigensolve import SpectrumEstimate, eigenvalues_symmetric
from .errors import DomainError
from .hamiltonian import assemble
from .potentials import Potential
from .quadrature import DEFAULT_CONFIG, QuadratureConfig

log = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
SINGULAR_A_FLOOR = 1e-4
COARSE_POINTS = 25
WINDOW_TOL = 1e-3

States = Union[int, Sequence[int]]


def estimate_spectrum(V: Potential, w: BasisWindow, k: Optional[int] = None,
                      cfg: QuadratureConfig = DEFAULT_CONFIG, method: str = "lapack") -> SpectrumEstimate:
    """Assemble H on ``w`` and return its lowest ``k`` eigenvalues."""
    return eigenvalues_symmetric(assemble(V, w, cfg), k, method=method)


def window_for(V: Potential, L: float, N: int) -> BasisWindow:
    """``[-L, L]`` for line problems, ``[domain_left, L]`` for radial ones."""
    if V.is_radial:
        return BasisWindow(V.domain_left, L, N)
    return symmetric_window(L, N)


def max_window_size(V: Potential) -> float:
    if V.confinement_box is None:
        return math.inf
    lo, hi = V.confinement_box
    return hi if V.is_radial else min(-lo, hi)


def _as_states(states: States) -> List[int]:
    out = [int(states)] if np.isscalar(states) else [int(s) for s in states]
    if not out or min(out) < 0:
        raise DomainError(f"state indices must be non-negative, got {states}")
    return out


def golden_section(f: Callable[[float], float], lo: float, hi: float, tol: float = WINDOW_TOL):
    """Golden-section search on [lo, hi] until the bracket is narrower than ``tol``.

    Returns ``(x, f(x), evaluations)`` for the best point evaluated.
    """
    if hi - lo <= tol:
        x = 0.5 * (lo + hi)
        return x, f(x), 1
    c = hi - INV_PHI * (hi - lo)
    d = lo + INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    best = min((fc, c), (fd, d))
    evals = 2
    while hi - lo > tol:
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - INV_PHI * (hi - lo)
            fc = f(c)
            best = min(best, (fc, c))
        else:
            lo, c, fc = c, d, fd
            d = lo + INV_PHI * (hi - lo)
            fd = f(d)
            best = min(best, (fd, d))
        evals += 1
    return best[1], best[0], evals


def _coarse_then_golden(f, lo, hi, coarse_points=COARSE_POINTS, tol=WINDOW_TOL):
    """Grid scan, then golden-section in the cell pair around the best node.

    Returns ``(x, fx, evaluations, coarse_best)``.
    """
    if hi <= lo:
        return lo, f(lo), 1, None
    grid = np.linspace(lo, hi, coarse_points)
    vals = [f(x) for x in grid]
    i = int(np.argmin(vals))
    coarse = (float(vals[i]), float(grid[i]))
    x, fx, n = golden_section(f, grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)], tol)
    best = min(coarse, (fx, x))
    return best[1], best[0], len(grid) + n, coarse[0]


@dataclass(frozen=True)
class ScanResult:
    parameter_grid: np.ndarray
    states: Tuple[int, ...]
    eigencurves: Tuple[np.ndarray, ...]
    minima: Tuple[Tuple[float, float], ...]

    def rows(self):
        for idx, L in enumerate(self.parameter_grid):
            yield [float(L)] + [float(curve[idx]) for curve in self.eigencurves]

    def header(self):
        return ["L"] + [f"eps_{n}" for n in self.states]

    def to_csv(self, fh=None) -> str:
        """CSV with columns ``L, eps_<n>...`` at 10 significant digits."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header())
        for row in self.rows():
            writer.writerow([f"{v:.10g}" for v in row])
        text = buf.getvalue()
        if fh is not None:
            fh.write(text)
        return text


@dataclass(frozen=True)
class OptimizationReport:
    state_index: int
    best_window: BasisWindow
    best_value: float
    evaluations: int
    coarse_best: Optional[float] = None
    sweep_values: Tuple[float, ...] = ()
    values: Tuple[float, ...] = field(default=(), repr=False)


def scan_L(V: Potential, N: int, states: States, L_range: Tuple[float, float], step: float,
           cfg: QuadratureConfig = DEFAULT_CONFIG, workers: int = 1) -> ScanResult:
    """Tabulate eigenvalue curves eps_n(L) on an evenly spaced L grid."""
    st = _as_states(states)
    lo, hi = map(float, L_range)
    if not (0 < lo <= hi) or not step > 0:
        raise DomainError(f"scan needs 0 < L_min <= L_max and step > 0, got {L_range}, step={step}")
    if hi > max_window_size(V):
        raise DomainError(f"L range {L_range} exceeds the confinement half-width {max_window_size(V)}")
    k = max(st) + 1
    if k > N:
        raise DomainError(f"state {max(st)} needs a basis of at least {k} functions, got N={N}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    grid = lo + step * np.arange(count)

    def column(L):
        return estimate_spectrum(V, window_for(V, float(L), N), k, cfg).eigenvalues

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            spectra = list(pool.map(column, grid))
    else:
        spectra = [column(L) for L in grid]
    table = np.array(spectra)
    curves = tuple(table[:, n].copy() for n in st)
    minima = tuple((float(grid[int(np.argmin(c))]), float(np.min(c))) for c in curves)
    return ScanResult(grid, tuple(st), curves, minima)


def _clamped_L_range(V, L_range):
    lo, hi = map(float, L_range)
    cap = max_window_size(V)
    if hi > cap:
        log.debug("clamping L_max %g to confinement half-width %g", hi, cap)
        hi = cap
    if not 0 < lo <= hi:
        raise DomainError(f"L range must satisfy 0 < L_min <= L_max, got ({lo}, {hi})")
    return lo, hi


def minimize_L(V: Potential, N: int, state: int, L_range: Tuple[float, float],
               cfg: QuadratureConfig = DEFAULT_CONFIG, coarse_points: int = COARSE_POINTS,
               tol: float = WINDOW_TOL) -> OptimizationReport:
    """Best window size for one state: coarse grid, then golden-section."""
    lo, hi = _clamped_L_range(V, L_range)
    if state + 1 > N:
        raise DomainError(f"state {state} needs N > {state}, got N={N}")

    def f(L):
        return estimate_spectrum(V, window_for(V, L, N), state + 1, cfg)[state]

    L, val, evals, coarse = _coarse_then_golden(f, lo, hi, coarse_points, tol)
    return OptimizationReport(state, window_for(V, L, N), val, evals, coarse)


def minimize_L_joint(V: Potential, N: int, k: int, L_range: Tuple[float, float],
                     cfg: QuadratureConfig = DEFAULT_CONFIG, coarse_points: int = COARSE_POINTS,
                     tol: float = WINDOW_TOL) -> OptimizationReport:
    """One window for the lowest ``k`` states, minimizing their sum."""
    lo, hi = _clamped_L_range(V, L_range)

    def f(L):
        return float(np.sum(estimate_spectrum(V, window_for(V, L, N), k, cfg).eigenvalues))

    L, val, evals, coarse = _coarse_then_golden(f, lo, hi, coarse_points, tol)
    w = window_for(V, L, N)
    values = tuple(float(v) for v in estimate_spectrum(V, w, k, cfg).eigenvalues)
    return OptimizationReport(k - 1, w, val, evals + 1, coarse, values=values)


def minimize_ab(V: Potential, N: int, state: int, a_range: Tuple[float, float],
                b_range: Tuple[float, float], cfg: QuadratureConfig = DEFAULT_CONFIG,
                coarse_points: int = COARSE_POINTS, tol: float = WINDOW_TOL,
                rtol: float = 1e-12, max_sweeps: int = 20) -> OptimizationReport:
    """Coordinate descent over both window endpoints.

    The first sweep scans each coordinate over its whole range; later
    sweeps golden-search a few grid cells around the incumbent. A move
    is only taken if it does not raise the eigenvalue, so sweep values
    never increase.
    """
    a_lo, a_hi = map(float, a_range)
    b_lo, b_hi = map(float, b_range)
    if a_lo > a_hi or b_lo > b_hi:
        raise DomainError(f"ranges must be ordered, got a={a_range}, b={b_range}")
    if not a_hi < b_lo:
        raise DomainError(f"need max(a_range) < min(b_range), got a={a_range}, b={b_range}")
    if V.singularity_order > 2:
        # r^-2 and milder are integrable against sin*sin, so only stronger poles need the floor
        a_lo = max(a_lo, SINGULAR_A_FLOOR)
        if a_hi < a_lo:
            raise DomainError(f"a range {a_range} lies below the singular floor {SINGULAR_A_FLOOR}")
    if V.is_radial:
        a_lo = max(a_lo, V.domain_left)
    if V.confinement_box is not None:
        a_lo = max(a_lo, V.confinement_box[0])
        b_hi = min(b_hi, V.confinement_box[1])
    a_hi, b_lo = max(a_hi, a_lo), min(b_lo, b_hi)
    if state + 1 > N:
        raise DomainError(f"state {state} needs N > {state}, got N={N}")

    evals = 0

    def energy(a, b):
        nonlocal evals
        evals += 1
        return estimate_spectrum(V, BasisWindow(a, b, N), state + 1, cfg)[state]

    ranges = [(a_lo, a_hi), (b_lo, b_hi)]
    point = [0.5 * (a_lo + a_hi), 0.5 * (b_lo + b_hi)]
    current = energy(*point)
    sweeps = [current]
    free = [c for c in (0, 1) if ranges[c][1] > ranges[c][0]]
    for sweep in range(max_sweeps):
        for c in free:
            lo, hi = ranges[c]

            def f(x, c=c):
                p = list(point)
                p[c] = x
                return energy(*p)

            if sweep == 0:
                x, fx, _, _ = _coarse_then_golden(f, lo, hi, coarse_points, tol)
            else:
                cell = 2.0 * (hi - lo) / (coarse_points - 1)
                x, fx, _ = golden_section(f, max(lo, point[c] - cell), min(hi, point[c] + cell), tol)
            if fx <= current:
                point[c], current = x, fx
        sweeps.append(current)
        log.debug("sweep %d: a=%.6g b=%.6g eps=%.15g", sweep, point[0], point[1], current)
        if len(free) < 2 or sweeps[-2] - current <= rtol * abs(current):
            break
    return OptimizationReport(state, BasisWindow(point[0], point[1], N), current, evals,
                              sweep_values=tuple(sweeps))
