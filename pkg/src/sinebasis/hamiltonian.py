"""Assembly of the variational matrix H = K + P on a sine-basis window."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .basis import BasisWindow, kinetic_diagonals
from .potentials import Potential
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, potential_matrix


@dataclass(frozen=True)
class HamiltonianMatrix:
    entries: np.ndarray = field(repr=False)
    window: BasisWindow
    potential_id: str
    quadrature_error: Optional[float] = None

    @property
    def N(self) -> int:
        return self.window.N

    def to_csv(self, path) -> None:
        """Row-major dump with a ``# N=.., a=.., b=..`` header line."""
        with open(path, "w", newline="") as fh:
            fh.write(f"# N={self.N}, a={self.window.a!r}, b={self.window.b!r}, potential={self.potential_id}\n")
            writer = csv.writer(fh)
            for row in self.entries:
                writer.writerow([repr(float(v)) for v in row])

    @classmethod
    def from_csv(cls, path) -> "HamiltonianMatrix":
        with open(path) as fh:
            header = fh.readline().lstrip("# ").strip()
            meta = dict(item.split("=", 1) for item in header.split(", "))
            rows = [[float(v) for v in row] for row in csv.reader(fh)]
        entries = np.array(rows)
        entries.setflags(write=False)
        w = BasisWindow(float(meta["a"]), float(meta["b"]), int(meta["N"]))
        return cls(entries, w, meta.get("potential", "unknown"))


def assemble(V: Potential, w: BasisWindow, cfg: QuadratureConfig = DEFAULT_CONFIG,
             estimate_error: bool = False) -> HamiltonianMatrix:
    """Build ``H_ij = delta_ij (i pi / (b-a))^2 + (phi_i, V phi_j)``.

    K is diagonal and exact. With ``estimate_error`` the largest change
    of any P element under node doubling is recorded.
    """
    P, err = potential_matrix(V, w, cfg, estimate_error=estimate_error)
    H = P
    H[np.diag_indices(w.N)] += kinetic_diagonals(w)
    H.setflags(write=False)
    qerr = float(err.max()) if err is not None else None
    return HamiltonianMatrix(H, w, V.potential_id, qerr)
