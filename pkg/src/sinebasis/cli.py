"""Command-line front end.

Examples::

    sinebasis solve --potential zero --window -1 1 --basis 3
    sinebasis optimize --potential harmonic --basis 50 --range 5.5 8 --states 0 1 2
    sinebasis scan --potential harmonic --basis 50 --range 5.5 8 --step 0.05 --states 0 1 2
    sinebasis optimize --potential singular_ABC --params 1 1 1 --dim 3 --ell 0 \\
        --basis 100 --a-range 0 1 --b-range 3 8
    sinebasis repro table1
    sinebasis nboson --kind delta --c 1 --n 3

Options can also come from a ``key = value`` file given with
``--config``; flags on the command line win.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import logging
import math
import sys
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from . import repro as repro_mod
from .basis import BasisWindow, symmetric_window
from .errors import ConstraintViolation, DomainError, IntegrationError, SolverError, UnsupportedCaseError
from .eigensolve import eigenvalues_symmetric
from .hamiltonian import assemble
from .nboson import KINDS, BosonSystem, exact_energy, lower_bound, upper_bound
from .optimizer import minimize_ab, minimize_L, minimize_L_joint, scan_L
from .potentials import CATALOG_NAMES, RadialProblem, catalog, effective_radial
from .quadrature import DEFAULT_CONFIG, QuadratureConfig

EXIT_OK, EXIT_TOLERANCE, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2, 3
# eigenvalue drift under node doubling allowed in `solve`, in units of target_rel_tol * max|H|
QUADRATURE_DRIFT_LIMIT = 1e3
COMMANDS = ("solve", "scan", "optimize", "repro", "nboson")

log = logging.getLogger("sinebasis")


class ConfigError(Exception):
    def __init__(self, field_name, message):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


@dataclass
class RunConfig:
    command: str
    potential: str = "harmonic"
    params: Tuple[float, ...] = ()
    d: Optional[int] = None
    ell: int = 0
    box: Optional[Tuple[float, float]] = None
    N: int = 50
    window: Optional[Tuple[float, float]] = None
    L: Optional[float] = None
    L_range: Optional[Tuple[float, float]] = None
    step: float = 0.05
    a_range: Optional[Tuple[float, float]] = None
    b_range: Optional[Tuple[float, float]] = None
    states: Optional[List[int]] = None
    joint: bool = False
    output: str = "csv"
    quadrature: QuadratureConfig = DEFAULT_CONFIG
    table: Optional[str] = None
    at_printed: bool = False
    jobs: int = 1
    kind: str = "harmonic"
    coupling: float = 1.0
    particles: int = 2
    basis_override: Optional[int] = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError("command", f"must be one of {', '.join(COMMANDS)}")
        if self.output not in ("csv", "json"):
            raise ConfigError("format", "must be csv or json")
        if self.N < 1:
            raise ConfigError("basis", "must be a positive integer")
        if self.d is not None and self.d < 2:
            raise ConfigError("dim", "radial mode requires d >= 2")
        if self.ell < 0:
            raise ConfigError("ell", "must be non-negative")
        if self.states is not None and (not self.states or min(self.states) < 0):
            raise ConfigError("states", "must be non-negative state indices")
        if self.command == "solve" and self.window is None and self.L is None:
            raise ConfigError("window", "solve needs --window A B or --L L")
        if self.window is not None and not self.window[0] < self.window[1]:
            raise ConfigError("window", "needs A < B")
        if self.command == "scan" and self.L_range is None:
            raise ConfigError("range", "scan needs --range LO HI")
        if self.command == "scan" and not self.step > 0:
            raise ConfigError("step", "must be positive")
        if self.command == "optimize" and self.L_range is None and self.b_range is None:
            raise ConfigError("range", "optimize needs --range LO HI or --a-range/--b-range")
        if self.command == "optimize" and (self.a_range is None) != (self.b_range is None):
            raise ConfigError("a-range" if self.a_range is None else "b-range",
                              "--a-range and --b-range must be given together")
        if self.command == "repro" and self.table not in repro_mod.TABLES:
            raise ConfigError("table", f"must be one of {', '.join(repro_mod.TABLES)}")
        if self.command == "nboson":
            if self.kind not in KINDS:
                raise ConfigError("kind", f"must be one of {', '.join(KINDS)}")
            if self.particles < 2:
                raise ConfigError("n", "needs at least 2 particles")
            if not self.coupling > 0:
                raise ConfigError("c", "coupling must be positive")
        if self.command in ("solve", "scan", "optimize"):
            if self.potential not in CATALOG_NAMES:
                raise ConfigError("potential", f"unknown name; choose from {', '.join(CATALOG_NAMES)}")
            V = self.build_potential()
            if V.singularity_order > 2:
                a = self.window[0] if self.window else (self.a_range[0] if self.a_range else 0.0)
                if self.window is not None and a <= 0:
                    raise ConfigError("window", f"{V.potential_id} is singular at r=0; needs a > 0")
                if self.window is None and self.a_range is None:
                    raise ConfigError("a-range", f"{V.potential_id} is singular at r=0; optimize over --a-range/--b-range")

    def build_potential(self):
        try:
            V = catalog(self.potential, self.params)
        except DomainError as exc:
            raise ConfigError("params" if self.potential in CATALOG_NAMES else "potential", str(exc)) from None
        if self.d is not None:
            try:
                V = effective_radial(RadialProblem(self.d, self.ell, V))
            except (UnsupportedCaseError, DomainError) as exc:
                raise ConfigError("dim", str(exc)) from None
        if self.box is not None:
            V = V.confined(*self.box)
        return V


# -- argument parsing -------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--potential", choices=CATALOG_NAMES)
    p.add_argument("--params", nargs="*", type=float)
    p.add_argument("--dim", type=int, help="spatial dimension; enables radial mode")
    p.add_argument("--ell", type=int)
    p.add_argument("--box", nargs=2, type=float, metavar=("LO", "HI"), help="confinement walls")
    p.add_argument("--basis", type=int, metavar="N")
    p.add_argument("--states", nargs="+", type=int)
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p.add_argument("--nodes", type=int, help="Gauss-Legendre nodes per panel")
    p.add_argument("--panels", type=int)
    p.add_argument("--grading", type=float)
    p.add_argument("--rtol", type=float, help="quadrature target relative tolerance")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sinebasis", description=__doc__.split("\n\n")[0], allow_abbrev=False)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", allow_abbrev=False, help="eigenvalues on a fixed window")
    _common(p)
    p.add_argument("--window", nargs=2, type=float, metavar=("A", "B"))
    p.add_argument("--L", type=float, help="symmetric window [-L, L]")

    p = sub.add_parser("scan", allow_abbrev=False, help="eigenvalue curves over the window size")
    _common(p)
    p.add_argument("--range", nargs=2, type=float, metavar=("LO", "HI"))
    p.add_argument("--step", type=float)

    p = sub.add_parser("optimize", allow_abbrev=False, help="minimize eigenvalues over the window")
    _common(p)
    p.add_argument("--range", nargs=2, type=float, metavar=("LO", "HI"))
    p.add_argument("--a-range", nargs=2, type=float, metavar=("LO", "HI"))
    p.add_argument("--b-range", nargs=2, type=float, metavar=("LO", "HI"))
    p.add_argument("--joint", action="store_true", help="one window for all requested states")

    p = sub.add_parser("repro", allow_abbrev=False, help="regenerate a benchmark table")
    p.add_argument("table", choices=tuple(repro_mod.TABLES))
    p.add_argument("--basis", type=int, metavar="N", help="override the basis size")
    p.add_argument("--at-printed", action="store_true", help="use the published windows instead of minimizing")
    p.add_argument("--jobs", type=int)
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--output", metavar="PATH")
    p.add_argument("-v", "--verbose", action="store_true")

    p = sub.add_parser("nboson", allow_abbrev=False, help="N-boson energy bounds")
    p.add_argument("--kind", choices=KINDS)
    p.add_argument("--c", type=float)
    p.add_argument("--n", type=int, help="number of particles")
    p.add_argument("--potential", choices=CATALOG_NAMES, help="pair potential for --kind general")
    p.add_argument("--params", nargs="*", type=float)
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--output", metavar="PATH")
    p.add_argument("-v", "--verbose", action="store_true")
    return parser


def _read_config(path: str) -> List[str]:
    """``key = value`` lines to argv tokens (``command`` is returned first)."""
    cp = configparser.ConfigParser()
    try:
        with open(path) as fh:
            cp.read_string("[run]\n" + fh.read())
    except (OSError, configparser.Error) as exc:
        raise ConfigError("config", str(exc)) from None
    tokens, command, table = [], [], []
    for key, value in cp["run"].items():
        key = key.replace("_", "-")
        if key == "command":
            command = [value.strip()]
        elif key == "table":
            table = [value.strip()]
        elif value.strip().lower() in ("true", "yes", "on"):
            tokens.append(f"--{key}")
        elif value.strip().lower() in ("false", "no", "off", ""):
            continue
        else:
            tokens += [f"--{key}", *value.split()]
    return command + table + tokens


def _merge_argv(argv: Sequence[str]) -> List[str]:
    pre = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    if known.config is None:
        return list(rest)
    from_file = _read_config(known.config)
    file_cmd = [t for t in from_file[:2] if not t.startswith("--")]
    file_opts = from_file[len(file_cmd):]
    if rest and not rest[0].startswith("-"):
        cli_cmd = [rest[0]]
        rest = rest[1:]
        if cli_cmd[0] == "repro" and rest and not rest[0].startswith("-"):
            cli_cmd.append(rest[0])
            rest = rest[1:]
        elif cli_cmd[0] == "repro" and len(file_cmd) > 1:
            cli_cmd.append(file_cmd[1])
    else:
        cli_cmd = file_cmd
    return cli_cmd + file_opts + list(rest)


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    g = lambda name, default=None: default if getattr(ns, name, None) is None else getattr(ns, name)
    quad = QuadratureConfig(
        g("nodes", DEFAULT_CONFIG.nodes_per_panel),
        g("panels", DEFAULT_CONFIG.panels),
        g("grading", DEFAULT_CONFIG.geometric_grading),
        g("rtol", DEFAULT_CONFIG.target_rel_tol),
    )
    pair = lambda v: None if v is None else (float(v[0]), float(v[1]))
    return RunConfig(
        command=ns.command,
        potential=g("potential", "harmonic"),
        params=tuple(g("params", ())),
        d=g("dim"),
        ell=g("ell", 0),
        box=pair(g("box")),
        N=g("basis", 50),
        window=pair(g("window")),
        L=g("L"),
        L_range=pair(g("range")),
        step=g("step", 0.05),
        a_range=pair(g("a_range")),
        b_range=pair(g("b_range")),
        states=g("states"),
        joint=bool(g("joint", False)),
        output=g("format", "csv"),
        quadrature=quad,
        table=g("table"),
        at_printed=bool(g("at_printed", False)),
        jobs=g("jobs", 1),
        kind=g("kind", "harmonic"),
        coupling=g("c", 1.0),
        particles=g("n", 2),
        basis_override=g("basis"),
    )


# -- output -----------------------------------------------------------------

def fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.10g}"
    return str(v)


def _jsonable(v):
    if isinstance(v, float):
        return float(f"{v:.10g}") if math.isfinite(v) else None
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if hasattr(v, "item"):
        return _jsonable(v.item())
    return v


def render(columns: List[str], rows: List[dict], meta: dict, output: str) -> str:
    if output == "json":
        doc = {"meta": _jsonable(meta), "rows": [_jsonable({c: r.get(c) for c in columns}) for r in rows]}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt(r.get(c)) for c in columns])
    return buf.getvalue()


def _meta(cfg: RunConfig, **extra) -> dict:
    meta = {
        "command": cfg.command,
        "potential": cfg.potential,
        "params": list(cfg.params),
        "N": cfg.N,
        "quadrature": asdict(cfg.quadrature),
        "version": __version__,
    }
    if cfg.d is not None:
        meta.update(d=cfg.d, l=cfg.ell)
    if cfg.box is not None:
        meta["box"] = list(cfg.box)
    meta.update(extra)
    return meta


# -- commands ---------------------------------------------------------------

def _window(cfg: RunConfig, V) -> BasisWindow:
    if cfg.window is not None:
        return BasisWindow(cfg.window[0], cfg.window[1], cfg.N)
    if V.is_radial:
        return BasisWindow(V.domain_left, cfg.L, cfg.N)
    return symmetric_window(cfg.L, cfg.N)


def _solve(cfg: RunConfig):
    V = cfg.build_potential()
    w = _window(cfg, V)
    states = cfg.states if cfg.states is not None else list(range(cfg.N))
    H = assemble(V, w, cfg.quadrature, estimate_error=True)
    # Weyl: no eigenvalue moves by more than N * max |dP| under node doubling
    drift = w.N * H.quadrature_error
    if drift > QUADRATURE_DRIFT_LIMIT * cfg.quadrature.target_rel_tol * float(np.abs(H.entries).max()):
        raise IntegrationError(f"quadrature not converged on [{w.a!r}, {w.b!r}]: eigenvalues may shift by "
                               f"{drift:.3e} under node doubling", abscissa=w.a)
    spec = eigenvalues_symmetric(H, max(states) + 1)
    rows = [{"state": n, "eigenvalue": spec[n]} for n in states]
    meta = _meta(cfg, window=[w.a, w.b], residual_bound=spec.residual_bound, quadrature_drift=drift)
    return ["state", "eigenvalue"], rows, meta, EXIT_OK


def _scan(cfg: RunConfig):
    V = cfg.build_potential()
    states = cfg.states if cfg.states is not None else [0]
    res = scan_L(V, cfg.N, states, cfg.L_range, cfg.step, cfg.quadrature)
    cols = res.header()
    rows = [dict(zip(cols, r)) for r in res.rows()]
    minima = {f"eps_{n}": {"L": L, "value": v} for n, (L, v) in zip(res.states, res.minima)}
    return cols, rows, _meta(cfg, L_range=list(cfg.L_range), step=cfg.step, minima=minima), EXIT_OK


def _optimize(cfg: RunConfig):
    V = cfg.build_potential()
    states = cfg.states if cfg.states is not None else [0]
    cols = ["state", "a", "b", "value", "evaluations"]
    rows = []
    if cfg.joint:
        rep = minimize_L_joint(V, cfg.N, max(states) + 1, cfg.L_range, cfg.quadrature)
        for n in states:
            rows.append(dict(state=n, a=rep.best_window.a, b=rep.best_window.b,
                             value=rep.values[n], evaluations=rep.evaluations))
        return cols, rows, _meta(cfg, L_range=list(cfg.L_range), mode="joint"), EXIT_OK
    for n in states:
        if cfg.a_range is not None:
            rep = minimize_ab(V, cfg.N, n, cfg.a_range, cfg.b_range, cfg.quadrature)
        else:
            rep = minimize_L(V, cfg.N, n, cfg.L_range, cfg.quadrature)
        rows.append(dict(state=n, a=rep.best_window.a, b=rep.best_window.b,
                         value=rep.best_value, evaluations=rep.evaluations))
    ranges = {"a_range": list(cfg.a_range), "b_range": list(cfg.b_range)} if cfg.a_range else \
        {"L_range": list(cfg.L_range)}
    return cols, rows, _meta(cfg, **ranges), EXIT_OK


def _repro(cfg: RunConfig):
    table = repro_mod.run(cfg.table, basis=cfg.basis_override, at_printed=cfg.at_printed or None,
                          jobs=cfg.jobs, cfg=cfg.quadrature if cfg.table != "nboson" else None)
    code = EXIT_OK if table.ok else EXIT_TOLERANCE
    worst = table.max_abs_delta
    print(f"{table.name}: {len(table.rows)} rows, max |delta| = {fmt(worst)}, "
          f"{'PASS' if table.ok else 'FAIL (%d rows out of tolerance)' % len(table.failures())}",
          file=sys.stderr)
    return table.columns, table.rows, table.meta, code


def _nboson(cfg: RunConfig):
    V = catalog(cfg.potential, cfg.params) if cfg.kind == "general" else None
    s = BosonSystem(cfg.particles, cfg.coupling, cfg.kind, V)

    def maybe(fn):
        try:
            return fn(s)
        except UnsupportedCaseError:
            return None

    row = dict(kind=s.kind, N=s.N, c=s.c, E_L=maybe(lower_bound), E_exact=maybe(exact_energy),
               E_U=upper_bound(s))
    meta = {"command": "nboson", "kind": s.kind, "N": s.N, "c": s.c, "version": __version__}
    if V is not None:
        meta["pair_potential"] = V.potential_id
    return ["kind", "N", "c", "E_L", "E_exact", "E_U"], [row], meta, EXIT_OK


HANDLERS = {"solve": _solve, "scan": _scan, "optimize": _optimize, "repro": _repro, "nboson": _nboson}


def run(cfg: RunConfig, out=None) -> int:
    """Validate, execute and emit; returns the process exit code."""
    out = out or sys.stdout
    try:
        cfg.validate()
        cols, rows, meta, code = HANDLERS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DomainError, UnsupportedCaseError, ConstraintViolation) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (IntegrationError, SolverError, FloatingPointError, ArithmeticError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    out.write(render(cols, rows, meta, cfg.output))
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        merged = _merge_argv(argv)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    parser = build_parser()
    try:
        ns = parser.parse_args(merged)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if getattr(ns, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(ns)
    except DomainError as exc:
        print(f"config error: quadrature: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    path = getattr(ns, "output", None)
    if path:
        with open(path, "w", newline="") as fh:
            return run(cfg, fh)
    return run(cfg)
