"""Command-line driver: ``lossychain <command> [options]``.

Every table is written with 17 significant digits, ``\\n`` line endings and a
``#`` provenance header, so repeated runs are byte-identical.  Complex values
are split into ``re_<name>`` / ``im_<name>`` columns.

Exit codes: 0 success, 1 usage or domain error, 2 numerical failure.
"""
from __future__ import annotations

import argparse
import dataclasses
import itertools
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import __version__
from .errors import DomainError, NumericalError

COMMANDS = ("params", "spectrum", "phase-diagram", "evolve", "entropy", "fit", "oracle", "luttinger")
MAX_POINTS = 10 ** 6
RANGED = ("cells", "lam", "eta")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    cells: Any = 100
    lam: Any = 0.2
    eta: Any = 0.3
    boundary: str = "periodic"
    orientation: int = 1
    pairs: list | None = None
    initial: str = "half_filling_real_band"
    t_min: float = 0.0
    t_max: float = 10.0
    n_t: int = 11
    log_t: bool = False
    times: list | None = None
    lengths: list | None = None
    n_k: int = 512
    grid: int = 101
    operator: str = "h_eff"
    analytic: bool = False
    observable: str = "density"
    kind: str = "spatial"
    check: str = "all"
    gamma: float = 0.1
    velocity: float = 1.0
    g2: float = 0.0
    q: list = field(default_factory=lambda: [0.5])
    wide: bool = False
    out: str | None = None
    format: str = "csv"
    gnuplot_header: bool = False
    jobs: int = 1

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        return cls(**d)


# --- grids ----------------------------------------------------------------------------

def parse_values(spec, name: str, integer: bool = False) -> list:
    """``0.1``, ``"0.1,0.2"`` or ``"start:stop:num"`` -> strictly increasing list."""
    if isinstance(spec, (list, tuple)):
        vals = [float(x) for x in spec]
    elif isinstance(spec, str) and ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise DomainError(f"{name}: range must be start:stop:num, got {spec!r}")
        start, stop, num = float(parts[0]), float(parts[1]), int(parts[2])
        vals = list(np.linspace(start, stop, num)) if num > 0 else []
    elif isinstance(spec, str):
        vals = [float(x) for x in spec.split(",") if x.strip()]
    else:
        vals = [float(spec)]
    if not vals:
        raise DomainError(f"{name}: empty range")
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise DomainError(f"{name}: grid must be strictly increasing")
    if integer:
        if any(v != int(v) for v in vals):
            raise DomainError(f"{name}: expected integers")
        return [int(v) for v in vals]
    return [float(v) for v in vals]


def time_grid(cfg: RunConfig) -> np.ndarray:
    if cfg.times is not None:
        return np.array(parse_values(cfg.times, "times"))
    if cfg.n_t < 1:
        raise DomainError("n_t must be positive")
    if cfg.log_t:
        if cfg.t_min <= 0:
            raise DomainError("log time grid needs t_min > 0")
        ts = np.logspace(np.log10(cfg.t_min), np.log10(cfg.t_max), cfg.n_t)
    else:
        ts = np.linspace(cfg.t_min, cfg.t_max, cfg.n_t)
    if cfg.n_t > 1 and np.any(np.diff(ts) <= 0):
        raise DomainError("time grid must be strictly increasing")
    return ts


def sweep_points(cfg: RunConfig) -> list[dict]:
    """Cartesian product of ranged parameters, outer range major."""
    if cfg.pairs is not None:
        pts = []
        for p in cfg.pairs:
            lam, eta = (float(x) for x in (p.split(",") if isinstance(p, str) else p))
            pts.append({"cells": parse_values(cfg.cells, "cells", True)[0], "lam": lam, "eta": eta})
        if not pts:
            raise DomainError("pairs: empty list")
        return pts
    axes = {
        "cells": parse_values(cfg.cells, "cells", integer=True),
        "lam": parse_values(cfg.lam, "lambda"),
        "eta": parse_values(cfg.eta, "eta"),
    }
    ranged = [k for k, v in axes.items() if len(v) > 1]
    if len(ranged) > 2:
        raise DomainError(f"at most two ranged parameters, got {ranged}")
    total = int(np.prod([len(v) for v in axes.values()]))
    if total > MAX_POINTS:
        raise DomainError(f"sweep of {total} points exceeds {MAX_POINTS}; coarsen a range")
    return [dict(zip(axes, combo)) for combo in itertools.product(*axes.values())]


# --- tables ---------------------------------------------------------------------------

@dataclass
class Table:
    columns: list
    rows: list
    summary: dict = field(default_factory=dict)


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if x == 0.0:
            x = 0.0  # normalize -0.0
        return f"{x:.16e}"
    return str(x)


def _json_value(x):
    if isinstance(x, (np.bool_, bool)):
        return bool(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating, float)):
        return float(_fmt(x))
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


def render(table: Table, cfg: RunConfig, argv: list[str]) -> str:
    provenance = {
        "artifact": f"lossychain {__version__}",
        "command_line": " ".join(argv),
        "config": json.loads(cfg.to_json()),
    }
    if cfg.format == "json":
        doc = {"provenance": provenance, "summary": _json_value(table.summary),
               "columns": table.columns, "rows": [_json_value(list(r)) for r in table.rows]}
        return json.dumps(doc, sort_keys=True, indent=1) + "\n"
    lines = [
        f"# artifact: lossychain {__version__}",
        f"# command: {provenance['command_line']}",
        f"# parameters: {json.dumps(provenance['config'], sort_keys=True)}",
    ]
    if table.summary:
        lines.append(f"# summary: {json.dumps(_json_value(table.summary), sort_keys=True)}")
    if cfg.gnuplot_header:
        lines.append("# columns: " + " ".join(f"{i + 1}:{c}" for i, c in enumerate(table.columns)))
    lines.append(",".join(table.columns))
    lines.extend(",".join(_fmt(v) for v in row) for row in table.rows)
    return "\n".join(lines) + "\n"


def write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".partial-")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


# --- commands -------------------------------------------------------------------------

def _spec(cfg: RunConfig, pt: dict):
    from .model import ModelSpec

    return ModelSpec(pt["cells"], pt["lam"], pt["eta"], cfg.boundary, cfg.orientation)


def _cplx(z):
    return (float(np.real(z)), float(np.imag(z)))


def cmd_params(cfg: RunConfig, pt: dict) -> Table:
    from .model import derive_params

    d = derive_params(pt["lam"], pt["eta"]).as_dict()
    return Table(list(d), [tuple(d.values())])


def cmd_spectrum(cfg: RunConfig, pt: dict) -> Table:
    from .model import derive_params
    from .spectral import bloch_momenta, classify_phase, dispersion_pbc, spectrum_report

    spec = _spec(cfg, pt)
    if cfg.analytic:
        params = derive_params(spec.lam, spec.eta)
        k = bloch_momenta(spec.n_cells)
        plus, minus = dispersion_pbc(params, k)
        rows = [(float(kk), *_cplx(a), *_cplx(b)) for kk, a, b in zip(k, plus, minus)]
        return Table(["k", "re_eps_plus", "im_eps_plus", "re_eps_minus", "im_eps_minus"], rows,
                     {"phase_class": classify_phase(spec.lam, spec.eta).value})
    rep = spectrum_report(spec, cfg.operator)
    ev = rep.eigenvalues[np.lexsort((rep.eigenvalues.imag, rep.eigenvalues.real))]
    rows = [(i, *_cplx(z)) for i, z in enumerate(ev)]
    return Table(["index", "re_eps", "im_eps"], rows,
                 {"phase_class": rep.phase_class.value, "gap_slow": rep.liouvillian_gap,
                  "gap_fast": rep.gap_fast})


def phase_point(lam: float, eta: float, n_k: int) -> tuple:
    from .spectral import classify_phase, pbc_gaps

    slow, fast = pbc_gaps(lam, eta, n_k)
    return (lam, eta, classify_phase(lam, eta).value, slow, fast)


def _phase_row(args):
    return phase_point(*args)


def cmd_phase_diagram(cfg: RunConfig) -> Table:
    if cfg.grid < 2:
        raise DomainError("phase-diagram grid needs at least 2 points per axis")
    edge = 1e-6
    axis = [min(max(j / (cfg.grid - 1), edge), 1.0 - edge) for j in range(cfg.grid)]
    tasks = [(lam, eta, cfg.n_k) for lam in axis for eta in axis]
    rows = _map(_phase_row, tasks, cfg.jobs)
    return Table(["lambda", "eta", "class", "gap_slow", "gap_fast"], rows)


def cmd_evolve(cfg: RunConfig, pt: dict) -> Table:
    from .dynamics import density_momentum, density_real, evolve, prepare_initial_state
    from .model import build_operators

    ops = build_operators(_spec(cfg, pt))
    state = prepare_initial_state(ops, cfg.initial)
    ts = time_grid(cfg)
    states = evolve(state, ops, ts)
    rows = []
    if cfg.observable == "density":
        for t, s in zip(ts, states):
            rows.extend((float(t), x, float(n)) for x, n in enumerate(density_real(s)))
        return Table(["t", "site", "n"], rows)
    if cfg.observable == "momentum":
        summary_asym = []
        for t, s in zip(ts, states):
            md = density_momentum(s, ops)
            summary_asym.append(md.asymmetry())
            rows.extend((float(t), float(k), float(n), float(b[0]), float(b[1]), bool(f))
                        for k, n, b, f in zip(md.k, md.total, md.bands, md.flagged))
        return Table(["t", "k", "n_k", "n_band_plus", "n_band_minus", "flagged"], rows,
                     {"asymmetry": summary_asym})
    if cfg.observable == "trace":
        from .dynamics import momentum_asymmetry, momentum_correlation

        for t, s in zip(ts, states):
            n = density_real(s)
            half = n.size // 2
            row = [float(t), s.trace, float(n[:half].sum() - n[half:].sum())]
            if ops.spec.periodic:
                k, Ck = momentum_correlation(s)
                row.append(momentum_asymmetry(k, np.einsum("kss->k", Ck).real))
            else:
                row.append(float("nan"))
            rows.append(tuple(row))
        return Table(["t", "trace", "left_minus_right", "k_asymmetry"], rows)
    raise DomainError(f"unknown observable {cfg.observable!r}")


def _lengths(cfg: RunConfig, n_sites: int) -> list[int]:
    if cfg.lengths is None:
        return [n_sites // 2]
    return parse_values(cfg.lengths, "lengths", integer=True)


def cmd_entropy(cfg: RunConfig, pt: dict) -> Table:
    from .dynamics import evolve, prepare_initial_state
    from .entanglement import block_entropy, block_spectrum, entropy_eq7_variant, z_ratio
    from .model import build_operators

    ops = build_operators(_spec(cfg, pt))
    state0 = prepare_initial_state(ops, cfg.initial)
    ts = time_grid(cfg)
    rows = []
    for t, s in zip(ts, evolve(state0, ops, ts)):
        for l in _lengths(cfg, ops.n_sites):
            z = z_ratio(s, state0, l)
            try:
                variant = entropy_eq7_variant(block_spectrum(s, l), block_spectrum(state0, l), z)
            except DomainError:
                variant = float("nan")
            rows.append((float(t), l, block_entropy(s, l), z, variant))
    return Table(["t", "l", "S", "z_ratio", "S_variant"], rows)


def cmd_fit(cfg: RunConfig, pt: dict) -> Table:
    from .dynamics import evolve, prepare_initial_state
    from .entanglement import EntropyRecord, block_entropy, fit_spatial, fit_temporal
    from .model import build_operators
    from .spectral import pbc_gaps

    ops = build_operators(_spec(cfg, pt))
    state0 = prepare_initial_state(ops, cfg.initial)
    ts = time_grid(cfg)
    L = ops.n_sites
    if cfg.kind == "spatial":
        rows = []
        for t, s in zip(ts, evolve(state0, ops, ts)):
            recs = [EntropyRecord(float(t), l, block_entropy(s, l)) for l in range(4, L - 3)]
            f = fit_spatial(recs, L)
            rows.append((float(t), f.a, f.b, f.c, f.residual_rms))
        return Table(["t", "a", "b", "c", "residual_rms"], rows)
    S = np.array([block_entropy(s, L // 2) for s in evolve(state0, ops, ts)])
    if cfg.kind == "short_time":
        S = S - block_entropy(state0, L // 2)
    res = fit_temporal(ts, S, cfg.kind)
    res["gap_slow"] = pbc_gaps(pt["lam"], pt["eta"])[0]
    return Table(list(res), [tuple(res.values())])


def cmd_oracle(cfg: RunConfig, pt: dict) -> Table:
    from .dynamics import evolve, prepare_initial_state
    from .entanglement import block_entropy
    from .model import build_operators
    from .oracle import (correlation_from_rho, from_operator_set, lindblad_integrate,
                         reduced_left, slater_state, superoperator_spectrum)
    from .entanglement import von_neumann
    from .spectral import many_body_spectrum, multiset_distance, rapidities, spectrum_numeric

    spec = _spec(cfg, pt)
    ops = build_operators(spec)
    sysf = from_operator_set(ops)
    ts = time_grid(cfg)
    checks = ["correlation", "entropy", "spectrum"] if cfg.check == "all" else [cfg.check]
    rows = []
    initials = ["all_filled", "half_filling_real_band"]
    if "correlation" in checks or "entropy" in checks:
        err_c, err_s = 0.0, 0.0
        for rule in initials:
            st = prepare_initial_state(ops, rule)
            rhos = lindblad_integrate(sysf, slater_state(sysf, st.C), ts)
            for s, rho in zip(evolve(st, ops, ts), rhos):
                err_c = max(err_c, float(np.abs(s.C - correlation_from_rho(sysf, rho)).max()))
                for l in range(1, ops.n_sites):
                    exact = von_neumann(reduced_left(rho, ops.n_sites, l))
                    err_s = max(err_s, abs(block_entropy(s, l) - exact))
        if "correlation" in checks:
            rows.append(("correlation", err_c, 1e-8, err_c <= 1e-8))
        if "entropy" in checks:
            rows.append(("entropy", err_s, 1e-8, err_s <= 1e-8))
    if "spectrum" in checks:
        exact = superoperator_spectrum(sysf)
        cand = many_body_spectrum(rapidities(spectrum_numeric(ops.D)), deduplicate=False)
        err = multiset_distance(exact, cand)
        rows.append(("spectrum", err, 1e-8, err <= 1e-8))
    unknown = set(checks) - {"correlation", "entropy", "spectrum"}
    if unknown:
        raise DomainError(f"unknown check {sorted(unknown)}")
    return Table(["check", "max_error", "tolerance", "passed"], rows)


def cmd_luttinger(cfg: RunConfig) -> Table:
    from .luttinger import LuttingerParams, bogoliubov_short_time, msee_short_time

    qs = parse_values(cfg.q, "q")
    params = LuttingerParams(v=cfg.velocity, g2=cfg.g2, gamma=cfg.gamma, q_grid=tuple(qs))
    rows = []
    for t in time_grid(cfg):
        pairs = [bogoliubov_short_time(params, q, float(t)) for q in qs]
        total = msee_short_time(pairs, cfg.gamma)
        for p, s in zip(pairs, total.per_mode):
            rows.append((float(t), p.q, *_cplx(p.u), *_cplx(p.v_coef), abs(p.v_coef) ** 2, float(s),
                         total.S, total.decay_factor, p.flagged))
    return Table(["t", "q", "re_u", "im_u", "re_v", "im_v", "n", "s_q", "S", "decay_factor",
                  "flagged"], rows)


POINT_COMMANDS = {
    "params": cmd_params, "spectrum": cmd_spectrum, "evolve": cmd_evolve,
    "entropy": cmd_entropy, "fit": cmd_fit, "oracle": cmd_oracle,
}


def _run_point(args):
    cfg, pt = args
    return POINT_COMMANDS[cfg.command](cfg, pt)


def _map(fn, tasks, jobs: int):
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [fn(t) for t in tasks]


def sweep(cfg: RunConfig) -> Table:
    points = sweep_points(cfg)
    tables = _map(_run_point, [(cfg, pt) for pt in points], cfg.jobs)
    if len(points) == 1:
        return tables[0]
    if cfg.wide and cfg.command == "entropy":
        return _widen(points, tables)
    columns = ["cells", "lambda", "eta"] + tables[0].columns
    rows = [(pt["cells"], pt["lam"], pt["eta"], *row) for pt, tb in zip(points, tables) for row in tb.rows]
    summary = {f"{pt['cells']},{pt['lam']},{pt['eta']}": tb.summary for pt, tb in zip(points, tables)
               if tb.summary}
    return Table(columns, rows, summary)


def _widen(points, tables) -> Table:
    """One ``S`` column per parameter point; needs a single block length."""
    keys = [(r[0], r[1]) for r in tables[0].rows]
    if len({k[1] for k in keys}) != 1:
        raise DomainError("--wide needs a single block length")
    cols = ["t", "l"] + [f"S_lam{pt['lam']:g}_eta{pt['eta']:g}" for pt in points]
    rows = [(t, l, *(tb.rows[i][2] for tb in tables)) for i, (t, l) in enumerate(keys)]
    return Table(cols, rows)


def run(cfg: RunConfig) -> tuple[Table, int]:
    if cfg.command not in COMMANDS:
        raise UsageError(f"unknown command {cfg.command!r}")
    if cfg.format not in ("csv", "json"):
        raise UsageError(f"unknown format {cfg.format!r}")
    if cfg.command == "phase-diagram":
        table = cmd_phase_diagram(cfg)
    elif cfg.command == "luttinger":
        table = cmd_luttinger(cfg)
    else:
        table = sweep(cfg)
    status = 0
    if cfg.command == "oracle" and not all(r[-1] for r in table.rows):
        status = 2
    return table, status


# --- argument parsing -----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    S = argparse.SUPPRESS
    common = _Parser(add_help=False, argument_default=S)
    common.add_argument("--config", help="JSON config file; flags override its values")
    common.add_argument("--dump-config", action="store_true", help="print the resolved config and exit")
    common.add_argument("--cells", help="unit cells N (int, list or start:stop:num)")
    common.add_argument("--lambda", dest="lam", help="lambda (float, list or start:stop:num)")
    common.add_argument("--eta", help="eta (float, list or start:stop:num)")
    common.add_argument("--pairs", nargs="+", help="explicit lambda,eta pairs instead of a product")
    common.add_argument("--boundary", choices=["periodic", "open"])
    common.add_argument("--orientation", type=int, choices=[1, -1])
    common.add_argument("--initial", choices=["half_filling_real_band", "all_filled"])
    common.add_argument("--t-min", dest="t_min", type=float)
    common.add_argument("--t-max", dest="t_max", type=float)
    common.add_argument("--n-t", dest="n_t", type=int)
    common.add_argument("--log-t", dest="log_t", action="store_true")
    common.add_argument("--times", help="explicit comma-separated time list")
    common.add_argument("--lengths", help="block lengths (list or start:stop:num)")
    common.add_argument("--n-k", dest="n_k", type=int)
    common.add_argument("--out", help="output path (default: standard output)")
    common.add_argument("--format", choices=["csv", "json"])
    common.add_argument("--gnuplot-header", dest="gnuplot_header", action="store_true")
    common.add_argument("--jobs", type=int, help="worker processes for sweeps")

    parser = _Parser(prog="lossychain", description="Lindblad dynamics of a lossy dimerized chain")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("params", parents=[common], argument_default=S, help="derived couplings")
    p = sub.add_parser("spectrum", parents=[common], argument_default=S, help="single-particle spectrum")
    p.add_argument("--operator", choices=["h_eff", "h"])
    p.add_argument("--analytic", action="store_true", help="Bloch dispersion instead of diagonalization")
    p = sub.add_parser("phase-diagram", parents=[common], argument_default=S, help="phase classes and gaps")
    p.add_argument("--grid", type=int)
    p = sub.add_parser("evolve", parents=[common], argument_default=S, help="density dynamics")
    p.add_argument("--observable", choices=["density", "momentum", "trace"])
    p = sub.add_parser("entropy", parents=[common], argument_default=S, help="block entropies")
    p.add_argument("--wide", action="store_true")
    p = sub.add_parser("fit", parents=[common], argument_default=S, help="entropy scaling fits")
    p.add_argument("--kind", choices=["spatial", "short_time", "long_time_gapped", "long_time_gapless"])
    p = sub.add_parser("oracle", parents=[common], argument_default=S, help="brute-force cross-checks")
    p.add_argument("--check", choices=["all", "correlation", "entropy", "spectrum"])
    p = sub.add_parser("luttinger", parents=[common], argument_default=S, help="bosonized short-time MSEE")
    p.add_argument("--gamma", type=float)
    p.add_argument("--velocity", type=float)
    p.add_argument("--g2", type=float)
    p.add_argument("--q", help="momenta (list or start:stop:num)")
    return parser


def _command_defaults(command: str) -> dict:
    if command == "params":
        return {"format": "json"}
    if command == "oracle":
        return {"cells": 2, "t_max": 10.0, "n_t": 50}
    if command == "luttinger":
        return {"t_min": 1e-4, "t_max": 1e-2, "n_t": 20}
    return {}


def resolve_config(argv: list[str]) -> tuple[RunConfig, bool]:
    ns = vars(build_parser().parse_args(argv))
    command = ns.pop("command")
    dump = ns.pop("dump_config", False)
    base = {"command": command, **_command_defaults(command)}
    path = ns.pop("config", None)
    if path is not None:
        try:
            with open(path) as fh:
                file_cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc
        file_cfg.pop("command", None)
        base.update(file_cfg)
    base.update(ns)
    return RunConfig.from_dict(base), dump


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cfg, dump = resolve_config(argv)
        if dump:
            write_output(cfg.to_json() + "\n", cfg.out)
            return 0
        table, status = run(cfg)
        if cfg.command == "params" and cfg.format == "json" and len(table.rows) == 1 and cfg.out is None:
            text = json.dumps(_json_value(dict(zip(table.columns, table.rows[0]))), sort_keys=True, indent=2) + "\n"
        else:
            text = render(table, cfg, ["lossychain", *argv])
        write_output(text, cfg.out)
        return status
    except (UsageError, DomainError, OSError) as exc:
        print(f"lossychain: error: {exc}", file=sys.stderr)
        return 1
    except (NumericalError, np.linalg.LinAlgError) as exc:
        print(f"lossychain: numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
