"""Command-line front end: configuration, pipeline orchestration, and
bit-stable data export.

Subcommands
    classify  region tag and characteristic quartet for one (a, b)
    solve     coefficient tables, matching roots, orbit samples, report
    travel    traveling-wave samples u(x - speed t) on an (x, t) grid
    compare   series orbit against the independent shooting oracle
    sweep     per-point summary over a coefficient grid

Configs are flat key=value text (one assignment per line, # comments);
command-line flags override file values.  Data files are deterministic:
identical configs give byte-identical CSVs, numbers carry 17 significant
digits, and timestamps live only in the run manifest.  The report paths
also render matplotlib figures (Agg backend) next to the delimited output.

Exit codes: 0 success, 2 config error, 3 domain error (wrong region),
4 solver error, 5 oracle error.
"""

from __future__ import annotations

import argparse
import datetime
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .errors import (
    ConfigError,
    DomainError,
    HomoclinicError,
    OracleError,
    ResonanceError,
    SolverError,
)
from .matching import RootCandidate, rank_candidates, solve_matching
from .model import SystemParams, residual_arrays
from .orbit import HomoclinicOrbit, make_orbit, sample, traveling_wave
from .recurrence import phi_table, psi_table
from .spectrum import Region, char_roots, classify_region, spectrum
from .verify import (
    VerificationReport,
    compare,
    continuity_report,
    decay_check,
    ode_residual,
    shooting_oracle,
)

_PARAM_KEYS = ("a", "b", "c", "d", "g", "h", "p", "q", "r", "s")

# window where the truncation error of a convergent table has decayed well
# below double-precision noise; used for the sweep admissibility filter
_TAIL_Z = 2.0


@dataclass(frozen=True)
class RunConfig:
    """Everything one pipeline run depends on; the pipeline is seed-free."""

    params: SystemParams
    K: int = 30
    mode: str = "reversible"          # "reversible" | "general"
    z_min: float = -10.0
    z_max: float = 10.0
    grid_n: int = 801
    root_select: str = "auto"         # "auto" | "index:N" | "nearest:RE,IM"
    tol_poly: float = 1e-9
    tol_residual: float = 1e-6
    tol_continuity: float = 1e-9

    def __post_init__(self):
        if self.K < 2:
            raise ConfigError("K must be >= 2")
        if self.grid_n < 2:
            raise ConfigError("grid_n must be >= 2")
        if not self.z_min < self.z_max:
            raise ConfigError("need z_min < z_max")
        if self.mode not in ("reversible", "general"):
            raise ConfigError(f"mode must be reversible or general, got {self.mode!r}")
        if self.mode == "reversible" and not self.params.reversible():
            raise ConfigError(
                "mode=reversible but a reversibility-breaking coefficient "
                "(p, q, r, s) is nonzero"
            )
        _parse_root_select(self.root_select)  # validate eagerly


def _parse_root_select(text: str):
    """'auto' | 'index:N' | 'nearest:RE,IM' -> tagged tuple."""
    if text == "auto":
        return ("auto",)
    if text.startswith("index:"):
        try:
            return ("index", int(text[len("index:"):]))
        except ValueError:
            raise ConfigError(f"bad root_select index in {text!r}") from None
    if text.startswith("nearest:"):
        body = text[len("nearest:"):]
        try:
            re_s, im_s = body.split(",")
            return ("nearest", complex(float(re_s), float(im_s)))
        except ValueError:
            raise ConfigError(f"bad root_select target in {text!r}") from None
    raise ConfigError(f"root_select must be auto, index:N or nearest:RE,IM, got {text!r}")


def parse_config_text(text: str) -> dict[str, str]:
    """Flat key=value lines; blank lines and # comments ignored."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        key = key.strip()
        if not key:
            raise ConfigError(f"config line {lineno}: empty key")
        if key in out:
            raise ConfigError(f"config line {lineno}: duplicate key {key!r}")
        out[key] = value.strip()
    return out


_FLOAT_KEYS = _PARAM_KEYS + ("z_min", "z_max", "tol_poly", "tol_residual", "tol_continuity")
_INT_KEYS = ("K", "grid_n")
_STR_KEYS = ("mode", "root_select")


def build_config(file_values: dict[str, str], overrides: dict[str, object]) -> RunConfig:
    """Merge config-file strings with already-typed CLI overrides."""
    merged: dict[str, object] = {}
    for key, text in file_values.items():
        if key in _FLOAT_KEYS:
            try:
                merged[key] = float(text)
            except ValueError:
                raise ConfigError(f"config key {key}: not a number: {text!r}") from None
        elif key in _INT_KEYS:
            try:
                merged[key] = int(text)
            except ValueError:
                raise ConfigError(f"config key {key}: not an integer: {text!r}") from None
        elif key in _STR_KEYS:
            merged[key] = text
        else:
            raise ConfigError(f"unknown config key {key!r}")
    for key, value in overrides.items():
        if value is not None:
            merged[key] = value

    if "a" not in merged or "b" not in merged:
        raise ConfigError("linear coefficients a and b are required")
    try:
        params = SystemParams(**{k: float(merged.pop(k, 0.0)) for k in _PARAM_KEYS})
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if "mode" not in merged:
        merged["mode"] = "reversible" if params.reversible() else "general"
    return RunConfig(params=params, **merged)


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _write_csv(path: str, header: str, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _write_manifest(out_dir: str, cfg: RunConfig, command: str, extra: dict | None = None) -> None:
    lines = [
        f"command={command}",
        f"version={__version__}",
        f"timestamp={datetime.datetime.now(datetime.timezone.utc).isoformat()}",
    ]
    for key in _PARAM_KEYS:
        lines.append(f"{key}={_fmt(getattr(cfg.params, key))}")
    lines += [
        f"K={cfg.K}",
        f"mode={cfg.mode}",
        f"z_min={_fmt(cfg.z_min)}",
        f"z_max={_fmt(cfg.z_max)}",
        f"grid_n={cfg.grid_n}",
        f"root_select={cfg.root_select}",
        f"tol_poly={_fmt(cfg.tol_poly)}",
        f"tol_residual={_fmt(cfg.tol_residual)}",
        f"tol_continuity={_fmt(cfg.tol_continuity)}",
    ]
    for key, value in (extra or {}).items():
        lines.append(f"{key}={value}")
    with open(os.path.join(out_dir, "manifest.txt"), "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# pipeline


@dataclass
class SolveResult:
    cfg: RunConfig
    forward: list[RootCandidate]
    backward: list[RootCandidate]
    orbit: HomoclinicOrbit | None
    chosen_forward: complex | None
    chosen_backward: complex | None
    report: VerificationReport | None
    linear: bool = False


def _require_region1(a: float, b: float) -> None:
    region = classify_region(a, b)
    if region is not Region.REGION1:
        raise DomainError(
            f"(a={a}, b={b}) classifies as {region.value}; the series "
            "construction needs the Region1 saddle-focus quartet"
        )


def _verified_candidates(cfg, table, back_table, cands) -> list[RootCandidate]:
    """Fill orbit_residual / decay_margin on each candidate (tail window)."""
    margins = decay_check(table, 1.0) if table.K > 4 else []
    worst_margin = max(margins) if margins else math.nan
    for cand in cands:
        cand.decay_margin = worst_margin
        try:
            orb = make_orbit(table, back_table, cand.value)
            sup, _ = ode_residual(
                orb, cfg.params, _TAIL_Z, max(cfg.z_max, _TAIL_Z + 1.0), 200
            )
            cand.orbit_residual = sup
        except (ValueError, OverflowError):
            cand.orbit_residual = math.inf
    return cands


def _select(cfg: RunConfig, cands: list[RootCandidate]) -> complex:
    sel = _parse_root_select(cfg.root_select)
    if sel[0] == "index":
        if not 0 <= sel[1] < len(cands):
            raise ConfigError(
                f"root_select index {sel[1]} out of range (have {len(cands)} candidates)"
            )
        return cands[sel[1]].value
    if sel[0] == "nearest":
        return min(cands, key=lambda c: abs(c.value - sel[1])).value
    return rank_candidates(list(cands))[0].value


def solve_pipeline(cfg: RunConfig) -> SolveResult:
    """classify, build tables, match, select, assemble, verify."""
    params = cfg.params
    _require_region1(params.a, params.b)
    if all(getattr(params, k) == 0.0 for k in _PARAM_KEYS[2:]):
        return SolveResult(cfg, [], [], None, None, None, None, linear=True)

    spec = spectrum(params.a, params.b)
    fwd_table = phi_table(params, spec.roots[0], cfg.K, params.a, params.b)
    bwd_table = psi_table(params, spec.roots[3], cfg.K, params.a, params.b)

    forward = solve_matching(fwd_table)
    if not forward:
        return SolveResult(cfg, [], [], None, None, None, None, linear=True)
    _verified_candidates(cfg, fwd_table, bwd_table, forward)
    a1 = _select(cfg, forward)

    if cfg.mode == "general":
        backward = solve_matching(bwd_table)
        # backward candidates reuse the forward ranking fields; the orbit
        # residual of the z < 0 branch equals that of the mirrored table
        for cand in backward:
            cand.decay_margin = (
                max(decay_check(bwd_table, 1.0)) if cfg.K > 4 else math.nan
            )
        b1 = min(backward, key=lambda c: c.polynomial_residual).value if backward else a1
    else:
        backward = []
        b1 = a1

    orbit = make_orbit(fwd_table, bwd_table, a1, b1)
    sup, slope = ode_residual(orbit, cfg.params, 0.5, max(cfg.z_max, 1.5), 200)
    gap, jumps = continuity_report(orbit)
    report = VerificationReport(
        residual_sup=sup,
        residual_slope=slope,
        continuity_gap=gap,
        derivative_jumps=jumps,
        decay_margins=decay_check(fwd_table, 1.0) if cfg.K > 4 else [],
    )
    return SolveResult(cfg, forward, backward, orbit, a1, b1, report)


def _roots_rows(cands: list[RootCandidate]):
    for c in cands:
        yield (c.value.real, c.value.imag, c.polynomial_residual,
               c.orbit_residual, c.decay_margin)


def _write_report(path: str, result: SolveResult) -> None:
    rep = result.report
    lines = [
        f"chosen_forward={_fmt(result.chosen_forward.real)}{result.chosen_forward.imag:+.17g}j",
        f"chosen_backward={_fmt(result.chosen_backward.real)}{result.chosen_backward.imag:+.17g}j",
        f"residual_sup={_fmt(rep.residual_sup)}",
        f"residual_slope={_fmt(rep.residual_slope)}",
        f"continuity_gap={_fmt(rep.continuity_gap)}",
        "derivative_jumps=" + ",".join(_fmt(j) for j in rep.derivative_jumps),
        f"worst_decay_margin={_fmt(max(rep.decay_margins)) if rep.decay_margins else 'nan'}",
    ]
    if rep.oracle_distance is not None:
        lines.append(f"oracle_distance={_fmt(rep.oracle_distance)}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# figures (report-path rendering; Agg backend, files only)


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _render_orbit(path: str, table: np.ndarray) -> None:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(table[:, 0], table[:, 1], lw=1.2)
    ax.axhline(0.0, color="0.7", lw=0.6)
    ax.set_xlabel("z")
    ax.set_ylabel("u")
    ax.set_title("homoclinic orbit profile")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def _render_travel(path: str, table: np.ndarray) -> None:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4))
    for t in np.unique(table[:, 0]):
        block = table[table[:, 0] == t]
        ax.plot(block[:, 1], block[:, 2], lw=1.0, label=f"t={t:g}")
    ax.set_xlabel("x")
    ax.set_ylabel("u")
    ax.set_title("traveling wave snapshots")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def _render_compare(path: str, series: np.ndarray, oracles) -> None:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(series[:, 0], series[:, 1], lw=1.2, label="series")
    for i, orc in enumerate(oracles):
        ax.plot(orc.z, orc.u, lw=1.0, ls="--", label=f"shooting {i}")
    ax.set_xlabel("z")
    ax.set_ylabel("u")
    ax.set_title("series orbit vs shooting oracle")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args) -> int:
    region = classify_region(args.a, args.b, tol=args.tol)
    roots = char_roots(args.a, args.b)
    print(f"region={region.value}")
    for i, root in enumerate(roots, start=1):
        print(f"alpha{i}={root.real:.17g}{root.imag:+.17g}j")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, "classify.txt"), "w", encoding="utf-8") as fh:
            fh.write(f"region={region.value}\n")
            for i, root in enumerate(roots, start=1):
                fh.write(f"alpha{i}={root.real:.17g}{root.imag:+.17g}j\n")
    return 0


def _config_from_args(args) -> RunConfig:
    file_values: dict[str, str] = {}
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                file_values = parse_config_text(fh.read())
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from None
    overrides = {k: getattr(args, k, None) for k in _PARAM_KEYS}
    overrides.update(
        K=args.K, mode=args.mode, z_min=args.z_min, z_max=args.z_max,
        grid_n=args.grid_n, root_select=args.root_select,
    )
    return build_config(file_values, overrides)


def _solve_to_dir(cfg: RunConfig, out_dir: str, command: str) -> SolveResult:
    os.makedirs(out_dir, exist_ok=True)
    result = solve_pipeline(cfg)
    extra = {"linear": str(result.linear).lower()}
    if result.chosen_forward is not None:
        extra["chosen_forward"] = (
            f"{result.chosen_forward.real:.17g}{result.chosen_forward.imag:+.17g}j"
        )
    _write_manifest(out_dir, cfg, command, extra)
    _write_csv(
        os.path.join(out_dir, "roots.csv"),
        "re,im,poly_residual,orbit_residual,decay_margin",
        _roots_rows(result.forward),
    )
    if cfg.mode == "general":
        _write_csv(
            os.path.join(out_dir, "roots_backward.csv"),
            "re,im,poly_residual,orbit_residual,decay_margin",
            _roots_rows(result.backward),
        )
    if result.linear:
        print("linear system: no nontrivial homoclinic series")
        return result

    table = sample(result.orbit, cfg.z_min, cfg.z_max, cfg.grid_n)
    res_col = residual_arrays(
        cfg.params, table[:, 1], table[:, 2], table[:, 3], table[:, 4], table[:, 5]
    )
    _write_csv(
        os.path.join(out_dir, "orbit.csv"),
        "z,u,u1,u2,u3,u4,residual",
        np.column_stack([table, res_col]),
    )
    _write_report(os.path.join(out_dir, "report.txt"), result)
    _render_orbit(os.path.join(out_dir, "orbit.png"), table)
    return result


def cmd_solve(args) -> int:
    cfg = _config_from_args(args)
    result = _solve_to_dir(cfg, args.out, "solve")
    if not result.linear:
        print(
            f"forward root {result.chosen_forward:.6g}; "
            f"{len(result.forward)} candidates; "
            f"residual_sup {result.report.residual_sup:.3e}"
        )
    return 0


def cmd_travel(args) -> int:
    cfg = _config_from_args(args)
    result = _solve_to_dir(cfg, args.out, "travel")
    if result.linear:
        return 0
    times = [float(t) for t in args.times.split(",") if t.strip()]
    if not times:
        raise ConfigError("need at least one time in --times")
    table = traveling_wave(
        result.orbit, args.speed, args.x_min, args.x_max, cfg.grid_n, times
    )
    _write_csv(os.path.join(args.out, "travel.csv"), "t,x,u", table)
    _render_travel(os.path.join(args.out, "travel.png"), table)
    print(f"traveling wave: {len(times)} snapshots, speed {args.speed:g}")
    return 0


def cmd_compare(args) -> int:
    cfg = _config_from_args(args)
    result = _solve_to_dir(cfg, args.out, "compare")
    if result.linear:
        return 0
    spec = spectrum(cfg.params.a, cfg.params.b)
    oracles = shooting_oracle(
        cfg.params, spec, half_width=args.half_width, rtol=args.oracle_rtol
    )
    connected = [o for o in oracles if o.connected]
    series = sample(result.orbit, cfg.z_min, cfg.z_max, cfg.grid_n)
    lines = []
    best = math.inf
    for i, orc in enumerate(connected):
        _write_csv(
            os.path.join(args.out, f"oracle_{i}.csv"), "z,u",
            np.column_stack([orc.z, orc.u]),
        )
        dist = compare(result.orbit, orc.z, orc.u, shift_window=args.shift_window)
        best = min(best, dist)
        lines.append(
            f"oracle_{i}: theta={_fmt(orc.theta)} half_length={_fmt(orc.half_length)} "
            f"boundary_mismatch={_fmt(orc.boundary_mismatch)} distance={_fmt(dist)}"
        )
    if not connected:
        lines.append(oracles[0].note if oracles else "no oracle trajectory")
    with open(os.path.join(args.out, "compare.txt"), "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    _render_compare(os.path.join(args.out, "compare.png"), series, connected)
    for line in lines:
        print(line)
    if math.isfinite(best) and result.report is not None:
        result.report.oracle_distance = best
        _write_report(os.path.join(args.out, "report.txt"), result)
    return 0


# ---------------------------------------------------------------------------
# sweep


def _parse_sweep_axis(text: str) -> tuple[str, np.ndarray]:
    """'name=lo:hi:n' -> (name, grid)."""
    try:
        name, spec_part = text.split("=", 1)
        lo_s, hi_s, n_s = spec_part.split(":")
        lo, hi, n = float(lo_s), float(hi_s), int(n_s)
    except ValueError:
        raise ConfigError(f"bad sweep axis {text!r}; expected name=lo:hi:n") from None
    name = name.strip()
    if name not in _PARAM_KEYS:
        raise ConfigError(f"sweep axis {name!r} is not a coefficient name")
    if n < 1:
        raise ConfigError("sweep axis needs n >= 1")
    return name, np.linspace(lo, hi, n)


def _sweep_point(task):
    """One grid point: region tag, admissible-root count, best residual."""
    cfg_dict, names, values, tol_residual = task
    params = SystemParams(**{**cfg_dict["params"], **dict(zip(names, values))})
    row = {"region": "", "n_admissible": 0, "best_residual": math.nan, "error": ""}
    try:
        region = classify_region(params.a, params.b)
        row["region"] = region.value
        if region is not Region.REGION1:
            return values, row
        cfg = RunConfig(
            params=params,
            K=cfg_dict["K"],
            mode="reversible" if params.reversible() else "general",
            z_min=cfg_dict["z_min"],
            z_max=cfg_dict["z_max"],
            grid_n=cfg_dict["grid_n"],
        )
        result = solve_pipeline(cfg)
        if result.linear:
            row["error"] = "linear"
            return values, row
        admissible = [
            c
            for c in result.forward
            if math.isfinite(c.orbit_residual)
            and c.orbit_residual <= tol_residual
            and (math.isnan(c.decay_margin) or c.decay_margin < 0.0)
        ]
        row["n_admissible"] = len(admissible)
        finite = [c.orbit_residual for c in result.forward if math.isfinite(c.orbit_residual)]
        if finite:
            row["best_residual"] = min(finite)
    except HomoclinicError as exc:
        row["error"] = type(exc).__name__
    return values, row


def cmd_sweep(args) -> int:
    cfg = _config_from_args(args)
    axes = [_parse_sweep_axis(text) for text in args.sweep]
    if not axes:
        raise ConfigError("need at least one --sweep axis")
    if len(axes) > 2:
        raise ConfigError("at most two sweep axes are supported")
    names = [name for name, _ in axes]
    if len(set(names)) != len(names):
        raise ConfigError("sweep axes must name distinct coefficients")

    grids = [grid for _, grid in axes]
    points = [(v,) for v in grids[0]]
    if len(grids) == 2:
        points = [(v0, v1) for v0 in grids[0] for v1 in grids[1]]

    cfg_dict = {
        "params": {k: getattr(cfg.params, k) for k in _PARAM_KEYS},
        "K": cfg.K,
        "z_min": cfg.z_min,
        "z_max": cfg.z_max,
        "grid_n": cfg.grid_n,
    }
    tasks = [(cfg_dict, names, values, cfg.tol_residual) for values in points]

    env_cap = os.environ.get("HOMOCLINIC_NUM_WORKERS", "")
    workers = os.cpu_count() or 1
    if env_cap:
        try:
            workers = max(1, min(workers, int(env_cap)))
        except ValueError:
            raise ConfigError(
                f"HOMOCLINIC_NUM_WORKERS must be an integer, got {env_cap!r}"
            ) from None
    workers = min(workers, len(tasks))

    if workers > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            rows = pool.map(_sweep_point, tasks)
    else:
        rows = [_sweep_point(task) for task in tasks]

    os.makedirs(args.out, exist_ok=True)
    _write_manifest(args.out, cfg, "sweep", {"axes": ";".join(args.sweep), "workers": str(workers)})
    path = os.path.join(args.out, "sweep.csv")
    header = ",".join(names) + ",region,n_admissible,best_residual,error"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header + "\n")
        for values, row in rows:
            cells = [_fmt(v) for v in values]
            cells += [
                row["region"],
                str(row["n_admissible"]),
                _fmt(row["best_residual"]),
                row["error"],
            ]
            fh.write(",".join(cells) + "\n")
    print(f"sweep: {len(rows)} points with {workers} worker(s) -> {path}")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits with 2 already; route through ConfigError for a
        # uniform message format
        raise ConfigError(message)


def _add_config_flags(sub):
    sub.add_argument("--config", help="flat key=value config file")
    for key in _PARAM_KEYS:
        sub.add_argument(f"--{key}", type=float, default=None,
                         help=f"coefficient {key}")
    sub.add_argument("--K", type=int, default=None, help="truncation order")
    sub.add_argument("--mode", choices=("reversible", "general"), default=None)
    sub.add_argument("--z-min", dest="z_min", type=float, default=None)
    sub.add_argument("--z-max", dest="z_max", type=float, default=None)
    sub.add_argument("--grid-n", dest="grid_n", type=int, default=None)
    sub.add_argument("--root-select", dest="root_select", default=None,
                     help="auto | index:N | nearest:RE,IM")
    sub.add_argument("--out", required=True, help="output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="homoclinic", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p_cls = subs.add_parser("classify", help="region tag for one (a, b)")
    p_cls.add_argument("--a", type=float, required=True)
    p_cls.add_argument("--b", type=float, required=True)
    p_cls.add_argument("--tol", type=float, default=1e-9)
    p_cls.add_argument("--out", default=None)
    p_cls.set_defaults(func=cmd_classify)

    p_solve = subs.add_parser("solve", help="tables, roots, orbit, report")
    _add_config_flags(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_travel = subs.add_parser("travel", help="traveling-wave samples")
    _add_config_flags(p_travel)
    p_travel.add_argument("--speed", type=float, required=True)
    p_travel.add_argument("--times", required=True, help="comma-separated times")
    p_travel.add_argument("--x-min", dest="x_min", type=float, default=-10.0)
    p_travel.add_argument("--x-max", dest="x_max", type=float, default=10.0)
    p_travel.set_defaults(func=cmd_travel)

    p_cmp = subs.add_parser("compare", help="series orbit vs shooting oracle")
    _add_config_flags(p_cmp)
    p_cmp.add_argument("--half-width", dest="half_width", type=float, default=15.0)
    p_cmp.add_argument("--shift-window", dest="shift_window", type=float, default=4.0)
    p_cmp.add_argument("--oracle-rtol", dest="oracle_rtol", type=float, default=1e-12)
    p_cmp.set_defaults(func=cmd_compare)

    p_sweep = subs.add_parser("sweep", help="per-point summary over a grid")
    _add_config_flags(p_sweep)
    p_sweep.add_argument("--sweep", action="append", default=[],
                         help="axis as name=lo:hi:n (repeat for a 2D grid)")
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


_EXIT_CODES = (
    (ConfigError, 2),
    (DomainError, 3),
    (ResonanceError, 4),
    (SolverError, 4),
    (OracleError, 5),
)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except HomoclinicError as exc:
        for cls, code in _EXIT_CODES:
            if isinstance(exc, cls):
                print(f"error: {exc}", file=sys.stderr)
                return code
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
