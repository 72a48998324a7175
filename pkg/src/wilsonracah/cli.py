"""Command-line front end.

Commands: spectrum, phase-shift, matrix, potential, wavefunction, verify.
Tables go to CSV (default) or JSON with deterministic 17-significant-digit
formatting; curves can additionally be rendered to a standalone SVG.
Exit codes: 0 success, 1 failed verification, 2 invalid parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .operators import OperatorDomainError, SystemSpec, hamiltonian_matrix, potential_matrix
from .oscillator import OscillatorBasis, Parity, TridiagonalMatrix, kinetic_matrix
from .racah import RacahDomainError
from .reconstruct import (
    Method,
    PotentialCurve,
    ReconstructionRequest,
    assemble_wavefunction,
    default_grid,
    full_potential,
    reconstruct,
    stability_scan,
)
from .verify import run_suite
from .wilson import WilsonDomainError, WilsonParams, bound_state_energies, phase_shift


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _param_comment(args: argparse.Namespace) -> str:
    keys = ("lam", "mu", "nu", "a", "b", "size", "parity", "method", "column")
    parts = []
    for k in keys:
        if hasattr(args, k) and getattr(args, k) is not None:
            parts.append(f"{k}={getattr(args, k)}")
    return "# " + " ".join(parts)


def _emit_table(
    header: Sequence[str],
    rows: Sequence[Sequence[float]],
    fmt: str,
    out: Optional[str],
    comment: str,
) -> None:
    if fmt == "csv":
        lines = [comment, ",".join(header)]
        for row in rows:
            lines.append(",".join(_fmt(v) for v in row))
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "parameters": comment.lstrip("# "),
            "columns": list(header),
            "rows": [[float(_fmt(v)) for v in row] for row in rows],
        }
        text = json.dumps(payload, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def emit_svg(
    curves: Sequence[tuple[str, np.ndarray, np.ndarray, np.ndarray]],
    path: str,
    width: int = 720,
    height: int = 480,
) -> None:
    """Write a standalone SVG with one polyline per (label, xs, ys, mask)
    curve; masked points are omitted."""
    pts_all_x: list[float] = []
    pts_all_y: list[float] = []
    for _, xs, ys, mask in curves:
        pts_all_x.extend(float(v) for v in xs[mask])
        pts_all_y.extend(float(v) for v in ys[mask])
    if not pts_all_x:
        raise ValueError("no unmasked data to plot")
    x0, x1 = min(pts_all_x), max(pts_all_x)
    y0, y1 = min(pts_all_y), max(pts_all_y)
    if x1 == x0:
        x0, x1 = x0 - 1.0, x1 + 1.0
    if y1 == y0:
        y0, y1 = y0 - 1.0, y1 + 1.0
    pad = 50.0

    def sx(x: float) -> float:
        return pad + (x - x0) / (x1 - x0) * (width - 2 * pad)

    def sy(y: float) -> float:
        return height - pad - (y - y0) / (y1 - y0) * (height - 2 * pad)

    colors = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
        f'<text x="{pad}" y="{height - pad + 30}" font-size="12">{_fmt(x0)}</text>',
        f'<text x="{width - pad - 40}" y="{height - pad + 30}" font-size="12">{_fmt(x1)}</text>',
        f'<text x="4" y="{height - pad}" font-size="12">{_fmt(y0)}</text>',
        f'<text x="4" y="{pad}" font-size="12">{_fmt(y1)}</text>',
    ]
    for i, (label, xs, ys, mask) in enumerate(curves):
        color = colors[i % len(colors)]
        segment: list[str] = []
        for x, y, ok in zip(xs, ys, mask):
            if ok:
                segment.append(f"{sx(float(x)):.2f},{sy(float(y)):.2f}")
            elif segment:
                parts.append(
                    f'<polyline points="{" ".join(segment)}" fill="none" stroke="{color}" stroke-width="1.5"/>'
                )
                segment = []
        if segment:
            parts.append(
                f'<polyline points="{" ".join(segment)}" fill="none" stroke="{color}" stroke-width="1.5"/>'
            )
        parts.append(
            f'<text x="{width - pad + 2}" y="{pad + 16 * i}" font-size="12" fill="{color}">{label}</text>'
        )
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n")


def _wilson_from_args(args: argparse.Namespace) -> WilsonParams:
    nu = args.nu if args.nu is not None else args.mu
    b = args.b if args.b is not None else args.a
    return WilsonParams(mu=args.mu, nu=nu, a=args.a, b=b, lam=args.lam)


def _system_from_args(args: argparse.Namespace, size: Optional[int] = None) -> SystemSpec:
    p = _wilson_from_args(args)
    n = size if size is not None else args.size
    basis = OscillatorBasis(lam=p.lam, parity=Parity(args.parity), size=n)
    return SystemSpec(wilson=p, basis=basis, size=n)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--lambda", dest="lam", type=float, default=0.2)
    sub.add_argument("--mu", type=float, required=True)
    sub.add_argument("--nu", type=float, default=None, help="defaults to mu")
    sub.add_argument("--a", type=float, required=True)
    sub.add_argument("--b", type=float, default=None, help="defaults to a")
    sub.add_argument("--parity", choices=["even", "odd"], default="even")
    sub.add_argument("--size", type=int, default=30)
    sub.add_argument("--format", dest="fmt", choices=["csv", "json"], default="csv")
    sub.add_argument("--out", default=None)
    sub.add_argument("--svg", default=None)
    sub.add_argument("--denominator-floor", dest="floor", type=float, default=1e-8)
    sub.add_argument("--config", default=None, help="flat key=value file; flags win")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wilsonracah",
        description="Wilson-Racah quantum system: spectra, matrices, and potential reconstruction",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("spectrum", help="bound-state energy levels")
    _add_common(sp)

    ps = subs.add_parser("phase-shift", help="scattering phase shift on a y grid")
    _add_common(ps)
    ps.add_argument("--ymin", type=float, default=0.05)
    ps.add_argument("--ymax", type=float, default=10.0)
    ps.add_argument("--points", type=int, default=400)
    ps.add_argument("--raw", action="store_true", help="principal values, no unwrapping")

    mx = subs.add_parser("matrix", help="kinetic / hamiltonian / potential band matrix")
    _add_common(mx)
    mx.add_argument("--what", choices=["kinetic", "hamiltonian", "potential"], required=True)

    po = subs.add_parser("potential", help="reconstructed full potential curve")
    _add_common(po)
    po.add_argument("--method", type=int, choices=[1, 2], default=1)
    po.add_argument("--column", type=int, default=None)
    po.add_argument("--xmin", type=float, default=None)
    po.add_argument("--xmax", type=float, default=None)
    po.add_argument("--points", type=int, default=401)
    po.add_argument(
        "--scan-sizes",
        default=None,
        help="comma-separated truncation sizes for a stability scan (overrides --size)",
    )

    wf = subs.add_parser("wavefunction", help="continuum wavefunction at one energy")
    _add_common(wf)
    wf.add_argument("--energy", type=float, required=True)
    wf.add_argument("--xmin", type=float, default=None)
    wf.add_argument("--xmax", type=float, default=None)
    wf.add_argument("--points", type=int, default=401)

    vf = subs.add_parser("verify", help="internal consistency suites")
    vf.add_argument(
        "--suite",
        default="all",
        choices=["specfun", "wilson", "racah", "matrices", "reconstruction", "all"],
    )
    vf.add_argument("--format", dest="fmt", choices=["csv", "json"], default="csv")
    vf.add_argument("--out", default=None)
    return parser


def _apply_config(args: argparse.Namespace, argv: Sequence[str]) -> None:
    """Fill defaults from a flat key=value file; explicit flags win."""
    if getattr(args, "config", None) is None:
        return
    explicit = {tok.split("=", 1)[0].lstrip("-").replace("-", "_") for tok in argv if tok.startswith("--")}
    for line in Path(args.config).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, raw = line.partition("=")
        key = key.strip().replace("-", "_")
        if key == "lambda":
            key = "lam"
        if key in explicit or not hasattr(args, key):
            continue
        raw = raw.strip()
        current = getattr(args, key)
        if isinstance(current, bool):
            setattr(args, key, raw.lower() in ("1", "true", "yes"))
        elif isinstance(current, int) and not isinstance(current, bool):
            setattr(args, key, int(raw))
        elif isinstance(current, float):
            setattr(args, key, float(raw))
        elif current is None and key in ("nu", "b", "xmin", "xmax", "column"):
            setattr(args, key, float(raw) if key != "column" else int(raw))
        else:
            setattr(args, key, raw)


def _cmd_spectrum(args: argparse.Namespace) -> int:
    p = _wilson_from_args(args)
    if p.mu < 0.0:
        p.require_bound_mode()
    levels = bound_state_energies(p)
    rows = [[float(m), E] for m, E in levels]
    _emit_table(["m", "E_m"], rows, args.fmt, args.out, _param_comment(args))
    if args.svg:
        if not levels:
            raise ValueError("no bound levels to plot")
        curves = []
        for m, E in levels:
            xs = np.array([0.0, 1.0])
            ys = np.array([E, E])
            curves.append((f"E_{m}", xs, ys, np.array([True, True])))
        emit_svg(curves, args.svg)
    return 0


def _cmd_phase_shift(args: argparse.Namespace) -> int:
    p = _wilson_from_args(args)
    ys = np.linspace(args.ymin, args.ymax, args.points)
    from .wilson import phase_shift_curve

    deltas = phase_shift_curve(ys, p, unwrap=not args.raw)
    rows = [[float(y), float(d)] for y, d in zip(ys, deltas)]
    _emit_table(["y", "delta"], rows, args.fmt, args.out, _param_comment(args))
    if args.svg:
        emit_svg([("delta(y)", ys, deltas, np.ones_like(ys, dtype=bool))], args.svg)
    return 0


def _cmd_matrix(args: argparse.Namespace) -> int:
    spec = _system_from_args(args)
    if args.what == "kinetic":
        mat = kinetic_matrix(spec.basis)
        mat = TridiagonalMatrix(diag=mat.diag[: spec.size], offdiag=mat.offdiag[: spec.size - 1])
    elif args.what == "hamiltonian":
        mat = hamiltonian_matrix(spec)
    else:
        mat = potential_matrix(spec)
    rows = []
    for i in range(mat.size):
        row = []
        for j in range(mat.size):
            if i == j:
                row.append(mat.diag[i])
            elif abs(i - j) == 1:
                row.append(mat.offdiag[min(i, j)])
            else:
                row.append(0.0)
        rows.append(row)
    header = [f"col{j}" for j in range(mat.size)]
    _emit_table(header, rows, args.fmt, args.out, _param_comment(args))
    return 0


def _cmd_potential(args: argparse.Namespace) -> int:
    p = _wilson_from_args(args)
    if args.xmin is None or args.xmax is None:
        grid = default_grid(p.lam, points=args.points)
    else:
        grid = np.linspace(args.xmin, args.xmax, args.points)
    method = Method.ONE if args.method == 1 else Method.TWO
    if args.scan_sizes:
        sizes = [int(tok) for tok in args.scan_sizes.split(",")]
        spec = _system_from_args(args, size=max(sizes))
        report = stability_scan(spec, sizes, grid=grid, method=method, denominator_floor=args.floor)
        curves = [full_potential(c, p.lam) for c in report.curves]
        header = ["x"] + [f"V_N{N}" for N in sizes] + [f"mask_N{N}" for N in sizes]
        rows = []
        for i, x in enumerate(grid):
            row = [float(x)]
            row += [float(c.values[i]) for c in curves]
            row += [float(c.mask[i]) for c in curves]
            rows.append(row)
        _emit_table(header, rows, args.fmt, args.out, _param_comment(args))
        if args.svg:
            emit_svg(
                [(f"N={N}", c.xs, c.values, c.mask) for N, c in zip(sizes, curves)],
                args.svg,
            )
        return 0
    spec = _system_from_args(args)
    req = ReconstructionRequest(
        spec=spec, method=method, column=args.column, grid=grid, denominator_floor=args.floor
    )
    curve = full_potential(reconstruct(req), p.lam)
    rows = [
        [float(x), float(v), float(ok)]
        for x, v, ok in zip(curve.xs, curve.values, curve.mask)
    ]
    _emit_table(["x", "V", "trusted"], rows, args.fmt, args.out, _param_comment(args))
    if args.svg:
        emit_svg([(f"V(x) N={spec.size}", curve.xs, curve.values, curve.mask)], args.svg)
    return 0


def _cmd_wavefunction(args: argparse.Namespace) -> int:
    spec = _system_from_args(args)
    p = spec.wilson
    if args.xmin is None or args.xmax is None:
        grid = default_grid(p.lam, points=args.points)
    else:
        grid = np.linspace(args.xmin, args.xmax, args.points)
    gf, tail = assemble_wavefunction(spec, args.energy, grid)
    rows = [[float(x), float(v)] for x, v in zip(gf.xs, gf.values)]
    comment = _param_comment(args) + f" energy={args.energy} truncation_tail={_fmt(tail)}"
    _emit_table(["x", "psi"], rows, args.fmt, args.out, comment)
    if args.svg:
        emit_svg([("psi", gf.xs, gf.values, np.ones_like(gf.xs, dtype=bool))], args.svg)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite)
    rows = []
    lines = []
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"{status} {c.name}: measured {c.measured:.3e} <= {c.threshold:.1e}")
        rows.append([float(c.passed), c.measured, c.threshold])
    if args.fmt == "json":
        payload = {
            "suite": report.suite,
            "overall": report.overall,
            "checks": [
                {"name": c.name, "passed": c.passed, "measured": c.measured, "threshold": c.threshold}
                for c in report.checks
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = "\n".join(lines) + f"\noverall: {'PASS' if report.overall else 'FAIL'}\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if report.overall else 1


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "phase-shift": _cmd_phase_shift,
    "matrix": _cmd_matrix,
    "potential": _cmd_potential,
    "wavefunction": _cmd_wavefunction,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    _apply_config(args, argv)
    try:
        return _COMMANDS[args.command](args)
    except (WilsonDomainError, RacahDomainError, OperatorDomainError, ValueError) as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
