"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import csvio, family, hull, negativity, verify
from .states import DomainError, FamilyPoint

FIG5_X = (0.8, 0.85, 0.9, 0.92, 0.94, 0.96, 0.98, 1.0)
FIG6_R = (0.0, 0.1, 0.2, 0.3, 0.5)
EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 1, 2, 3


class UsageError(Exception):
    pass


def _point(x: float, y: float) -> FamilyPoint:
    try:
        return FamilyPoint(x, y)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def cmd_eval(x: float, y: float, resolution: int = 201) -> str:
    p = _point(x, y)
    sol = family.cubic_roots_nonneg(p.x, min(p.y, 1.0 - p.x))
    lam = sol.lambda_at_chosen
    rows = [
        ("x", p.x),
        ("y", p.y),
        ("t", sol.chosen_t),
        ("Lambda", lam),
        ("E_psi", 1.0 - lam**2),
        ("E_rho", hull.mixed_gme(p.x, min(p.y, 1.0 - p.x), resolution)),
        ("N", negativity.family_negativity(p.x, min(p.y, 1.0 - p.x))),
    ]
    return "".join(f"{k} = {csvio.fmt(v)}\n" for k, v in rows)


def surface_for(kind: str, nx: int, ny: int) -> hull.SurfaceGrid:
    if nx < 3 or ny < 3:
        raise UsageError("grid resolutions must be at least 3")
    if kind == "e-psi-xy":
        xs, ys = np.linspace(0, 1, nx), np.linspace(0, 1, ny)
        return hull.SurfaceGrid(xs, ys, family.e_psi_grid(xs, ys), hull.XY)
    if kind == "e-psi-xr":
        return hull.sample_e_psi_xr(nx, ny)
    if kind == "e-rho":
        return hull.mixed_gme_surface(nx, ny)
    if kind == "negativity":
        return negativity.negativity_surface(nx, ny)
    raise UsageError(f"unknown surface kind {kind!r}")


def slice_columns(kind: str, resolution: int, params=None) -> tuple[list[str], list[np.ndarray]]:
    """Abscissa and curve columns for the named one-dimensional cut."""
    if resolution < 3:
        raise UsageError("resolution must be at least 3")
    s = np.linspace(0.0, 1.0, resolution)
    if kind == "fig2":
        return ["y", "E_psi"], [s, np.array([family.e_psi(0.0, v) for v in s])]
    if kind == "fig3":
        return ["x", "E_psi"], [s, np.array([family.e_psi(v, 1.0 - v) for v in s])]
    if kind == "fig5":
        xs = tuple(params) if params else FIG5_X
        _check_unit(xs, "x")
        cols = [np.array([family.e_psi_xr(x, r) for r in s]) for x in xs]
        return ["r"] + [f"x={csvio.fmt(x)}" for x in xs], [s, *cols]
    if kind == "fig6":
        rs = tuple(params) if params else FIG6_R
        _check_unit(rs, "r")
        cols = [np.array([family.e_psi_xr(x, r) for x in s]) for r in rs]
        return ["x"] + [f"r={csvio.fmt(r)}" for r in rs], [s, *cols]
    if kind == "fig8":
        vals = np.array([hull.mixed_gme(x, (1.0 - x) / 2, resolution) for x in s])
        return ["x", "E_rho"], [s, vals]
    raise UsageError(f"unknown slice kind {kind!r}")


def _check_unit(values, name: str) -> None:
    for v in values:
        if not 0.0 <= v <= 1.0:
            raise UsageError(f"{name} = {v} outside [0, 1]")


def ordering_rows(resolution: int, max_report: int) -> list[tuple]:
    """Disagreeing pairs, largest |dN| |dE| first, with the GHZ/W pair always kept."""
    if resolution < 11:
        raise UsageError("ordering needs resolution >= 11")
    if max_report < 1:
        raise UsageError("max-report must be positive")
    pairs = negativity.ordering_search(
        hull.mixed_gme_surface(resolution, resolution),
        negativity.negativity_surface(resolution, resolution),
    )
    pairs.sort(key=lambda p: -abs(p[2] - p[3]) * abs(p[4] - p[5]))
    top = pairs[:max_report]
    ref = [p for p in pairs if {p[0], p[1]} == {(0.0, 1.0), (1.0, 0.0)}]
    if ref and ref[0] not in top:
        top = top[: max_report - 1] + ref
    return top


def _flatten(pair) -> tuple[float, ...]:
    (x1, y1), (x2, y2), n1, n2, e1, e2 = pair
    return (x1, y1, x2, y2, n1, n2, e1, e2)


ORDERING_HEADER = ("x1", "y1", "x2", "y2", "N1", "N2", "E1", "E2")


def _write_plot_script(out: Path, text: str) -> None:
    out.with_name(out.name + ".gp").write_text(text, encoding="ascii")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geoment",
        description="Geometric measure of entanglement for GHZ / W / inverted-W mixtures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="all quantities at one point (x, y)")
    p.add_argument("x", type=float)
    p.add_argument("y", type=float)
    p.add_argument("--resolution", type=int, default=201, help="E_rho surgery grid size")

    p = sub.add_parser("surface", help="export a surface as CSV")
    p.add_argument("kind", choices=["e-psi-xy", "e-psi-xr", "e-rho", "negativity"])
    p.add_argument("nx_pos", nargs="?", type=int, metavar="NX")
    p.add_argument("ny_pos", nargs="?", type=int, metavar="NY")
    p.add_argument("--nx", type=int)
    p.add_argument("--ny", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--plot-script", action="store_true")

    p = sub.add_parser("slice", help="export a one-dimensional cut as CSV")
    p.add_argument("kind", choices=["fig2", "fig3", "fig5", "fig6", "fig8"])
    p.add_argument("params", nargs="*", type=float, help="x values (fig5) or r values (fig6)")
    p.add_argument("--resolution", type=int, default=201)
    p.add_argument("--out", required=True)
    p.add_argument("--plot-script", action="store_true")

    p = sub.add_parser("verify", help="run the self-check suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--resolution", type=int, default=201)
    p.add_argument("--inject-corruption", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("ordering", help="pairs ranked oppositely by negativity and GME")
    p.add_argument("--resolution", type=int, default=21)
    p.add_argument("--max-report", type=int, default=50)
    p.add_argument("--out")
    return parser


def _run(args) -> int:
    if args.command == "eval":
        sys.stdout.write(cmd_eval(args.x, args.y, args.resolution))
        return 0

    if args.command == "surface":
        nx = args.nx if args.nx is not None else args.nx_pos
        ny = args.ny if args.ny is not None else args.ny_pos
        if nx is None or ny is None:
            raise UsageError("surface needs NX and NY")
        surf = surface_for(args.kind, nx, ny)
        out = Path(args.out)
        csvio.write_surface_csv(surf, out)
        if args.plot_script:
            second = "r" if surf.parametrization == hull.XR else "y"
            _write_plot_script(out, csvio.gnuplot_script(out, "x", second, args.kind))
        return 0

    if args.command == "slice":
        header, cols = slice_columns(args.kind, args.resolution, args.params)
        out = Path(args.out)
        csvio.write_columns_csv(header, cols, out)
        if args.plot_script:
            _write_plot_script(
                out, csvio.gnuplot_script(out, header[0], "E", n_curves=len(cols) - 1)
            )
        return 0

    if args.command == "verify":
        corrupt = verify.bump if args.inject_corruption else None
        checks = verify.run_verification(args.seed, corrupt, args.resolution)
        for c in checks:
            print(c.line())
        return 0 if all(c.passed for c in checks) else EXIT_VERIFY

    if args.command == "ordering":
        rows = [_flatten(p) for p in ordering_rows(args.resolution, args.max_report)]
        if args.out:
            csvio.write_rows_csv(ORDERING_HEADER, rows, args.out)
        else:
            print(",".join(ORDERING_HEADER))
            for row in rows:
                print(",".join(csvio.fmt(v) for v in row))
        return 0
    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
