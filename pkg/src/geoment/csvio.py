"""Plain-text CSV for surfaces and curves: LF newlines, 12 significant digits, NA for gaps."""
from __future__ import annotations

import csv
import io
import math
from pathlib import Path

import numpy as np

from .hull import XR, XY, SurfaceGrid

NA = "NA"


def fmt(v: float) -> str:
    return NA if not math.isfinite(v) else f"{v:.12g}"


def parse(token: str) -> float:
    return math.nan if token == NA else float(token)


def _write(path, header, rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    Path(path).write_text(buf.getvalue(), encoding="ascii", newline="")


def write_surface_csv(surface: SurfaceGrid, path) -> None:
    """One row per grid node, x-major, second coordinate ascending."""
    second = "y" if surface.parametrization == XY else "r"
    rows = (
        (fmt(a), fmt(b), fmt(surface.values[i, j]))
        for i, a in enumerate(surface.first)
        for j, b in enumerate(surface.second)
    )
    _write(path, ("x", second, "value"), rows)


def read_surface_csv(path) -> SurfaceGrid:
    with open(path, newline="", encoding="ascii") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [tuple(parse(t) for t in row) for row in reader]
    if header[:1] != ["x"] or header[1] not in ("y", "r") or len(header) != 3:
        raise ValueError(f"unexpected surface header {header}")
    first = sorted({r[0] for r in rows})
    second = sorted({r[1] for r in rows})
    if len(rows) != len(first) * len(second):
        raise ValueError("surface CSV is not a full grid")
    values = np.array([r[2] for r in rows]).reshape(len(first), len(second))
    return SurfaceGrid(first, second, values, XY if header[1] == "y" else XR)


def write_columns_csv(header, columns, path) -> None:
    """Curves sharing one abscissa: ``columns[0]`` is the abscissa."""
    rows = (tuple(fmt(c[k]) for c in columns) for k in range(len(columns[0])))
    _write(path, header, rows)


def read_columns_csv(path) -> tuple[list[str], list[np.ndarray]]:
    with open(path, newline="", encoding="ascii") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [[parse(t) for t in row] for row in reader]
    cols = [np.array(c) for c in zip(*rows)] if rows else [np.array([]) for _ in header]
    return header, cols


def write_rows_csv(header, rows, path) -> None:
    _write(path, header, ([fmt(v) for v in row] for row in rows))


def gnuplot_script(data_path, xlabel: str, ylabel: str, zlabel: str | None = None,
                   n_curves: int = 1) -> str:
    """Minimal gnuplot commands referencing ``data_path``; nothing else."""
    name = Path(data_path).name
    lines = [
        "set datafile separator ','",
        "set datafile missing 'NA'",
        "set key autotitle columnhead",
        f"set xlabel '{xlabel}'",
        f"set ylabel '{ylabel}'",
    ]
    if zlabel is not None:
        lines += [f"set zlabel '{zlabel}'", f"splot '{name}' using 1:2:3 with points"]
    else:
        plots = ", ".join(
            f"'{name}' using 1:{k + 2} with lines"
            for k in range(n_curves)
        )
        lines.append(f"plot {plots}")
    return "\n".join(lines) + "\n"
