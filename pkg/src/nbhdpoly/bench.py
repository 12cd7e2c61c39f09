"""Timing harness for the reduction on large sparse graph families."""

from __future__ import annotations

import csv
import io
import os
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from .decomposition import attachment_sequence_polynomial
from .generators import grid, ladder, random_degenerate_attachments
from .graph import Graph, from_edge_list
from .reduction import neighborhood_polynomial_reduction

COLUMNS = ["family", "n", "m", "degeneracy", "wall_time", "poly_degree"]

DEFAULT_LADDERS = [10, 100, 1000]
DEFAULT_GRIDS = [(10, 10), (30, 30)]
DEFAULT_DEGENERATE = [(5, 100), (5, 1000)]


@dataclass
class BenchRow:
    family: str
    n: int
    m: int
    degeneracy: int
    wall_time: Optional[float]
    poly_degree: int
    incremental_ok: Optional[bool] = None


def bench_seed(default: int = 0) -> int:
    raw = os.environ.get("NBHD_SEED")
    return int(raw) if raw not in (None, "") else default


def time_reduction(family: str, G: Graph, degree_guard: int = 25) -> tuple[BenchRow, object]:
    start = time.perf_counter()
    poly, trace = neighborhood_polynomial_reduction(G, degree_guard, None, keep_trace=False)
    elapsed = time.perf_counter() - start
    return BenchRow(family, G.n, G.m, trace.degeneracy_observed, elapsed, poly.degree), poly


def run_bench(ladders: Iterable[int] = (), grids: Iterable[tuple[int, int]] = (),
              degenerate: Iterable[tuple[int, int]] = (), seed: int = 0,
              check_incremental: bool = False) -> list[BenchRow]:
    """Time the reduction on each requested instance, in input order.

    Random k-degenerate graphs are built by attaching each new vertex to
    ``k`` random earlier ones; with ``check_incremental`` the polynomial is
    also maintained by the attachment rule during construction and compared.
    """
    rows = []
    for n in ladders:
        rows.append(time_reduction("ladder", ladder(n))[0])
    for a, b in grids:
        rows.append(time_reduction(f"grid{a}x{b}", grid(a, b))[0])
    for k, n in degenerate:
        attach = random_degenerate_attachments(n, k, seed)
        G = from_edge_list(n, [(u, i) for i, us in enumerate(attach) for u in us])
        row, poly = time_reduction(f"degenerate{k}", G)
        if check_incremental:
            row.incremental_ok = attachment_sequence_polynomial(attach) == poly
        rows.append(row)
    return rows


def format_csv(rows: Iterable[BenchRow], timing: bool = True, incremental: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS + (["incremental_ok"] if incremental else []))
    for r in rows:
        wall = f"{r.wall_time:.6f}" if timing and r.wall_time is not None else ""
        line = [r.family, r.n, r.m, r.degeneracy, wall, r.poly_degree]
        if incremental:
            line.append("" if r.incremental_ok is None else str(r.incremental_ok).lower())
        writer.writerow(line)
    return buf.getvalue()
