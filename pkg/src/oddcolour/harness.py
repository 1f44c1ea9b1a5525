"""Reproducible experiment plans.

A plan is a line-oriented text file, one trial per line:

    <graph-file-or-genspec> <algo> <k> <seed> <cap>

The instance is either a path to a graph file or ``gen:<family>:<p1>:...``
understood by ConstructionSpec. algo is one of greedy, two-phase, chi,
product, hodd:<h>, hodd-product:<h>. k may be ``-`` to use the algorithm's
formula default. Rows run independently (optionally in a process pool) and
are reported in plan order, so a plan maps to byte-identical CSV on reruns.
"""

from __future__ import annotations

import concurrent.futures
import time
from typing import Optional, TextIO

from . import fileio
from .bounds import odd_surplus
from .constructions import ConstructionSpec
from .core import Colouring, Graph, SolveOutcome, neighbourhood_hypergraph, PairGH
from .greedy import greedy_odd
from .sampler import (
    TrialRecord,
    chi_bound_colour,
    hodd_delta_colour,
    hodd_product_colour,
    product_colour,
    two_phase_colour,
)


class PlanError(ValueError):
    pass


def _load_instance(token: str) -> Graph:
    if token.startswith("gen:"):
        return ConstructionSpec.parse(token[4:]).build()
    return fileio.read_graph(token)


def greedy_proper(g: Graph) -> Colouring:
    """Plain greedy proper colouring in vertex order; used as a product base."""
    assignment: list[Optional[int]] = [None] * g.n
    used = 1
    for v in range(g.n):
        banned = {assignment[u] for u in g.adj[v] if assignment[u] is not None}
        c = next(x for x in range(1, g.n + 2) if x not in banned)
        used = max(used, c)
        assignment[v] = c
    return Colouring(used, assignment)


def default_k(g: Graph, algo: str) -> int:
    delta = max(g.max_degree(), 3)
    return g.max_degree() + odd_surplus(delta)


def run_row(token: str, algo: str, k_token: str, seed: int, cap: int) -> TrialRecord:
    """Execute one plan row; failures become success=0 rows, never exceptions."""
    start = time.monotonic()
    try:
        g = _load_instance(token)
        if algo == "greedy":
            col = greedy_odd(g)
            used = max((c for c in col.assignment if c), default=0)
            return TrialRecord(token, algo, used, seed, 0, True,
                               (time.monotonic() - start) * 1000)
        k = default_k(g, algo) if k_token == "-" else int(k_token)
        if algo == "two-phase":
            out = two_phase_colour(g, k, cap=cap, seed=seed)
        else:
            p = PairGH(g, neighbourhood_hypergraph(g))
            everything = range(g.n)
            empty = Colouring.empty(0, g.n)
            if algo == "chi":
                eta = max(1, k - p.graph.max_degree())
                out = chi_bound_colour(p, everything, empty, eta, cap=cap, seed=seed,
                                       strict=False)
            elif algo == "product":
                sigma1 = greedy_proper(g)
                eta = max(1, k // max(1, sigma1.k))
                out = product_colour(p, everything, empty, sigma1, eta, cap=cap,
                                     seed=seed, strict=False)
            elif algo.startswith("hodd-product:"):
                h = int(algo.split(":", 1)[1])
                sigma1 = greedy_proper(g)
                out = hodd_product_colour(p, everything, empty, sigma1, h, cap=cap,
                                          seed=seed)
            elif algo.startswith("hodd:"):
                h = int(algo.split(":", 1)[1])
                out = hodd_delta_colour(p, everything, empty, h, cap=cap, seed=seed)
            else:
                raise PlanError(f"unknown algorithm {algo!r}")
        got_k = out.certificate.k if out.certificate else k
        return TrialRecord(token, algo, got_k, seed, out.nodes,
                           out.status == SolveOutcome.SAT,
                           (time.monotonic() - start) * 1000)
    except PlanError:
        raise
    except Exception:
        return TrialRecord(token, algo, 0, seed, 0, False,
                           (time.monotonic() - start) * 1000)


def parse_plan(text: str) -> list[tuple[str, str, str, int, int]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 5:
            raise PlanError(f"line {lineno}: expected 5 fields, got {len(parts)}")
        token, algo, k_token, seed, cap = parts
        rows.append((token, algo, k_token, int(seed), int(cap)))
    return rows


def run_plan(text: str, jobs: int = 1) -> list[TrialRecord]:
    """Run every row of a plan; output order always matches plan order."""
    rows = parse_plan(text)
    if jobs <= 1:
        return [run_row(*row) for row in rows]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_row_tuple, rows))


def _run_row_tuple(row: tuple[str, str, str, int, int]) -> TrialRecord:
    return run_row(*row)


def write_report(records: list[TrialRecord], out: TextIO, timings: bool = False) -> None:
    """CSV report in plan order. Wall times are zeroed unless timings is set,
    so identical plans map to byte-identical reports."""
    out.write(TrialRecord.CSV_HEADER + "\n")
    for r in records:
        if timings:
            out.write(r.csv_row() + "\n")
        else:
            out.write(TrialRecord(r.instance, r.algo, r.k, r.seed, r.iterations,
                                  r.success, 0.0).csv_row() + "\n")
