"""The repository's acceptance suite: every claim the package stands on,
runnable as one battery with a pass/fail line per criterion.

Exposed both to pytest (tests/test_acceptance.py) and to the CLI ``repro``
subcommand. Each criterion enforces its own wall-clock limit, so a pass
certifies the result and the budget together.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import bounds
from .audit import OddAudit, is_odd_colouring, is_pcf_colouring, is_proper
from .constructions import (
    complete,
    complete_bipartite,
    cycle,
    multipartite_gadget,
    path,
    random_graph,
    random_regular,
    rook,
    star,
    steiner_incidence,
    subdivision_complete,
)
from .core import Colouring, Graph, SolveOutcome
from .exact import Budget, as_pair, chromatic_number, decide, enumerate_decide
from .greedy import greedy_odd, odd_palette_bound, random_order
from .sampler import two_phase_colour


@dataclass
class Criterion:
    cid: str
    description: str
    limit_seconds: float
    run: Callable[[], tuple[bool, str]]


def _c1_c5_exact() -> tuple[bool, str]:
    p = as_pair(cycle(5))
    r4 = decide(p, "odd", 4)
    r5 = decide(p, "odd", 5)
    ok = r4.status == SolveOutcome.UNSAT and r5.status == SolveOutcome.SAT
    return ok, f"k=4 {r4.status}, k=5 {r5.status}"


def _c2_subdivision() -> tuple[bool, str]:
    p = as_pair(subdivision_complete(5))
    chi = chromatic_number(p, "proper", Budget(seconds=55)).k
    odd4 = decide(p, "odd", 4, Budget(seconds=55))
    odd5 = decide(p, "odd", 5, Budget(seconds=55))
    ok = chi == 2 and odd4.status == SolveOutcome.UNSAT and odd5.status == SolveOutcome.SAT
    return ok, f"chi={chi}, odd k=4 {odd4.status}, k=5 {odd5.status}"


def _c3_greedy_conformance() -> tuple[bool, str]:
    worst = 0
    for trial in range(1000):
        rng = random.Random(trial)
        n = rng.randint(5, 60)
        g = random_graph(n, 10, rng.uniform(0.05, 0.5), trial)
        col = greedy_odd(g, random_order(g, trial + 10 ** 6))
        used = len(set(c for c in col.assignment if c is not None))
        bound = odd_palette_bound(g.max_degree())
        if used > bound:
            return False, f"trial {trial}: {used} colours > bound {bound}"
        worst = max(worst, used)
    return True, f"1000 graphs validated; max colours used {worst}"


def _c4_multipartite_gadget() -> tuple[bool, str]:
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        g = multipartite_gadget(2, 2, 4)
    p = as_pair(g)
    r5 = decide(p, "odd", 5, Budget(seconds=290))
    if r5.status != SolveOutcome.UNSAT:
        return False, f"k=5 expected unsat, got {r5.status}"
    mres = chromatic_number(p, "odd", Budget(seconds=290))
    if mres.k is None:
        return False, "optimum search gave up"
    r_opt = decide(p, "odd", mres.k, Budget(seconds=290))
    ok = mres.k >= 6 and r_opt.status == SolveOutcome.SAT
    return ok, f"k=5 unsat; optimum {mres.k} (claimed >= 6) sat={r_opt.status}"


def _c5_fano() -> tuple[bool, str]:
    inc = steiner_incidence(7, 3)
    p = as_pair(inc.graph)
    r = decide(p, "hodd", 6, Budget(seconds=290), h=2)
    ok = r.status == SolveOutcome.UNSAT
    return ok, f"hodd(2) k=6 {r.status} (claims minimum >= 7 = 2*3+1)"


def _c6_rook() -> tuple[bool, str]:
    p = as_pair(rook(3))
    mres = chromatic_number(p, "hodd", Budget(seconds=290), h=4)
    strict_bound = 0.5 * 16 / 2  # half Delta^2 over (t+1) with Delta=4, t=1
    ok = mres.k == 9 and mres.k > strict_bound
    return ok, f"hodd(4) minimum {mres.k} (expected 9, strict bound {strict_bound:g})"


def _c7_two_phase() -> tuple[bool, str]:
    delta = 64
    k = delta + bounds.odd_surplus(delta)  # 99
    sat = 0
    iters = []
    for trial in range(20):
        g = random_regular(1000, delta, seed=1000 + trial)
        out = two_phase_colour(g, k, cap=10 ** 6, seed=trial)
        if out.status == SolveOutcome.SAT:
            sat += 1
            iters.append(out.nodes)
    ok = sat >= 18
    return ok, f"{sat}/20 SAT at k={k}; resamples per success: max {max(iters, default=0)}"


def _c8_walk_grid() -> tuple[bool, str]:
    samples = 10 ** 6
    lines = []
    ok = True
    for n in (10, 20, 40):
        for k in (0, n // 4):
            for tau in (4 * n, 16 * n):
                cfg = bounds.WalkConfig(n=n, k=k, tau=tau)
                est = bounds.simulate_walk(cfg, samples, seed=n * 1000 + k * 10 + tau)
                analytic = bounds.biased_walk_tail_bound(n, k, tau)
                point_ok = est.p_hat <= analytic + 3 * est.half_width
                ok = ok and point_ok
                if not point_ok:
                    lines.append(f"n={n} k={k} tau={tau}: {est.p_hat:.3g} > {analytic:.3g}")
    return ok, "; ".join(lines) if lines else "12 grid points within 3 half-widths"


def _c9_formulas() -> tuple[bool, str]:
    deltas = sorted({int(round(49 * (10 ** 5 / 49) ** (i / 40))) for i in range(41)})
    for d in deltas:
        if 2 * bounds.resample_size(d) > bounds.odd_surplus(d):
            return False, f"2*resample_size({d}) > odd_surplus({d})"
    for n in range(2, 301, 2):
        if not bounds.factorial_ratio_check(n):
            return False, f"factorial ratio bound fails at n={n}"
    for h in range(2, 65):
        for eps in range(2 * (h - 1), 257):
            if eps < h:
                continue
            params = bounds.hodd_surplus(h, eps, 64)
            if params.eta > 32 * (h - 1):
                return False, f"h={h} eps={eps}: eta {params.eta} > {32 * (h - 1)}"
    return True, f"{len(deltas)} degree samples, 150 factorial checks, h grid ok"


def _c10_validators() -> tuple[bool, str]:
    # implication chain on random total colourings
    rng = random.Random(7)
    chain_checked = 0
    for trial in range(300):
        n = rng.randint(2, 14)
        g = random_graph(n, 8, rng.uniform(0.2, 0.9), trial)
        col = Colouring(4, [rng.randint(1, 4) for _ in range(n)])
        pcf_ok = is_pcf_colouring(g, col)[0]
        odd_ok = is_odd_colouring(g, col)[0]
        proper_ok = is_proper(g, col)[0]
        if pcf_ok and not odd_ok:
            return False, f"trial {trial}: pcf held but odd failed"
        if odd_ok and not proper_ok:
            return False, f"trial {trial}: odd held but proper failed"
        chain_checked += 1

    # incremental audit against from-scratch rebuilds across 1e5 recolours
    g = random_graph(80, 12, 0.2, 99)
    audit = OddAudit.from_graph(g, h=1, k=9)
    rng = random.Random(13)
    for step in range(10 ** 5):
        v = rng.randrange(g.n)
        new = rng.choice([None, *range(1, 10)])
        audit.recolour(v, audit.colours[v], new)
        if step % 2000 == 0 or step == 10 ** 5 - 1:
            if not audit.state_equal(audit.rebuild()):
                return False, f"incremental audit diverged at step {step}"

    # pruned decide against unpruned enumeration on a small-instance corpus
    corpus: list[Graph] = [cycle(5), cycle(6), complete(4), path(4), star(3),
                           complete_bipartite(2, 3), complete(3)]
    rng = random.Random(5)
    for trial in range(40):
        n = rng.randint(2, 8)
        corpus.append(random_graph(n, 7, rng.uniform(0.2, 0.9), 500 + trial))
    checked = 0
    for gi, g in enumerate(corpus):
        p = as_pair(g)
        for k in range(1, 5):
            want = enumerate_decide(p, "odd", k)
            got = decide(p, "odd", k).status == SolveOutcome.SAT
            if want != got:
                return False, f"graph {gi} odd k={k}: enumeration {want} vs search {got}"
            checked += 1
            if gi % 4 == 0:
                for variant, hh in (("pcf", 1), ("hodd", 2)):
                    want = enumerate_decide(p, variant, k, h=hh)
                    got = decide(p, variant, k, h=hh).status == SolveOutcome.SAT
                    if want != got:
                        return False, f"graph {gi} {variant} k={k}: {want} vs {got}"
                    checked += 1
    return True, f"{chain_checked} chain samples, 1e5 recolours, {checked} oracle pairs"


def all_criteria() -> list[Criterion]:
    return [
        Criterion("c1-cycle5-exact", "exact oracle: C5 needs exactly 5 colours for odd",
                  1.0, _c1_c5_exact),
        Criterion("c2-subdivision", "subdivided K5: chromatic 2 but odd-chromatic 5",
                  60.0, _c2_subdivision),
        Criterion("c3-greedy-bound", "greedy odd colouring valid within floor(3D/2)+2 on 1000 graphs",
                  60.0, _c3_greedy_conformance),
        Criterion("c4-gadget", "multipartite gadget: unsat at 5, optimum at least 6",
                  300.0, _c4_multipartite_gadget),
        Criterion("c5-fano", "Fano incidence at h=2: unsat at 6",
                  300.0, _c5_fano),
        Criterion("c6-rook", "rook 3x3 at h=4: exact minimum 9",
                  300.0, _c6_rook),
        Criterion("c7-two-phase", "two-phase resampler: 18/20 trials on 64-regular n=1000 at k=99",
                  600.0, _c7_two_phase),
        Criterion("c8-walk-mc", "biased-walk Monte Carlo within the analytic tail bound",
                  300.0, _c8_walk_grid),
        Criterion("c9-formulas", "parameter formulas: surplus domination, factorial bound, h-odd cap",
                  10.0, _c9_formulas),
        Criterion("c10-validators", "validator chain, incremental audit, search vs enumeration",
                  300.0, _c10_validators),
    ]


def run_criteria(filter_substring: Optional[str] = None, echo: Callable[[str], None] = print) -> bool:
    """Run (a filtered subset of) the criteria; one line per criterion.

    Regime warnings from the samplers are muted for the duration so the
    output stays one line per criterion.
    """
    import logging

    package_log = logging.getLogger("oddcolour")
    previous_level = package_log.level
    package_log.setLevel(logging.ERROR)
    all_ok = True
    try:
        for crit in all_criteria():
            if filter_substring and filter_substring not in crit.cid:
                continue
            start = time.monotonic()
            try:
                ok, detail = crit.run()
            except Exception as exc:  # a crash is a failure, not an abort
                ok, detail = False, f"exception: {exc!r}"
            elapsed = time.monotonic() - start
            if elapsed > crit.limit_seconds:
                ok = False
                detail += f" [over budget: {elapsed:.1f}s > {crit.limit_seconds:g}s]"
            all_ok = all_ok and ok
            echo(f"{'PASS' if ok else 'FAIL'}  {crit.cid:<18} {elapsed:7.2f}s  {detail}")
    finally:
        package_log.setLevel(previous_level)
    return all_ok
