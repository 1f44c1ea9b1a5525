"""Command-line front end.

Subcommands: gen, validate, colour (greedy|lll), exact, exact-min, bounds,
plan, repro. Every path that emits a colouring revalidates it first, and
all randomness flows from explicit --seed arguments, so runs reproduce
byte for byte.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import acceptance, bounds, fileio, harness
from .audit import (
    Violation,
    is_h_odd_colouring,
    is_odd_colouring,
    is_pcf_colouring,
    is_proper,
)
from .constructions import ConstructionSpec, steiner_incidence
from .core import Colouring, Graph, PairGH, SolveOutcome, neighbourhood_hypergraph
from .exact import Budget, as_pair, chromatic_number, decide
from .greedy import degeneracy_order, greedy_hodd, greedy_odd, random_order
from .sampler import (
    TrialRecord,
    chi_bound_colour,
    hodd_delta_colour,
    hodd_product_colour,
    product_colour,
    two_phase_colour,
)


def _load_pair(graph_path: str, hyper_path: Optional[str]) -> PairGH:
    g = fileio.read_graph(graph_path)
    if hyper_path:
        return PairGH(g, fileio.read_hypergraph(hyper_path))
    return as_pair(g)


def _print_violations(violations: list[Violation]) -> None:
    print("kind,constraint,detail")
    for v in violations:
        detail = v.detail.replace(",", ";")
        print(f"{v.kind},{v.constraint},{detail}")


def _cmd_gen(args) -> int:
    spec_text = ":".join([args.family] + args.params)
    spec = ConstructionSpec.parse(spec_text)
    g = spec.build()
    fileio.write_graph(g, args.output)
    if args.hyper:
        if args.family == "steiner":
            design = steiner_incidence(*spec.params).design
            fileio.write_hypergraph(design, args.hyper)
        else:
            fileio.write_hypergraph(neighbourhood_hypergraph(g), args.hyper)
    print(f"{spec}: n={g.n} m={g.m} maxdeg={g.max_degree()}")
    return 0


def _cmd_validate(args) -> int:
    g = fileio.read_graph(args.graph)
    col = fileio.read_colouring(args.colouring, n=g.n, k=args.k)
    if args.variant == "proper":
        ok, violations = is_proper(g, col)
    elif args.variant == "odd":
        ok, violations = is_odd_colouring(g, col)
    elif args.variant == "pcf":
        ok, violations = is_pcf_colouring(g, col)
    else:
        pair = _load_pair(args.graph, args.hyper)
        ok, violations = is_h_odd_colouring(pair, col, args.h)
    _print_violations(violations)
    return 0 if ok else 1


def _order_from_flag(g: Graph, flag: str) -> list[int]:
    if flag == "input":
        return list(range(g.n))
    if flag == "degen":
        return degeneracy_order(g)
    if flag.startswith("random:"):
        return random_order(g, int(flag.split(":", 1)[1]))
    raise SystemExit(f"unknown order {flag!r}")


def _cmd_colour_greedy(args) -> int:
    g = fileio.read_graph(args.graph)
    order = _order_from_flag(g, args.order)
    if args.h > 1 or args.hyper:
        pair = _load_pair(args.graph, args.hyper)
        col = greedy_hodd(pair, args.h, order)
    else:
        col = greedy_odd(g, order)
    if args.output:
        fileio.write_colouring(col, args.output)
    print(max((c for c in col.assignment if c), default=0))
    return 0


def _cmd_colour_lll(args) -> int:
    g = fileio.read_graph(args.graph)
    import time as _time

    start = _time.monotonic()
    if args.variant == "two-phase":
        k = args.k if args.k else harness.default_k(g, args.variant)
        out = two_phase_colour(g, k, cap=args.cap, seed=args.seed, scan=args.scan)
    else:
        pair = _load_pair(args.graph, args.hyper)
        everything = range(g.n)
        empty = Colouring.empty(0, g.n)
        if args.variant == "chi":
            eta = args.eta or bounds.odd_surplus(max(pair.hyper.max_degree(), 3))
            out = chi_bound_colour(pair, everything, empty, eta, cap=args.cap,
                                   seed=args.seed, scan=args.scan, strict=args.strict)
        elif args.variant == "product":
            sigma1 = harness.greedy_proper(g)
            eta = args.eta or bounds.odd_surplus(max(pair.hyper.max_degree(), 3))
            out = product_colour(pair, everything, empty, sigma1, eta, cap=args.cap,
                                 seed=args.seed, scan=args.scan, strict=args.strict)
        elif args.variant == "hodd":
            out = hodd_delta_colour(pair, everything, empty, args.h, cap=args.cap,
                                    seed=args.seed, scan=args.scan)
        elif args.variant == "hodd-product":
            sigma1 = harness.greedy_proper(g)
            out = hodd_product_colour(pair, everything, empty, sigma1, args.h,
                                      cap=args.cap, seed=args.seed, scan=args.scan)
        else:
            raise SystemExit(f"unknown variant {args.variant!r}")
    ms = (_time.monotonic() - start) * 1000
    k_out = out.certificate.k if out.certificate else (args.k or 0)
    record = TrialRecord(args.graph, args.variant, k_out, args.seed, out.nodes,
                         out.status == SolveOutcome.SAT, ms)
    print(TrialRecord.CSV_HEADER)
    print(record.csv_row())
    if out.status == SolveOutcome.SAT and args.output:
        fileio.write_colouring(out.certificate, args.output)
    return 0 if out.status == SolveOutcome.SAT else 1


def _exact_row(instance: str, variant: str, k: int, out) -> str:
    return f"{instance},{variant},{k},{out.status},{out.nodes},{out.seconds * 1000:.12g}"


def _cmd_exact(args) -> int:
    pair = _load_pair(args.graph, args.hyper)
    budget = Budget(nodes=args.nodes, seconds=args.seconds)
    out = decide(pair, args.variant, args.k, budget, h=args.h)
    print("instance,variant,k,status,nodes,ms")
    print(_exact_row(args.graph, args.variant, args.k, out))
    if out.status == SolveOutcome.SAT and args.output:
        fileio.write_colouring(out.certificate, args.output)
    return 0 if out.status != SolveOutcome.GAVE_UP else 2


def _cmd_exact_min(args) -> int:
    pair = _load_pair(args.graph, args.hyper)
    budget = Budget(nodes=args.nodes, seconds=args.seconds)
    res = chromatic_number(pair, args.variant, budget, h=args.h)
    print("instance,variant,k,status,nodes,ms")
    print(_exact_row(args.graph, args.variant, res.k if res.k else -1, res.outcome))
    if res.k is not None and args.output and res.outcome.certificate:
        fileio.write_colouring(res.outcome.certificate, args.output)
    return 0 if res.k is not None else 2


_BOUND_EVALUATORS = {
    "odd-surplus": (bounds.odd_surplus, (int,)),
    "resample-size": (bounds.resample_size, (int,)),
    "lambert-wm1": (bounds.lambert_wm1, (float,)),
    "walk-tail": (bounds.biased_walk_tail_bound, (int, int, float)),
    "no-odd": (bounds.no_odd_colour_bound, (int, float)),
    "few-odd": (bounds.few_odd_colours_bound, (int, int, float)),
    "chernoff-lower": (bounds.chernoff_lower, (float, float)),
    "chernoff-upper": (bounds.chernoff_upper, (float, float)),
    "greedy-hodd": (bounds.greedy_hodd_bound, (int, int, int)),
    "factorial-check": (bounds.factorial_ratio_check, (int,)),
    "hodd-surplus": (bounds.hodd_surplus, (int, int, int)),
}


def _cmd_bounds(args) -> int:
    if args.name == "verify":
        return _cmd_bounds_verify(args)
    if args.name not in _BOUND_EVALUATORS:
        raise SystemExit(f"unknown bound {args.name!r}; choices: {sorted(_BOUND_EVALUATORS)}")
    fn, types = _BOUND_EVALUATORS[args.name]
    if len(args.args) != len(types):
        raise SystemExit(f"{args.name} expects {len(types)} arguments")
    value = fn(*(t(a) for t, a in zip(types, args.args)))
    if isinstance(value, bool):
        print("true" if value else "false")
    elif isinstance(value, tuple):
        print(",".join(f"{v:.12g}" if isinstance(v, float) else str(v) for v in value))
    elif isinstance(value, float):
        print(f"{value:.12g}")
    else:
        print(value)
    return 0


def _cmd_bounds_verify(args) -> int:
    """Grid lines: 'walk <n> <k> <tau>' or 'chernoff <n> <p> <dev>'."""
    if not args.grid:
        raise SystemExit("bounds verify needs --grid <file>")
    rows = ["formula,params,analytic,empirical,ci,ok"]
    all_ok = True
    with open(args.grid, "r", encoding="utf-8") as f:
        for raw in f:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "walk":
                n, k, tau = int(parts[1]), int(parts[2]), float(parts[3])
                est = bounds.simulate_walk(bounds.WalkConfig(n=n, k=k, tau=tau),
                                           args.samples, args.seed)
                analytic = bounds.biased_walk_tail_bound(n, k, tau)
                ok = est.p_hat <= analytic + 3 * est.half_width
                rows.append(f"walk,{n}:{k}:{tau:g},{analytic:.12g},{est.p_hat:.12g},"
                            f"{est.half_width:.12g},{int(ok)}")
            elif parts[0] == "chernoff":
                n, prob, dev = int(parts[1]), float(parts[2]), float(parts[3])
                tails = bounds.binomial_tails(n, prob, dev, args.samples, args.seed)
                mu = n * prob
                lo = bounds.chernoff_lower(mu, dev) if dev < mu else 1.0
                hi = bounds.chernoff_upper(mu, dev)
                ok = (tails.emp_lower <= lo + 3 * tails.half_width_lower
                      and tails.emp_upper <= hi + 3 * tails.half_width_upper)
                rows.append(f"chernoff-lower,{n}:{prob:g}:{dev:g},{lo:.12g},"
                            f"{tails.emp_lower:.12g},{tails.half_width_lower:.12g},{int(ok)}")
                rows.append(f"chernoff-upper,{n}:{prob:g}:{dev:g},{hi:.12g},"
                            f"{tails.emp_upper:.12g},{tails.half_width_upper:.12g},{int(ok)}")
            else:
                raise SystemExit(f"unknown grid formula {parts[0]!r}")
            all_ok = all_ok and ok
    text = "\n".join(rows) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all_ok else 1


def _cmd_plan(args) -> int:
    with open(args.plan, "r", encoding="utf-8") as f:
        text = f.read()
    records = harness.run_plan(text, jobs=args.jobs)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            harness.write_report(records, f, timings=args.timings)
    else:
        harness.write_report(records, sys.stdout, timings=args.timings)
    return 0


def _cmd_repro(args) -> int:
    ok = acceptance.run_criteria(args.filter)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oddcolour",
                                 description="odd / conflict-free / h-odd colouring toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family instance")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--hyper", help="also write a hypergraph file")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("validate", help="check a colouring file; exit 1 on violations")
    p.add_argument("--graph", required=True)
    p.add_argument("--colouring", required=True)
    p.add_argument("--variant", choices=["proper", "odd", "pcf", "hodd"], default="odd")
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--hyper")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("colour", help="run a colourer")
    colour_sub = p.add_subparsers(dest="colourer", required=True)

    pg = colour_sub.add_parser("greedy", help="deterministic greedy colourer")
    pg.add_argument("--graph", required=True)
    pg.add_argument("--order", default="input",
                    help="input | degen | random:<seed>")
    pg.add_argument("--h", type=int, default=1)
    pg.add_argument("--hyper")
    pg.add_argument("-o", "--output")
    pg.set_defaults(fn=_cmd_colour_greedy)

    pl = colour_sub.add_parser("lll", help="capped resampling colourer")
    pl.add_argument("--variant", required=True,
                    choices=["two-phase", "chi", "product", "hodd", "hodd-product"])
    pl.add_argument("--graph", required=True)
    pl.add_argument("--hyper")
    pl.add_argument("--k", type=int, default=0)
    pl.add_argument("--eta", type=int, default=0)
    pl.add_argument("--h", type=int, default=2)
    pl.add_argument("--cap", type=int, default=10 ** 6)
    pl.add_argument("--seed", type=int, default=0)
    pl.add_argument("--scan", choices=["lowest", "random"], default="lowest")
    pl.add_argument("--strict", action="store_true", default=False,
                    help="enforce the minimum-intersection precondition")
    pl.add_argument("-o", "--output")
    pl.set_defaults(fn=_cmd_colour_lll)

    p = sub.add_parser("exact", help="exact decision at a fixed palette size")
    p.add_argument("--graph", required=True)
    p.add_argument("--hyper")
    p.add_argument("--variant", choices=["proper", "odd", "pcf", "hodd"], default="odd")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--nodes", type=int, default=10 ** 8)
    p.add_argument("--seconds", type=float, default=300.0)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_exact)

    p = sub.add_parser("exact-min", help="smallest satisfiable palette size")
    p.add_argument("--graph", required=True)
    p.add_argument("--hyper")
    p.add_argument("--variant", choices=["proper", "odd", "pcf", "hodd"], default="odd")
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--nodes", type=int, default=10 ** 8)
    p.add_argument("--seconds", type=float, default=300.0)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_exact_min)

    p = sub.add_parser("bounds", help="evaluate a bound or verify a Monte-Carlo grid")
    p.add_argument("name")
    p.add_argument("args", nargs="*")
    p.add_argument("--grid")
    p.add_argument("--samples", type=int, default=10 ** 5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("plan", help="run an experiment plan file")
    p.add_argument("plan")
    p.add_argument("-o", "--output")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true",
                   help="include wall times (breaks byte-identical reruns)")
    p.set_defaults(fn=_cmd_plan)

    p = sub.add_parser("repro", help="run the acceptance criteria battery")
    p.add_argument("--filter", default=None)
    p.set_defaults(fn=_cmd_repro)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
