"""Randomized colourers: capped local resampling of the constraint sets
that witness a failure, in the style of Moser and Tardos.

Each operation starts from a cheap deterministic colouring, then repeatedly
picks the lowest-index violated constraint and redraws the colours of its
resample set M from the current availability lists, up to a caller-set cap.
Outputs are never trusted: every SAT result is revalidated by the audit
module before being returned, and a cap exhaustion returns GaveUp rather
than a bad colouring.
"""

from __future__ import annotations

import logging
import math
import random
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import bounds
from .audit import (
    OddAudit,
    is_h_odd_colouring,
    is_odd_colouring,
    is_odd_pair_colouring,
    is_proper,
)
from .core import (
    Colouring,
    Graph,
    InternalInvariantError,
    PairGH,
    SolveOutcome,
    vplus_split,
)

log = logging.getLogger(__name__)

DEFAULT_CAP = 10 ** 6

# when set, every resample batch re-asserts partial properness; slow, for tests
DEBUG_VALIDATE = False


def _assert_partial_proper(g: Graph, colour: Sequence[Optional[int]]) -> None:
    for u, v in g.edges:
        if colour[u] is not None and colour[u] == colour[v]:
            raise InternalInvariantError(f"resampling broke properness on edge ({u},{v})")


@dataclass
class TrialRecord:
    """One row of the experiment harness: what ran, with which budget, and how it went."""

    instance: str
    algo: str
    k: int
    seed: int
    iterations: int
    success: bool
    ms: float

    CSV_HEADER = "instance,algo,k,seed,iterations,success,ms"

    def csv_row(self) -> str:
        return (
            f"{self.instance},{self.algo},{self.k},{self.seed},"
            f"{self.iterations},{int(self.success)},{self.ms:.12g}"
        )


@dataclass
class ResampleSchedule:
    """Per-constraint resample sets and their exact dependency neighbourhoods.

    members[i] is M for tracked constraint i (at most m vertices, all inside
    the resample pool); gamma[i] lists the tracked constraints whose member
    sets meet M(i).
    """

    members: list[tuple[int, ...]]
    gamma: list[tuple[int, ...]]
    cap: int
    seed: int

    def dependency_degree(self) -> int:
        return max((len(gs) for gs in self.gamma), default=0)


def build_schedule(
    constraints: Sequence[tuple[int, ...]],
    pool: Optional[frozenset[int]],
    m: int,
    cap: int,
    seed: int,
) -> ResampleSchedule:
    """M per constraint = its m smallest members inside the pool; gamma exact."""
    members = []
    for e in constraints:
        eligible = [v for v in e if pool is None or v in pool]
        members.append(tuple(eligible[: max(0, m)]))
    touching: dict[int, list[int]] = {}
    for idx, e in enumerate(constraints):
        for v in e:
            touching.setdefault(v, []).append(idx)
    gamma = []
    for ms in members:
        hit: set[int] = set()
        for v in ms:
            hit.update(touching.get(v, ()))
        gamma.append(tuple(sorted(hit)))
    return ResampleSchedule(members, gamma, cap, seed)


def _pick(violated: set[int], scan: str, rng: random.Random) -> int:
    if scan == "lowest":
        return min(violated)
    if scan == "random":
        return rng.choice(sorted(violated))
    raise ValueError(f"unknown scan order {scan!r}")


def _proper_available(g: Graph, colour: Sequence[Optional[int]], u: int, k: int) -> list[int]:
    banned = {colour[x] for x in g.adj[u] if colour[x] is not None}
    avail = [c for c in range(1, k + 1) if c not in banned]
    if not avail:
        raise InternalInvariantError(f"no proper colour available for vertex {u}")
    return avail


def two_phase_colour(
    g: Graph,
    k: int,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    scan: str = "lowest",
) -> SolveOutcome:
    """Odd colouring with palette [k], k >= Delta+1, by splitting on degree.

    Phase 1 colours the high-degree vertices (degree >= k/2): a greedy pass
    keeps every low-degree vertex's odd colour protected, then the vertices
    whose whole neighbourhood is high-degree are resampled until each has an
    odd colour. Phase 2 extends to the low-degree vertices greedily; each
    neighbour forbids at most its colour and its witness colour, which is
    fewer than k options since low degree means degree < k/2.
    """
    delta = g.max_degree()
    if k < delta + 1:
        raise ValueError("two_phase_colour needs k >= Delta + 1")
    if delta < 66:
        log.warning("max degree %d is below the regime the analysis assumes (>= 66)", delta)
    start = time.monotonic()
    rng = random.Random(seed)
    vminus, vplus, vpp = vplus_split(g, k)

    audit = OddAudit.from_graph(g, h=1, k=k)
    pos_of = {v: i for i, v in enumerate(audit.ids)}
    colour = audit.colours

    def witness_of(u: int) -> Optional[int]:
        pos = pos_of.get(u)
        return None if pos is None else audit.witness(pos)

    def forbidden_for(u: int, protect_all: bool) -> set[int]:
        out = set()
        for x in g.adj[u]:
            cx = colour[x]
            if cx is not None:
                out.add(cx)
            if protect_all or x in vminus:
                w = witness_of(x)
                if w is not None:
                    out.add(w)
        return out

    # Phase 1a: greedy colouring of the high-degree part, keeping it proper
    # and protecting the witness colours of low-degree neighbours.
    for v in sorted(vplus):
        banned = forbidden_for(v, protect_all=False)
        c = next((x for x in range(1, k + 1) if x not in banned), None)
        if c is None:
            raise InternalInvariantError(f"phase 1 greedy ran out of colours at {v}")
        audit.assign(v, c)

    # Phase 1b: resample until every fully-high-degree vertex has an odd colour.
    m_target = max(1, (k - delta) // 2)
    tracked = {pos_of[v]: v for v in sorted(vpp)}
    violated = {pos for pos in tracked if not audit.odd[pos]}
    iterations = 0
    while violated:
        if iterations >= cap:
            return SolveOutcome(
                SolveOutcome.GAVE_UP, None, iterations, time.monotonic() - start,
                detail=f"resample cap {cap} exhausted",
            )
        iterations += 1
        pos = _pick(violated, scan, rng)
        v = tracked[pos]
        m_v = min(m_target, g.degree[v])
        resample = g.adj[v][:m_v]  # adjacency is sorted: smallest ids
        for u in resample:
            audit.unassign(u)
            banned = forbidden_for(u, protect_all=False)
            avail = [c for c in range(1, k + 1) if c not in banned]
            if not avail:
                raise InternalInvariantError(f"no admissible colour for vertex {u}")
            audit.assign(u, rng.choice(avail))
        affected: set[int] = set()
        for u in resample:
            affected.update(audit.incident[u])
        for q in affected:
            if q in tracked:
                if audit.odd[q]:
                    violated.discard(q)
                else:
                    violated.add(q)
        if DEBUG_VALIDATE:
            _assert_partial_proper(g, colour)

    # Phase 2: greedy on the low-degree part; every neighbour forbids at
    # most two colours (its own and its witness).
    for v in sorted(vminus):
        banned = forbidden_for(v, protect_all=True)
        c = next((x for x in range(1, k + 1) if x not in banned), None)
        if c is None:
            raise InternalInvariantError(f"phase 2 greedy ran out of colours at {v}")
        audit.assign(v, c)

    result = Colouring(k, list(colour))
    ok, violations = is_odd_colouring(g, result)
    if not ok:
        raise InternalInvariantError(f"two-phase output failed validation: {violations[:3]}")
    return SolveOutcome(SolveOutcome.SAT, result, iterations, time.monotonic() - start)


def _check_base(g: Graph, s: frozenset[int], base: Colouring, name: str) -> None:
    if base.n != g.n:
        raise ValueError(f"{name} must cover the full vertex universe")
    for v in range(g.n):
        if v not in s and base[v] is None:
            raise ValueError(f"{name} leaves vertex {v} outside S unassigned")
    for u, v in g.edges:
        if u not in s and v not in s and base[u] == base[v]:
            raise ValueError(f"{name} is not proper on the complement of S: edge ({u},{v})")


def _induced_eps(hyper_edges: Sequence[tuple[int, ...]], s: frozenset[int]) -> Optional[int]:
    if not hyper_edges:
        return None
    return min(sum(1 for v in e if v in s) for e in hyper_edges)


def _delta_inside(g: Graph, s: frozenset[int]) -> int:
    return max((sum(1 for u in g.adj[v] if u in s) for v in s), default=0)


def chi_bound_colour(
    p: PairGH,
    s: Iterable[int],
    base: Colouring,
    eta: int,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    scan: str = "lowest",
    strict: bool = True,
) -> SolveOutcome:
    """Odd colouring of the pair with palette k0 + Delta(G[S]) + eta, where
    k0 is the palette of the frozen base colouring outside S.

    Only vertices of S are coloured and resampled; every edge needs |e cap S|
    at least eta/2 so its resample set has room. M(e) holds the ceil(eta/2)
    smallest vertices of e cap S; availability is plain properness, which
    leaves at least eta choices by the degree bookkeeping.

    strict=False skips the minimum-intersection check and simply caps each
    resample set at |e cap S|; useful on instances below the analysed regime.
    """
    if eta < 1:
        raise ValueError("eta must be at least 1")
    g = p.graph
    S = frozenset(s)
    _check_base(g, S, base, "base")
    eps = _induced_eps(p.hyper.edges, S)
    if strict and eps is not None and eps < eta / 2.0:
        raise ValueError(f"epsilon too small: min |e∩S| = {eps} < eta/2 = {eta / 2}")
    start = time.monotonic()
    rng = random.Random(seed)
    k0 = base.k
    k = k0 + _delta_inside(g, S) + eta
    m = math.ceil(eta / 2.0)

    audit = OddAudit.from_pair(p, h=1, k=k)
    colour = audit.colours
    for v in range(g.n):
        if v not in S:
            audit.assign(v, base[v])
    for v in sorted(S):
        audit.assign(v, min(_proper_available(g, colour, v, k)))

    schedule = build_schedule(p.hyper.edges, S, m, cap, seed)
    violated = {pos for pos in range(p.hyper.m) if not audit.odd[pos]}
    iterations = 0
    while violated:
        if iterations >= cap:
            return SolveOutcome(
                SolveOutcome.GAVE_UP, None, iterations, time.monotonic() - start,
                detail=f"resample cap {cap} exhausted",
            )
        iterations += 1
        pos = _pick(violated, scan, rng)
        resample = schedule.members[pos]
        if not resample:
            return SolveOutcome(
                SolveOutcome.GAVE_UP, None, iterations, time.monotonic() - start,
                detail=f"edge {pos} has no resampleable vertex inside S",
            )
        for u in resample:
            audit.unassign(u)
            audit.assign(u, rng.choice(_proper_available(g, colour, u, k)))
        affected: set[int] = set()
        for u in resample:
            affected.update(audit.incident[u])
        for q in affected:
            if audit.odd[q]:
                violated.discard(q)
            else:
                violated.add(q)
        if DEBUG_VALIDATE:
            _assert_partial_proper(g, colour)

    result = Colouring(k, list(colour))
    ok_proper, vio_p = is_proper(g, result)
    ok_odd, vio_o = is_odd_pair_colouring(p, result)
    if not (ok_proper and ok_odd):
        raise InternalInvariantError(f"output failed validation: {(vio_p + vio_o)[:3]}")
    return SolveOutcome(SolveOutcome.SAT, result, iterations, time.monotonic() - start)


def _product_engine(
    p: PairGH,
    s: Iterable[int],
    sigma0: Colouring,
    sigma1: Colouring,
    eta: int,
    h: int,
    cap: int,
    seed: int,
    scan: str,
    strict: bool,
) -> SolveOutcome:
    """Shared core of the product colourers: pair colours (class of sigma1,
    label in [eta]) on S, sigma0 outside; only labels are ever resampled."""
    if eta < 1:
        raise ValueError("eta must be at least 1")
    g = p.graph
    S = frozenset(s)
    _check_base(g, S, sigma0, "sigma0")
    if sigma1.n != g.n:
        raise ValueError("sigma1 must cover the full vertex universe")
    for v in S:
        if sigma1[v] is None:
            raise ValueError(f"sigma1 leaves vertex {v} of S unassigned")
    for u, v in g.edges:
        if u in S and v in S and sigma1[u] == sigma1[v]:
            raise ValueError(f"sigma1 is not proper inside S: edge ({u},{v})")
    eps = _induced_eps(p.hyper.edges, S)
    if strict and eps is not None and eps < eta / 2.0:
        raise ValueError(f"epsilon too small: min |e∩S| = {eps} < eta/2 = {eta / 2}")
    start = time.monotonic()
    rng = random.Random(seed)
    k0, k1 = sigma0.k, sigma1.k
    k = k0 + eta * k1

    def flat(v: int, label: int) -> int:
        return k0 + (sigma1[v] - 1) * eta + label

    audit = OddAudit.from_pair(p, h=h, k=k)
    colour = audit.colours
    for v in range(g.n):
        if v not in S:
            audit.assign(v, sigma0[v])
    labels = {}
    for v in sorted(S):
        labels[v] = 1
        audit.assign(v, flat(v, 1))

    m = math.ceil(eta / 2.0)
    schedule = build_schedule(p.hyper.edges, S, m, cap, seed)
    violated = set(audit.unsatisfied_positions())
    iterations = 0

    if eta == 1 and violated:
        # a single label leaves nothing random to redraw
        return SolveOutcome(
            SolveOutcome.GAVE_UP, None, 0, time.monotonic() - start,
            detail="eta = 1 admits no resampling",
        )

    while violated:
        if iterations >= cap:
            return SolveOutcome(
                SolveOutcome.GAVE_UP, None, iterations, time.monotonic() - start,
                detail=f"resample cap {cap} exhausted",
            )
        iterations += 1
        pos = _pick(violated, scan, rng)
        resample = schedule.members[pos]
        if not resample:
            return SolveOutcome(
                SolveOutcome.GAVE_UP, None, iterations, time.monotonic() - start,
                detail=f"edge {pos} has no resampleable vertex inside S",
            )
        for u in resample:
            labels[u] = rng.randint(1, eta)
            audit.recolour(u, colour[u], flat(u, labels[u]))
        affected: set[int] = set()
        for u in resample:
            affected.update(audit.incident[u])
        for q in affected:
            if audit.satisfied(q):
                violated.discard(q)
            else:
                violated.add(q)
        if DEBUG_VALIDATE:
            _assert_partial_proper(g, colour)

    result = Colouring(k, list(colour))
    ok_proper, vio_p = is_proper(g, result)
    if h == 1:
        ok_c, vio_c = is_odd_pair_colouring(p, result)
    else:
        ok_c, vio_c = is_h_odd_colouring(p, result, h)
    if not (ok_proper and ok_c):
        raise InternalInvariantError(f"output failed validation: {(vio_p + vio_c)[:3]}")
    return SolveOutcome(SolveOutcome.SAT, result, iterations, time.monotonic() - start)


def product_colour(
    p: PairGH,
    s: Iterable[int],
    sigma0: Colouring,
    sigma1: Colouring,
    eta: int,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    scan: str = "lowest",
    strict: bool = True,
) -> SolveOutcome:
    """Odd colouring with palette k0 + eta*k1: S gets pair colours (class of
    sigma1, random label in [eta]) so properness never needs rechecking, and
    the labels of the ceil(eta/2) smallest vertices of a failing edge are
    redrawn until every edge has an odd colour. strict as in chi_bound_colour."""
    return _product_engine(p, s, sigma0, sigma1, eta, 1, cap, seed, scan, strict)


def _warn_hodd_regime(t: int, delta_h: int) -> None:
    if delta_h < 49:
        log.warning("hypergraph degree %d is below the analysed regime (>= 49)", delta_h)
    if delta_h >= 3:
        threshold = 2 * (math.log(delta_h) + math.log(math.log(delta_h)) + 3)
        if t < threshold:
            log.warning(
                "headroom t = %d is below the analysed threshold %.2f; trials may still succeed",
                t, threshold,
            )


def hodd_delta_colour(
    p: PairGH,
    s: Iterable[int],
    base: Colouring,
    h: int,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    scan: str = "lowest",
    strict: bool = True,
) -> SolveOutcome:
    """h-odd colouring with palette k0 + Delta(G[S]) + eta, eta from the
    h-odd surplus formula. Resample sets have size m = h-1+t, which the
    headroom condition keeps within every edge. h = 1 is the plain odd
    problem and delegates to chi_bound_colour."""
    if h < 1:
        raise ValueError("h must be at least 1")
    g = p.graph
    S = frozenset(s)
    delta_h = p.hyper.max_degree()
    if h == 1:
        eta = bounds.hodd_surplus(1, max(_induced_eps(p.hyper.edges, S) or 1, 1), delta_h).eta
        return chi_bound_colour(p, S, base, eta, cap, seed, scan, strict)
    _check_base(g, S, base, "base")
    eps = _induced_eps(p.hyper.edges, S)
    start = time.monotonic()
    if eps is None:
        # no hyperedges: a proper extension is vacuously h-odd
        params = bounds.HOddSurplus(0, 0, 0, 0.0)
    else:
        params = bounds.hodd_surplus(h, eps, max(delta_h, 2))
        _warn_hodd_regime(params.t, delta_h)
    rng = random.Random(seed)
    k0 = base.k
    k = k0 + _delta_inside(g, S) + max(params.eta, 1)

    audit = OddAudit.from_pair(p, h=h, k=k)
    colour = audit.colours
    for v in range(g.n):
        if v not in S:
            audit.assign(v, base[v])
    for v in sorted(S):
        audit.assign(v, min(_proper_available(g, colour, v, k)))

    schedule = build_schedule(p.hyper.edges, S, params.m, cap, seed)
    violated = set(audit.unsatisfied_positions())
    iterations = 0
    while violated:
        if iterations >= cap:
            return SolveOutcome(
                SolveOutcome.GAVE_UP, None, iterations, time.monotonic() - start,
                detail=f"resample cap {cap} exhausted",
            )
        iterations += 1
        pos = _pick(violated, scan, rng)
        resample = schedule.members[pos]
        if not resample:
            return SolveOutcome(
                SolveOutcome.GAVE_UP, None, iterations, time.monotonic() - start,
                detail=f"edge {pos} has no resampleable vertex inside S",
            )
        for u in resample:
            audit.unassign(u)
            audit.assign(u, rng.choice(_proper_available(g, colour, u, k)))
        affected: set[int] = set()
        for u in resample:
            affected.update(audit.incident[u])
        for q in affected:
            if audit.satisfied(q):
                violated.discard(q)
            else:
                violated.add(q)
        if DEBUG_VALIDATE:
            _assert_partial_proper(g, colour)

    result = Colouring(k, list(colour))
    ok, violations = is_h_odd_colouring(p, result, h)
    if not ok:
        raise InternalInvariantError(f"output failed validation: {violations[:3]}")
    return SolveOutcome(SolveOutcome.SAT, result, iterations, time.monotonic() - start)


def hodd_product_colour(
    p: PairGH,
    s: Iterable[int],
    sigma0: Colouring,
    sigma1: Colouring,
    h: int,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
    scan: str = "lowest",
    strict: bool = True,
) -> SolveOutcome:
    """h-odd colouring with palette k0 + eta*k1 via the product construction;
    eta and the resample-set size come from the h-odd surplus formula. The
    headroom condition already keeps m inside every edge, so the engine runs
    with its intersection check relaxed."""
    if h < 1:
        raise ValueError("h must be at least 1")
    S = frozenset(s)
    delta_h = p.hyper.max_degree()
    eps = _induced_eps(p.hyper.edges, S)
    if h == 1:
        eta = bounds.hodd_surplus(1, max(eps or 1, 1), delta_h).eta
        return product_colour(p, S, sigma0, sigma1, eta, cap, seed, scan, strict)
    if eps is None:
        params = bounds.HOddSurplus(0, 0, 1, 1.0)
    else:
        params = bounds.hodd_surplus(h, eps, max(delta_h, 2))
        _warn_hodd_regime(params.t, delta_h)
    return _product_engine(p, S, sigma0, sigma1, max(params.eta, 1), h, cap, seed, scan, False)


@dataclass
class SubsetSample:
    """Result of the random vertex-subset search; found = False after all retries."""

    found: bool
    subset: frozenset[int] = frozenset()
    induced_min_edge: Optional[int] = None
    induced_max_degree: int = 0
    attempts: int = 0
    probability: float = 0.0
    degree_cap: float = 0.0


def sample_subset(p: PairGH, m: int, retries: int = 100, seed: int = 0) -> SubsetSample:
    """Random S with every hyperedge meeting S in at least m vertices and
    Delta(G[S]) below the analytic cap.

    Each vertex joins independently with probability (m + sqrt(11 m ln D))/r
    where D = Delta(G)+Delta(H) and r = min(eps(H), Delta(G)); a probability
    above 1 is a parameter error. Acceptance is checked against the full
    edges, which is weaker than the truncated-edge form the analysis uses,
    hence sound. Failure after all retries is a result, not an exception.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if retries < 1:
        raise ValueError("retries must be at least 1")
    g = p.graph
    d_dep = g.max_degree() + p.hyper.max_degree()
    eps = p.hyper.min_edge_size()
    # r = min(eps, Delta(G)), except an edgeless graph contributes nothing
    candidates = [x for x in (eps, g.max_degree() or None) if x is not None]
    if not candidates:
        raise ValueError("need a hyperedge or a graph edge to size the sample")
    r = min(candidates)
    if r < 1:
        raise ValueError("sampling probability exceeds 1: an empty hyperedge gives r = 0")
    ln_term = math.log(d_dep) if d_dep >= 1 else 0.0
    prob = (m + math.sqrt(11.0 * m * ln_term)) / r
    if prob > 1.0:
        raise ValueError(f"sampling probability {prob:.3f} exceeds 1; m too large for r = {r}")
    cap_d = (g.max_degree() / r) * (m + math.sqrt(60.0 * m * ln_term))
    rng = random.Random(seed)
    for attempt in range(1, retries + 1):
        s = frozenset(v for v in range(g.n) if rng.random() < prob)
        eps_ind = _induced_eps(p.hyper.edges, s)
        if eps_ind is not None and eps_ind < m:
            continue
        deg_ind = _delta_inside(g, s)
        if deg_ind > cap_d:
            continue
        return SubsetSample(True, s, eps_ind, deg_ind, attempt, prob, cap_d)
    return SubsetSample(False, frozenset(), None, 0, retries, prob, cap_d)
