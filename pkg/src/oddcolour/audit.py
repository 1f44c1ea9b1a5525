"""Colouring validators and incremental odd-colour bookkeeping.

A colour is odd for a vertex set X when it occurs an odd number of times
on X. The validators here are the ground truth for every colourer: no
solver output is trusted until it passes the matching check.

Constraint semantics:
  - odd: the neighbourhood of every non-isolated vertex has an odd colour.
  - pcf: the neighbourhood of every non-isolated vertex has a colour
    occurring exactly once.
  - h-odd over a pair (G, H): every hyperedge e has at least min(h, |e|)
    odd colours. Empty edges are vacuous under the min convention.
  - plain odd over a pair: every hyperedge needs at least one odd colour,
    so an empty edge is unsatisfiable and reported with its own kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import Colouring, Graph, Hypergraph, PairGH

IMPROPER_EDGE = "improper-edge"
NO_ODD_COLOUR = "no-odd-colour"
TOO_FEW_ODD = "too-few-odd-colours"
EMPTY_EDGE = "empty-edge"


@dataclass(frozen=True)
class Violation:
    kind: str
    constraint: int
    detail: str = ""


def _require_total(c: Colouring) -> None:
    if not c.is_total():
        raise ValueError("colouring not total")


def odd_colours(c: Colouring, xs: Iterable[int]) -> set[int]:
    """Colours occurring an odd number of times on xs. All of xs must be assigned."""
    counts: dict[int, int] = {}
    for v in xs:
        colour = c[v]
        if colour is None:
            raise ValueError(f"vertex {v} is unassigned")
        counts[colour] = counts.get(colour, 0) + 1
    return {x for x, cnt in counts.items() if cnt % 2 == 1}


def is_proper(g: Graph, c: Colouring) -> tuple[bool, list[Violation]]:
    """True iff no edge is monochromatic; violations list every bad edge."""
    _require_total(c)
    violations = []
    for i, (u, v) in enumerate(g.edges):
        if c[u] == c[v]:
            violations.append(Violation(IMPROPER_EDGE, i, f"edge ({u},{v}) colour {c[u]}"))
    return not violations, violations


def is_odd_colouring(g: Graph, c: Colouring) -> tuple[bool, list[Violation]]:
    """Proper, and every non-isolated vertex sees an odd colour in its neighbourhood."""
    ok, violations = is_proper(g, c)
    for v in range(g.n):
        if g.degree[v] == 0:
            continue
        if not odd_colours(c, g.adj[v]):
            violations.append(Violation(NO_ODD_COLOUR, v, f"N({v}) has no odd colour"))
    return not violations, violations


def is_pcf_colouring(g: Graph, c: Colouring) -> tuple[bool, list[Violation]]:
    """Proper, and every non-isolated vertex sees a colour exactly once."""
    ok, violations = is_proper(g, c)
    for v in range(g.n):
        if g.degree[v] == 0:
            continue
        counts: dict[int, int] = {}
        for u in g.adj[v]:
            counts[c[u]] = counts.get(c[u], 0) + 1
        if 1 not in counts.values():
            violations.append(Violation(NO_ODD_COLOUR, v, f"N({v}) has no unique colour"))
    return not violations, violations


def is_h_odd_colouring(p: PairGH, c: Colouring, h: int) -> tuple[bool, list[Violation]]:
    """Proper on the graph, and every hyperedge e has >= min(h, |e|) odd colours."""
    if h < 1:
        raise ValueError("h must be at least 1")
    ok, violations = is_proper(p.graph, c)
    for i, e in enumerate(p.hyper.edges):
        need = min(h, len(e))
        if need == 0:
            continue
        got = len(odd_colours(c, e))
        if got < need:
            violations.append(
                Violation(TOO_FEW_ODD, i, f"edge {i}: {got} odd colours, need {need}")
            )
    return not violations, violations


def is_odd_pair_colouring(p: PairGH, c: Colouring) -> tuple[bool, list[Violation]]:
    """Proper on the graph, and every hyperedge has an odd colour.

    Unlike the h-odd check, an empty edge can never have an odd colour and
    is reported as an unsatisfiable constraint.
    """
    ok, violations = is_proper(p.graph, c)
    for i, e in enumerate(p.hyper.edges):
        if len(e) == 0:
            violations.append(Violation(EMPTY_EDGE, i, "empty edge is unsatisfiable"))
        elif not odd_colours(c, e):
            violations.append(Violation(NO_ODD_COLOUR, i, f"edge {i} has no odd colour"))
    return not violations, violations


class OddAudit:
    """Per-constraint parity bookkeeping kept in sync under recolouring.

    Tracks, for each constraint (a vertex set), the colour counts of its
    assigned members and the set of odd colours. A constraint with exactly
    one odd colour is critical and that colour is its witness.
    """

    def __init__(
        self,
        n: int,
        k: int,
        ids: Sequence[int],
        members: Sequence[tuple[int, ...]],
        required: Sequence[int],
        colours: Optional[Sequence[Optional[int]]] = None,
    ):
        if not (len(ids) == len(members) == len(required)):
            raise ValueError("ids, members and required must align")
        self.n = n
        self.k = k
        self.ids = list(ids)
        self.members = [tuple(e) for e in members]
        self.required = list(required)
        self.colours: list[Optional[int]] = list(colours) if colours else [None] * n
        self.incident: list[list[int]] = [[] for _ in range(n)]
        for pos, e in enumerate(self.members):
            for v in e:
                self.incident[v].append(pos)
        self.counts: list[dict[int, int]] = [dict() for _ in self.members]
        self.odd: list[set[int]] = [set() for _ in self.members]
        for pos, e in enumerate(self.members):
            cnt = self.counts[pos]
            for v in e:
                colour = self.colours[v]
                if colour is not None:
                    cnt[colour] = cnt.get(colour, 0) + 1
            self.odd[pos] = {x for x, m in cnt.items() if m % 2 == 1}

    @classmethod
    def from_graph(cls, g: Graph, colouring: Optional[Colouring] = None, h: int = 1, k: int = 0):
        """Neighbourhood constraints: one per non-isolated vertex, id = vertex."""
        ids = [v for v in range(g.n) if g.degree[v] > 0]
        members = [g.adj[v] for v in ids]
        required = [min(h, g.degree[v]) for v in ids]
        colours = colouring.assignment if colouring else None
        kk = colouring.k if colouring else k
        return cls(g.n, kk, ids, members, required, colours)

    @classmethod
    def from_pair(cls, p: PairGH, colouring: Optional[Colouring] = None, h: int = 1, k: int = 0):
        """Hyperedge constraints, id = edge index; required = min(h, |e|)."""
        ids = list(range(p.hyper.m))
        members = list(p.hyper.edges)
        required = [min(h, len(e)) for e in p.hyper.edges]
        colours = colouring.assignment if colouring else None
        kk = colouring.k if colouring else k
        return cls(p.n, kk, ids, members, required, colours)

    def recolour(self, v: int, old: Optional[int], new: Optional[int]) -> "OddAudit":
        """Apply one recolouring step, updating only the constraints containing v."""
        if self.colours[v] != old:
            raise ValueError(f"vertex {v} has colour {self.colours[v]}, not {old}")
        if old == new:
            return self
        self.colours[v] = new
        for pos in self.incident[v]:
            cnt = self.counts[pos]
            odd = self.odd[pos]
            if old is not None:
                left = cnt[old] - 1
                if left:
                    cnt[old] = left
                else:
                    del cnt[old]
                odd.symmetric_difference_update((old,))
            if new is not None:
                cnt[new] = cnt.get(new, 0) + 1
                odd.symmetric_difference_update((new,))
        return self

    def assign(self, v: int, colour: int) -> "OddAudit":
        return self.recolour(v, self.colours[v], colour)

    def unassign(self, v: int) -> "OddAudit":
        return self.recolour(v, self.colours[v], None)

    def witness(self, pos: int) -> Optional[int]:
        """The unique odd colour of constraint pos, when exactly one exists."""
        odd = self.odd[pos]
        if len(odd) == 1:
            return next(iter(odd))
        return None

    def satisfied(self, pos: int) -> bool:
        return len(self.odd[pos]) >= self.required[pos]

    def unsatisfied_positions(self) -> list[int]:
        return [pos for pos in range(len(self.members)) if not self.satisfied(pos)]

    def records(self):
        """One record per constraint: (id, odd set, witness, required, satisfied)."""
        return [
            (
                self.ids[pos],
                frozenset(self.odd[pos]),
                self.witness(pos),
                self.required[pos],
                self.satisfied(pos),
            )
            for pos in range(len(self.members))
        ]

    def rebuild(self) -> "OddAudit":
        """From-scratch recomputation with the same constraints and colours."""
        return OddAudit(self.n, self.k, self.ids, self.members, self.required, self.colours)

    def state_equal(self, other: "OddAudit") -> bool:
        return (
            self.ids == other.ids
            and self.members == other.members
            and self.colours == other.colours
            and self.counts == other.counts
            and self.odd == other.odd
        )


def audit_incremental(state: OddAudit, recolour: tuple[int, Optional[int], Optional[int]]) -> OddAudit:
    """Apply (vertex, old, new) to the audit state; equals a from-scratch rebuild."""
    v, old, new = recolour
    return state.recolour(v, old, new)
