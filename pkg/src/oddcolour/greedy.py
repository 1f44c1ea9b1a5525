"""Deterministic greedy colourers with witness bookkeeping.

greedy_odd colours vertices in a given order inside a palette of
floor(3*Delta/2) + 2 colours. Each vertex avoids the colours of its
coloured neighbours and the witness colours of its critical neighbours
(a vertex is critical when its coloured neighbourhood has exactly one odd
colour). When every palette colour is forbidden, a colour is stolen from
a carefully chosen neighbour, which is then recoloured; the palette size
guarantees such a neighbour exists.

greedy_hodd works on a graph-hypergraph pair: every hyperedge that still
has at most h odd colours keeps them reserved, which maintains at least
min(h, coloured members) odd colours per edge throughout.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from .audit import OddAudit, is_h_odd_colouring, is_odd_colouring
from .core import Colouring, Graph, InternalInvariantError, PairGH, degeneracy


def odd_palette_bound(max_degree: int) -> int:
    """Palette size floor(3*Delta/2) + 2 that greedy_odd never exceeds."""
    return (3 * max_degree) // 2 + 2


def input_order(g: Graph) -> list[int]:
    return list(range(g.n))


def degeneracy_order(g: Graph) -> list[int]:
    """Reverse peeling order: each vertex sees at most degeneracy earlier neighbours."""
    _, peel = degeneracy(g)
    return peel[::-1]


def random_order(g: Graph, seed: int) -> list[int]:
    order = list(range(g.n))
    random.Random(seed).shuffle(order)
    return order


class _NeighbourhoodState:
    """Parity bookkeeping over open neighbourhoods during a greedy run."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.audit = OddAudit.from_graph(g, h=1, k=k)
        self.pos = {v: i for i, v in enumerate(self.audit.ids)}
        self.colour = self.audit.colours

    def witness(self, u: int) -> Optional[int]:
        pos = self.pos.get(u)
        return None if pos is None else self.audit.witness(pos)

    def odd_set(self, v: int) -> set[int]:
        pos = self.pos.get(v)
        return set() if pos is None else self.audit.odd[pos]

    def assign(self, v: int, c: int) -> None:
        self.audit.assign(v, c)

    def unassign(self, v: int) -> None:
        self.audit.unassign(v)

    def check_invariant(self) -> None:
        """Partial properness plus an odd colour for every vertex that has a
        coloured neighbour, with the parity state checked against a
        from-scratch rebuild; used in debug runs only."""
        colour = self.colour
        if not self.audit.state_equal(self.audit.rebuild()):
            raise InternalInvariantError("parity bookkeeping diverged from scratch")
        for u, v in self.g.edges:
            if colour[u] is not None and colour[u] == colour[v]:
                raise InternalInvariantError(f"monochromatic edge ({u},{v})")
        for u in range(self.g.n):
            if any(colour[w] is not None for w in self.g.adj[u]) and not self.odd_set(u):
                raise InternalInvariantError(f"vertex {u} lost all odd colours")


def _check_order(g: Graph, order: Optional[Sequence[int]]) -> list[int]:
    if order is None:
        return list(range(g.n))
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    return order


def greedy_odd(g: Graph, order: Optional[Sequence[int]] = None, check_invariant: bool = False) -> Colouring:
    """Odd colouring within floor(3*Delta/2) + 2 colours, deterministic in
    (graph, order). Smallest available colour wins; the steal-and-recolour
    repair scans candidate neighbours in ascending vertex id."""
    order = _check_order(g, order)
    k = odd_palette_bound(g.max_degree())
    st = _NeighbourhoodState(g, k)
    colour = st.colour

    for v in order:
        forbidden = set()
        for u in g.adj[v]:
            cu = colour[u]
            if cu is not None:
                forbidden.add(cu)
            w = st.witness(u)
            if w is not None:
                forbidden.add(w)
        if len(forbidden) < k:
            c = next(x for x in range(1, k + 1) if x not in forbidden)
            st.assign(v, c)
        else:
            _steal_and_recolour(g, st, v, k)
        if check_invariant:
            st.check_invariant()

    result = Colouring(k, list(colour))
    ok, violations = is_odd_colouring(g, result)
    if not ok:
        raise InternalInvariantError(f"greedy produced an invalid colouring: {violations[:3]}")
    return result


def _steal_and_recolour(g: Graph, st: _NeighbourhoodState, v: int, k: int) -> None:
    """All k colours are forbidden for v: take the colour of a neighbour y
    that (a) forbids two colours, (b) is the only reason its own colour is
    forbidden, and (c) whose colour is not the single odd colour of v's
    coloured neighbourhood; then recolour y."""
    colour = st.colour
    contrib: dict[int, set[int]] = {}
    for u in g.adj[v]:
        f = set()
        cu = colour[u]
        if cu is not None:
            f.add(cu)
        w = st.witness(u)
        if w is not None:
            f.add(w)
        contrib[u] = f

    odd_v = st.odd_set(v)
    chosen = None
    for y in g.adj[v]:  # ascending vertex id
        if len(contrib[y]) != 2:
            continue
        cy = colour[y]
        if any(cy in f for u, f in contrib.items() if u != y):
            continue
        if len(odd_v) == 1 and cy in odd_v:
            continue
        chosen = y
        break
    if chosen is None:
        raise InternalInvariantError(f"no stealable neighbour exists for vertex {v}")

    y = chosen
    cy = colour[y]
    st.unassign(y)
    st.assign(v, cy)

    forbidden = set()
    for u in g.adj[y]:
        cu = colour[u]
        if cu is not None:
            forbidden.add(cu)
        w = st.witness(u)
        if w is not None:
            forbidden.add(w)
    if len(forbidden) >= k:
        raise InternalInvariantError(f"no colour left when recolouring vertex {y}")
    st.assign(y, next(x for x in range(1, k + 1) if x not in forbidden))


def greedy_hodd(p: PairGH, h: int, order: Optional[Sequence[int]] = None) -> Colouring:
    """h-odd colouring of a pair within h*Delta(H) + Delta(G) + 1 colours.

    Every edge whose current odd-colour set has size at most h keeps those
    colours reserved, so its odd count never falls behind min(h, coloured
    members); edges with more odd colours than h can afford to lose one.
    """
    if h < 1:
        raise ValueError("h must be at least 1")
    order = _check_order(p.graph, order)
    g = p.graph
    k = h * p.hyper.max_degree() + g.max_degree() + 1
    state = OddAudit.from_pair(p, h=h, k=k)
    colour = state.colours

    for v in order:
        forbidden = set()
        for u in g.adj[v]:
            cu = colour[u]
            if cu is not None:
                forbidden.add(cu)
        for pos in state.incident[v]:
            odd = state.odd[pos]
            if len(odd) <= h:
                forbidden.update(odd)
        c = next((x for x in range(1, k + 1) if x not in forbidden), None)
        if c is None:
            raise InternalInvariantError(f"palette exhausted at vertex {v}")
        state.assign(v, c)

    result = Colouring(k, list(colour))
    ok, violations = is_h_odd_colouring(p, result, h)
    if not ok:
        raise InternalInvariantError(f"greedy produced an invalid h-odd colouring: {violations[:3]}")
    return result
