"""Graph, hypergraph and colouring representations shared by every solver.

Conventions: vertices are dense 0-based integers, colours are 1-based
integers (0 is the "unassigned" sentinel in files). All structures are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class InternalInvariantError(AssertionError):
    """A guarantee the algorithms rely on failed; signals a bug, not bad input."""


class Graph:
    """Simple undirected graph stored as sorted adjacency lists."""

    __slots__ = ("n", "adj", "adj_set", "degree", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        edge_set: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range [0,{n})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in edge_set:
                raise ValueError(f"duplicate edge ({u},{v})")
            edge_set.add((u, v))
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)
        self.adj_set: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self.degree: tuple[int, ...] = tuple(len(s) for s in adj)
        self._edges: tuple[tuple[int, int], ...] = tuple(sorted(edge_set))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def max_degree(self) -> int:
        return max(self.degree, default=0)

    def min_degree(self) -> int:
        return min(self.degree, default=0)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph re-indexed to 0..len(vertices)-1.

        Returns the subgraph and the list mapping new ids to original ids.
        """
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [
            (pos[u], pos[v])
            for u, v in self._edges
            if u in pos and v in pos
        ]
        return Graph(len(keep), edges), keep

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))


class Hypergraph:
    """Vertex sets over a shared universe; empty edges and repeats are allowed."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        cleaned = []
        for e in edges:
            e = tuple(sorted(e))
            if any(not (0 <= v < n) for v in e):
                raise ValueError(f"edge {e} outside vertex range [0,{n})")
            if len(set(e)) != len(e):
                raise ValueError(f"repeated vertex inside edge {e}")
            cleaned.append(e)
        self.n = n
        self.edges: tuple[tuple[int, ...], ...] = tuple(cleaned)

    @property
    def m(self) -> int:
        return len(self.edges)

    def min_edge_size(self) -> Optional[int]:
        """Smallest edge size (0 if an empty edge is present); None without edges."""
        if not self.edges:
            return None
        return min(len(e) for e in self.edges)

    def vertex_degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0) if self.n else 0

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Hypergraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))


@dataclass(frozen=True)
class PairGH:
    """A graph and a hypergraph over the same vertex universe."""

    graph: Graph
    hyper: Hypergraph

    def __post_init__(self):
        if self.graph.n != self.hyper.n:
            raise ValueError(
                f"graph has {self.graph.n} vertices but hypergraph has {self.hyper.n}"
            )

    @property
    def n(self) -> int:
        return self.graph.n


class Colouring:
    """Total or partial assignment of 1-based colours from a palette of size k."""

    __slots__ = ("k", "assignment")

    def __init__(self, k: int, assignment: Sequence[Optional[int]]):
        if k < 0:
            raise ValueError("palette size must be nonnegative")
        for c in assignment:
            if c is not None and not (1 <= c <= k):
                raise ValueError(f"colour {c} outside palette [1,{k}]")
        self.k = k
        self.assignment: list[Optional[int]] = list(assignment)

    @classmethod
    def empty(cls, k: int, n: int) -> "Colouring":
        return cls(k, [None] * n)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def is_total(self) -> bool:
        return all(c is not None for c in self.assignment)

    def colours_used(self) -> set[int]:
        return {c for c in self.assignment if c is not None}

    def copy(self) -> "Colouring":
        return Colouring(self.k, list(self.assignment))

    def __getitem__(self, v: int) -> Optional[int]:
        return self.assignment[v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Colouring)
            and self.k == other.k
            and self.assignment == other.assignment
        )

    def __repr__(self) -> str:
        return f"Colouring(k={self.k}, assigned={sum(c is not None for c in self.assignment)}/{self.n})"


@dataclass
class SolveOutcome:
    """Result of a decision or search run.

    status is one of "sat", "unsat", "gave_up". A certificate is present
    exactly when status is "sat" and has already been revalidated.
    """

    status: str
    certificate: Optional[Colouring] = None
    nodes: int = 0
    seconds: float = 0.0
    detail: str = ""

    SAT = "sat"
    UNSAT = "unsat"
    GAVE_UP = "gave_up"

    @property
    def is_sat(self) -> bool:
        return self.status == self.SAT


def neighbourhood_hypergraph(g: Graph) -> Hypergraph:
    """Hypergraph whose edges are the open neighbourhoods of non-isolated vertices.

    Edges appear in vertex order; isolated vertices contribute no edge.
    """
    return Hypergraph(g.n, [g.adj[v] for v in range(g.n) if g.degree[v] > 0])


def induced_subhypergraph(h: Hypergraph, s: Iterable[int]) -> tuple[Hypergraph, list[int]]:
    """Restrict every edge to s and re-index the universe to 0..|s|-1.

    Empty intersections are kept as (legitimate) empty edges. Returns the
    induced hypergraph and the sorted list mapping new ids to original ids.
    """
    keep = sorted(set(s))
    if any(not (0 <= v < h.n) for v in keep):
        raise ValueError("subset contains vertices outside the universe")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [tuple(pos[v] for v in e if v in pos) for e in h.edges]
    return Hypergraph(len(keep), edges), keep


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Degeneracy via iterative minimum-degree peeling.

    Returns (degeneracy, peeling order). Colouring greedily along the
    reversed order needs at most degeneracy+1 colours.
    """
    n = g.n
    if n == 0:
        return 0, []
    deg = list(g.degree)
    # bucket queue over current degrees
    buckets: list[set[int]] = [set() for _ in range(max(deg, default=0) + 1)]
    for v, d in enumerate(deg):
        buckets[d].add(v)
    removed = [False] * n
    order: list[int] = []
    core = 0
    d = 0
    for _ in range(n):
        # a removal lowers neighbour degrees by one, so the minimum can
        # drop by at most one between iterations
        if d > 0:
            d -= 1
        while not buckets[d]:
            d += 1
        v = min(buckets[d])
        buckets[d].remove(v)
        removed[v] = True
        core = max(core, d)
        order.append(v)
        for u in g.adj[v]:
            if not removed[u]:
                buckets[deg[u]].remove(u)
                deg[u] -= 1
                buckets[deg[u]].add(u)
    return core, order


def vplus_split(g: Graph, k: int) -> tuple[set[int], set[int], set[int]]:
    """Split vertices by degree against k/2.

    Returns (vminus, vplus, vplusplus): vminus holds degrees below k/2,
    vplus the rest, and vplusplus the vplus vertices whose whole
    neighbourhood lies inside vplus.
    """
    if k < 1:
        raise ValueError("palette size must be at least 1")
    half = k / 2.0
    vminus = {v for v in range(g.n) if g.degree[v] < half}
    vplus = set(range(g.n)) - vminus
    vplusplus = {v for v in vplus if all(u in vplus for u in g.adj[v])}
    return vminus, vplus, vplusplus
