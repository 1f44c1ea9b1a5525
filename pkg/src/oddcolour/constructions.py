"""Generators for the graph families, extremal gadgets and random instances.

Vertex numbering conventions are fixed so colouring files stay stable:
gadgets put core part vertices first (part by part) and attachment
vertices after; incidence graphs put points before blocks; rook graphs
number cell (i, j) as i*n + j.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .core import Graph, Hypergraph, InternalInvariantError

MAX_SUBSETS = 10 ** 6


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides nonempty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def subdivision_complete(t: int) -> Graph:
    """Complete graph on t vertices with every edge subdivided once.

    Branch vertices come first (degree t-1), then one degree-2 vertex per
    original edge; t + C(t,2) vertices in total. Always bipartite.
    """
    if t < 2:
        raise ValueError("subdivision needs t >= 2")
    edges = []
    mid = t
    for u, v in combinations(range(t), 2):
        edges.append((u, mid))
        edges.append((v, mid))
        mid += 1
    return Graph(mid, edges)


def multipartite_gadget(k0: int, n0: int, part_size: int) -> Graph:
    """Complete k0-partite core with parts of the given size, plus one
    attachment vertex per n0-subset of each part, adjacent to that subset.

    Attachment vertices force many colours on every part without raising
    the chromatic number above k0.
    """
    if not (1 <= n0 <= part_size):
        raise ValueError("need 1 <= n0 <= part_size")
    if k0 < 1:
        raise ValueError("k0 must be at least 1")
    if n0 % 2 == 1:
        warnings.warn("odd n0: the parity argument behind the lower bound wants n0 even")
    from math import comb

    if comb(part_size, n0) > MAX_SUBSETS:
        raise ValueError(f"C({part_size},{n0}) exceeds the {MAX_SUBSETS} subset guard")
    parts = [list(range(i * part_size, (i + 1) * part_size)) for i in range(k0)]
    edges = []
    for i in range(k0):
        for j in range(i + 1, k0):
            edges.extend((u, v) for u in parts[i] for v in parts[j])
    nxt = k0 * part_size
    for i in range(k0):
        for subset in combinations(parts[i], n0):
            edges.extend((v, nxt) for v in subset)
            nxt += 1
    return Graph(nxt, edges)


def hodd_gadget(k0: int, n0: int, h: int) -> Graph:
    """Complete k0-partite core with parts of size h*n0 split into n0 blocks
    of size h; per part, one attachment vertex per unordered pair of blocks,
    adjacent to both blocks (degree 2h)."""
    if k0 < 1 or n0 < 1 or h < 1:
        raise ValueError("k0, n0 and h must be at least 1")
    size = h * n0
    parts = [list(range(i * size, (i + 1) * size)) for i in range(k0)]
    edges = []
    for i in range(k0):
        for j in range(i + 1, k0):
            edges.extend((u, v) for u in parts[i] for v in parts[j])
    nxt = k0 * size
    for i in range(k0):
        blocks = [parts[i][b * h:(b + 1) * h] for b in range(n0)]
        for b1, b2 in combinations(range(n0), 2):
            for v in blocks[b1] + blocks[b2]:
                edges.append((v, nxt))
            nxt += 1
    return Graph(nxt, edges)


def _triples_pairs_once(q: int, blocks: list[tuple[int, ...]]) -> None:
    """Check that every point pair lies in exactly one block."""
    seen: dict[tuple[int, int], int] = {}
    for b in blocks:
        for u, v in combinations(sorted(b), 2):
            seen[(u, v)] = seen.get((u, v), 0) + 1
    for u, v in combinations(range(q), 2):
        if seen.get((u, v), 0) != 1:
            raise InternalInvariantError(
                f"pair ({u},{v}) covered {seen.get((u, v), 0)} times"
            )


def _bose_triples(q: int) -> list[tuple[int, ...]]:
    # q = 3n with n odd: points are Z_n x {0,1,2}
    n = q // 3
    half = (n + 1) // 2  # multiplication by half halves even+odd sums mod odd n

    def pt(x: int, j: int) -> int:
        return j * n + x

    blocks = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(n)]
    for x in range(n):
        for y in range(x + 1, n):
            z = ((x + y) * half) % n
            for j in range(3):
                blocks.append((pt(x, j), pt(y, j), pt(z, (j + 1) % 3)))
    return blocks


def _skolem_triples(q: int) -> list[tuple[int, ...]]:
    # q = 6s+1: points are Z_{2s} x {1,2,3} plus one extra point
    n = (q - 1) // 6
    two_n = 2 * n
    infinity = q - 1

    def f(z: int) -> int:
        # half-idempotent relabelling of Z_{2n}
        return z // 2 if z % 2 == 0 else n + (z - 1) // 2

    def op(x: int, y: int) -> int:
        return f((x + y) % two_n)

    def pt(x: int, i: int) -> int:
        return (i - 1) * two_n + x

    blocks = [(pt(x, 1), pt(x, 2), pt(x, 3)) for x in range(n)]
    for x in range(n):
        blocks.append((infinity, pt(n + x, 1), pt(x, 2)))
        blocks.append((infinity, pt(n + x, 2), pt(x, 3)))
        blocks.append((infinity, pt(n + x, 3), pt(x, 1)))
    for x in range(two_n):
        for y in range(x + 1, two_n):
            z = op(x, y)
            for i in (1, 2, 3):
                nxt = i + 1 if i < 3 else 1
                blocks.append((pt(x, i), pt(y, i), pt(z, nxt)))
    return blocks


def steiner_blocks(q: int, block_size: int) -> list[tuple[int, ...]]:
    """Block family on q points covering every pair exactly once.

    block_size 2 works for any q >= 2 (all pairs); block_size 3 needs
    q = 1 or 3 (mod 6), built by direct algebraic constructions. Pair
    coverage is verified exhaustively before returning.
    """
    if block_size == 2:
        if q < 2:
            raise ValueError("need q >= 2")
        blocks: list[tuple[int, ...]] = list(combinations(range(q), 2))
    elif block_size == 3:
        if q % 6 == 3:
            blocks = _bose_triples(q)
        elif q % 6 == 1 and q >= 7:
            blocks = _skolem_triples(q)
        else:
            raise ValueError("triple systems need q = 1 or 3 (mod 6), q >= 7 or q = 3")
    else:
        raise ValueError("only block sizes 2 and 3 are constructible here")
    _triples_pairs_once(q, blocks)
    return blocks


class SteinerIncidence(NamedTuple):
    graph: Graph
    design: Hypergraph  # the blocks themselves, over the q points


def steiner_incidence(q: int, block_size: int) -> SteinerIncidence:
    """Bipartite incidence graph of a pair-covering design: q points first,
    then one vertex per block; point degree (q-1)/(block_size-1)."""
    blocks = steiner_blocks(q, block_size)
    edges = []
    for b_idx, b in enumerate(blocks):
        for p in b:
            edges.append((p, q + b_idx))
    return SteinerIncidence(Graph(q + len(blocks), edges), Hypergraph(q, blocks))


def rook(n: int) -> Graph:
    """Cells of an n x n grid, adjacent when they share a row or a column."""
    if n < 2:
        raise ValueError("rook graph needs n >= 2")
    edges = []
    for i in range(n):
        for j1 in range(n):
            for j2 in range(j1 + 1, n):
                edges.append((i * n + j1, i * n + j2))  # row
                edges.append((j1 * n + i, j2 * n + i))  # column
    return Graph(n * n, edges)


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Random d-regular simple graph by stub pairing.

    Clashing stubs (loops, repeats) are requeued and reshuffled rather than
    restarting from scratch, so dense degrees stay feasible; a full restart
    only happens when the leftover stubs admit no simple edge at all.
    """
    if (n * d) % 2 != 0:
        raise ValueError("n*d must be even")
    if not 0 <= d < n:
        raise ValueError("need 0 <= d < n")
    rng = random.Random(seed)

    def suitable(edges, potential):
        if not potential:
            return True
        nodes = sorted(potential)
        for i, s1 in enumerate(nodes):
            for s2 in nodes[i + 1:]:
                if (s1, s2) not in edges:
                    return True
        return False

    def try_creation():
        edges: set[tuple[int, int]] = set()
        stubs = list(range(n)) * d
        while stubs:
            potential: dict[int, int] = {}
            rng.shuffle(stubs)
            it = iter(stubs)
            for s1, s2 in zip(it, it):
                if s1 > s2:
                    s1, s2 = s2, s1
                if s1 != s2 and (s1, s2) not in edges:
                    edges.add((s1, s2))
                else:
                    potential[s1] = potential.get(s1, 0) + 1
                    potential[s2] = potential.get(s2, 0) + 1
            if not suitable(edges, potential):
                return None
            stubs = [v for v, c in potential.items() for _ in range(c)]
        return edges

    edges = try_creation()
    while edges is None:
        edges = try_creation()
    return Graph(n, sorted(edges))


def random_graph(n: int, max_degree: int, edge_probability: float, seed: int) -> Graph:
    """Random graph with a hard degree cap: candidate pairs are visited in a
    seeded shuffled order and kept with the given probability while both
    endpoints stay below the cap."""
    if n < 0 or max_degree < 0:
        raise ValueError("n and max_degree must be nonnegative")
    if not (0.0 <= edge_probability <= 1.0):
        raise ValueError("edge_probability must lie in [0,1]")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < max_degree and deg[v] < max_degree and rng.random() < edge_probability:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, edges)


@dataclass(frozen=True)
class ConstructionSpec:
    """Family tag plus integer parameters, parseable from 'family:p1:p2:...'."""

    family: str
    params: tuple[int, ...]

    _FAMILIES = {
        "cycle": (cycle, 1),
        "complete": (complete, 1),
        "bipartite": (complete_bipartite, 2),
        "path": (path, 1),
        "star": (star, 1),
        "subdiv": (subdivision_complete, 1),
        "gadget": (multipartite_gadget, 3),
        "hodd-gadget": (hodd_gadget, 3),
        "rook": (rook, 1),
        "regular": (random_regular, 3),
    }

    @classmethod
    def parse(cls, text: str) -> "ConstructionSpec":
        parts = text.split(":")
        family = parts[0]
        if family == "steiner":
            if len(parts) != 3:
                raise ValueError("steiner spec is steiner:<q>:<block_size>")
            return cls(family, tuple(int(p) for p in parts[1:]))
        if family not in cls._FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        _, arity = cls._FAMILIES[family]
        if len(parts) - 1 != arity:
            raise ValueError(f"{family} expects {arity} parameters")
        return cls(family, tuple(int(p) for p in parts[1:]))

    def build(self) -> Graph:
        if self.family == "steiner":
            return steiner_incidence(*self.params).graph
        fn, _ = self._FAMILIES[self.family]
        return fn(*self.params)

    def __str__(self) -> str:
        return ":".join([self.family] + [str(p) for p in self.params])
