#!/usr/bin/env python3
"""The construction zoo, with the structural facts each family is used for.

Every generator re-verifies its own defining property on construction
(the pair-coverage check for block designs is exhaustive), so this demo
mostly prints shapes.
"""

import warnings

from oddcolour.constructions import (
    hodd_gadget,
    multipartite_gadget,
    random_regular,
    rook,
    steiner_incidence,
    subdivision_complete,
)
from oddcolour.core import neighbourhood_hypergraph

print("  subdivided complete graphs: bipartite, two degree classes")
for t in (3, 5, 7):
    g = subdivision_complete(t)
    degs = sorted(set(g.degree))
    print(f"    t={t}: n={g.n:>3} degrees={degs}")

print()
print("  multipartite gadgets: one attachment vertex per n0-subset of a part")
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    for k0, n0, ps in ((2, 2, 4), (3, 2, 4), (2, 3, 6)):
        g = multipartite_gadget(k0, n0, ps)
        print(f"    k0={k0} n0={n0} part={ps}: n={g.n:>4} maxdeg={g.max_degree()}")

print()
print("  h-odd gadgets: parts split into blocks, attachments span block pairs")
for k0, n0, h in ((2, 2, 2), (4, 4, 2), (2, 3, 3)):
    g = hodd_gadget(k0, n0, h)
    core = k0 * n0 * h
    att_degrees = {g.degree[v] for v in range(core, g.n)}
    print(f"    k0={k0} n0={n0} h={h}: n={g.n:>3} attachment degree {att_degrees} = 2h")

print()
print("  pair-covering designs and their incidence graphs")
for q, bs in ((7, 3), (9, 3), (13, 3), (15, 3), (5, 2)):
    inc = steiner_incidence(q, bs)
    blocks = inc.design.m
    print(f"    q={q:>2} block size {bs}: {blocks:>3} blocks, incidence graph "
          f"n={inc.graph.n:>3}, point degree {(q - 1) // (bs - 1)}")

print()
print("  rook graphs: two-clique neighbourhoods, 2(n-1)-regular")
for n in (3, 4, 6):
    g = rook(n)
    h = neighbourhood_hypergraph(g)
    print(f"    n={n}: {g.n:>2} vertices, degree {g.max_degree()}, "
          f"neighbourhood edges of size {len(h.edges[0])}")

print()
print("  random regular graphs by stub pairing with requeue")
for n, d in ((100, 3), (100, 16), (500, 64)):
    g = random_regular(n, d, seed=1)
    print(f"    n={n:>4} d={d:>3}: edges {g.m:>6}, regular: {set(g.degree) == {d}}")
