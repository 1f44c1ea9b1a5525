import pytest
from hypothesis import given, strategies as st

from oddcolour.core import (
    Colouring,
    Graph,
    Hypergraph,
    PairGH,
    degeneracy,
    induced_subhypergraph,
    neighbourhood_hypergraph,
    vplus_split,
)
from oddcolour.constructions import complete, cycle, path, random_graph, star


def graphs(max_n=12):
    def build(data):
        n, edge_bits = data
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = [e for e, keep in zip(pairs, edge_bits) if keep]
        return Graph(n, edges)

    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2),
        )
    ).map(build)


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(2, [(0, 0)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 2)])

    def test_adjacency_symmetric_and_sorted(self):
        g = Graph(4, [(2, 0), (3, 1), (0, 1)])
        for u in range(4):
            assert list(g.adj[u]) == sorted(g.adj[u])
            for v in g.adj[u]:
                assert u in g.adj_set[v]

    def test_degree_matches_adjacency(self):
        g = random_graph(30, 8, 0.3, 1)
        assert all(g.degree[v] == len(g.adj[v]) for v in range(30))

    def test_subgraph_reindexes(self):
        g = cycle(5)
        sub, keep = g.subgraph([1, 2, 3])
        assert keep == [1, 2, 3]
        assert sub.edges == ((0, 1), (1, 2))


class TestHypergraph:
    def test_rejects_repeat_inside_edge(self):
        with pytest.raises(ValueError):
            Hypergraph(3, [(0, 0)])

    def test_allows_empty_and_repeated_edges(self):
        h = Hypergraph(3, [(), (0, 1), (0, 1)])
        assert h.m == 3
        assert h.min_edge_size() == 0

    def test_degrees(self):
        h = Hypergraph(4, [(0, 1, 2), (2, 3)])
        assert h.vertex_degree(2) == 2
        assert h.max_degree() == 2
        assert h.min_edge_size() == 2

    def test_no_edges_min_size_none(self):
        assert Hypergraph(3, []).min_edge_size() is None


class TestPairAndColouring:
    def test_pair_requires_same_universe(self):
        with pytest.raises(ValueError):
            PairGH(cycle(3), Hypergraph(4, []))

    def test_colouring_range_checked(self):
        with pytest.raises(ValueError):
            Colouring(2, [3])

    def test_total_and_copy(self):
        c = Colouring(3, [1, None, 2])
        assert not c.is_total()
        d = c.copy()
        d.assignment[1] = 3
        assert c.assignment[1] is None


class TestNeighbourhoodHypergraph:
    def test_cycle(self):
        h = neighbourhood_hypergraph(cycle(5))
        assert h.m == 5
        assert all(len(e) == 2 for e in h.edges)

    def test_path(self):
        h = neighbourhood_hypergraph(path(3))
        assert h.edges == ((1,), (0, 2), (1,))

    def test_isolated_vertex_excluded(self):
        g = Graph(3, [(1, 2)])
        h = neighbourhood_hypergraph(g)
        assert h.edges == ((2,), (1,))

    @given(graphs())
    def test_edge_sizes_match_degrees(self, g):
        h = neighbourhood_hypergraph(g)
        non_isolated = [v for v in range(g.n) if g.degree[v] > 0]
        assert [len(e) for e in h.edges] == [g.degree[v] for v in non_isolated]
        for v in range(g.n):
            assert h.vertex_degree(v) <= g.degree[v]


class TestInducedSubhypergraph:
    def test_intersection_keeps_empties(self):
        h = Hypergraph(5, [(1, 2, 3), (3, 4)])
        sub, keep = induced_subhypergraph(h, {1, 2})
        assert keep == [1, 2]
        assert sub.edges == ((0, 1), ())
        assert sub.min_edge_size() == 0

    def test_full_universe_round_trips(self):
        h = Hypergraph(4, [(0, 2), (1, 3), ()])
        sub, keep = induced_subhypergraph(h, range(4))
        assert keep == [0, 1, 2, 3]
        assert sub.edges == h.edges

    def test_empty_subset(self):
        h = Hypergraph(3, [(0, 1), (2,)])
        sub, _ = induced_subhypergraph(h, set())
        assert sub.edges == ((), ())

    def test_rejects_foreign_vertices(self):
        with pytest.raises(ValueError):
            induced_subhypergraph(Hypergraph(3, []), {5})


class TestDegeneracy:
    def test_trees_are_one_degenerate(self):
        assert degeneracy(path(8))[0] == 1
        assert degeneracy(star(6))[0] == 1

    def test_complete_graph(self):
        assert degeneracy(complete(5))[0] == 4

    def test_cycle(self):
        assert degeneracy(cycle(5))[0] == 2

    def test_empty(self):
        assert degeneracy(Graph(0, [])) == (0, [])

    @given(graphs())
    def test_reverse_peeling_greedy_stays_within_core_bound(self, g):
        core, order = degeneracy(g)
        assert sorted(order) == list(range(g.n))
        assert core <= g.max_degree()
        colour = {}
        for v in reversed(order):
            used = {colour[u] for u in g.adj[v] if u in colour}
            c = next(x for x in range(1, core + 2) if x not in used)
            colour[v] = c
        for u, v in g.edges:
            assert colour[u] != colour[v]


class TestVplusSplit:
    def test_cycle_all_low(self):
        vminus, vplus, vpp = vplus_split(cycle(5), 5)
        assert vminus == set(range(5)) and not vplus and not vpp

    def test_complete_all_high(self):
        vminus, vplus, vpp = vplus_split(complete(6), 5)
        assert not vminus and vplus == vpp == set(range(6))

    def test_star_centre_high(self):
        vminus, vplus, vpp = vplus_split(star(4), 6)
        assert vplus == {0} and vminus == {1, 2, 3, 4} and not vpp

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            vplus_split(cycle(3), 0)

    @given(graphs(), st.integers(1, 12))
    def test_partition_properties(self, g, k):
        vminus, vplus, vpp = vplus_split(g, k)
        assert vminus | vplus == set(range(g.n))
        assert not (vminus & vplus)
        assert vpp <= vplus
