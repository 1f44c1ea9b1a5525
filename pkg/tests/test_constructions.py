from itertools import combinations
from math import comb

import pytest

from oddcolour.constructions import (
    ConstructionSpec,
    complete,
    complete_bipartite,
    cycle,
    hodd_gadget,
    multipartite_gadget,
    path,
    random_graph,
    random_regular,
    rook,
    star,
    steiner_blocks,
    steiner_incidence,
    subdivision_complete,
)
from oddcolour.core import SolveOutcome
from oddcolour.exact import as_pair, decide, greedy_clique_bound


class TestBasicFamilies:
    def test_cycle(self):
        g = cycle(5)
        assert g.n == 5 and set(g.degree) == {2}
        with pytest.raises(ValueError):
            cycle(2)

    def test_complete(self):
        assert complete(5).max_degree() == 4

    def test_complete_bipartite(self):
        assert complete_bipartite(3, 3).m == 9

    def test_path_and_star(self):
        assert path(4).m == 3
        assert star(5).degree[0] == 5


class TestSubdivision:
    def test_counts_for_t5(self):
        g = subdivision_complete(5)
        assert g.n == 15
        assert sorted(g.degree).count(4) == 5
        assert sorted(g.degree).count(2) == 10

    def test_t3_is_a_six_cycle(self):
        g = subdivision_complete(3)
        assert g.n == 6 and set(g.degree) == {2}

    def test_always_bipartite(self):
        for t in (2, 3, 4, 5, 6):
            g = subdivision_complete(t)
            k = 2 if g.m else 1
            assert decide(as_pair(g), "proper", k).status == SolveOutcome.SAT


class TestMultipartiteGadget:
    def test_vertex_count(self):
        g = multipartite_gadget(2, 2, 4)
        assert g.n == 2 * 4 + 2 * comb(4, 2) == 20

    def test_degenerate_single_part(self):
        g = multipartite_gadget(1, 2, 4)
        assert g.n == 10
        # no core edges: every edge touches an attachment vertex
        assert all(u >= 4 or v >= 4 for u, v in g.edges)

    def test_core_is_bipartite_with_attachments(self):
        g = multipartite_gadget(2, 2, 4)
        assert decide(as_pair(g), "proper", 2).status == SolveOutcome.SAT
        assert decide(as_pair(g), "proper", 1).status == SolveOutcome.UNSAT

    def test_chromatic_number_is_k0(self):
        g = multipartite_gadget(3, 2, 2)
        assert decide(as_pair(g), "proper", 3).status == SolveOutcome.SAT
        assert decide(as_pair(g), "proper", 2).status == SolveOutcome.UNSAT

    def test_odd_n0_warns(self):
        with pytest.warns(UserWarning, match="odd n0"):
            multipartite_gadget(2, 1, 2)

    def test_subset_explosion_guard(self):
        with pytest.raises(ValueError, match="guard"):
            multipartite_gadget(1, 16, 40)

    def test_parameter_domains(self):
        with pytest.raises(ValueError):
            multipartite_gadget(2, 5, 4)


class TestHOddGadget:
    def test_small_instance_shape(self):
        g = hodd_gadget(2, 2, 2)
        assert g.n == 10
        assert g.degree[8] == g.degree[9] == 4  # attachment degree 2h

    def test_attachment_degree_is_2h(self):
        for h in (1, 2, 3):
            g = hodd_gadget(2, 3, h)
            core = 2 * 3 * h
            assert all(g.degree[v] == 2 * h for v in range(core, g.n))

    def test_figure_shape_four_parts(self):
        g = hodd_gadget(4, 4, 2)
        core = 4 * 8
        assert g.n == core + 4 * comb(4, 2)

    def test_chromatic_number_is_k0(self):
        g = hodd_gadget(2, 2, 2)
        assert decide(as_pair(g), "proper", 2).status == SolveOutcome.SAT
        assert decide(as_pair(g), "proper", 1).status == SolveOutcome.UNSAT


class TestSteiner:
    def test_fano(self):
        inc = steiner_incidence(7, 3)
        assert inc.graph.n == 14
        assert set(inc.graph.degree) == {3}
        assert inc.design.m == 7

    def test_q9(self):
        inc = steiner_incidence(9, 3)
        assert inc.graph.n == 9 + 12
        assert inc.graph.degree[0] == 4  # (9-1)/2

    def test_pairs_as_blocks(self):
        inc = steiner_incidence(5, 2)
        assert inc.graph.n == 5 + 10
        assert inc.graph.degree[0] == 4

    def test_block_family_sizes(self):
        for q in (7, 13, 19, 25, 31, 3, 9, 15, 21, 27):
            blocks = steiner_blocks(q, 3)
            assert len(blocks) == q * (q - 1) // 6

    def test_every_pair_covered_once(self):
        for q in (13, 15):
            blocks = steiner_blocks(q, 3)
            seen = set()
            for b in blocks:
                for pair in combinations(sorted(b), 2):
                    assert pair not in seen
                    seen.add(pair)
            assert len(seen) == q * (q - 1) // 2

    def test_invalid_q_rejected(self):
        for q in (5, 6, 8, 11):
            with pytest.raises(ValueError):
                steiner_blocks(q, 3)

    def test_unsupported_block_size(self):
        with pytest.raises(ValueError):
            steiner_blocks(7, 4)


class TestRook:
    def test_shape(self):
        g = rook(3)
        assert g.n == 9 and set(g.degree) == {4}

    def test_regularity(self):
        for n in (2, 3, 4, 5):
            assert set(rook(n).degree) == {2 * (n - 1)}

    def test_clique_number_is_n(self):
        for n in (3, 4):
            assert greedy_clique_bound(rook(n)) == n

    def test_neighbourhood_covered_by_row_and_column_cliques(self):
        n = 4
        g = rook(n)
        for v in range(g.n):
            i, j = divmod(v, n)
            row = {i * n + jj for jj in range(n)} - {v}
            col = {ii * n + j for ii in range(n)} - {v}
            assert set(g.adj[v]) == row | col
            for clique in (row, col):
                for a in clique:
                    for b in clique:
                        if a != b:
                            assert b in g.adj_set[a]


class TestRandomRegular:
    def test_shape_and_determinism(self):
        g = random_regular(10, 3, 7)
        assert g.m == 15 and set(g.degree) == {3}
        assert random_regular(10, 3, 7) == g

    def test_parity_rejected(self):
        with pytest.raises(ValueError):
            random_regular(5, 3, 0)

    def test_degree_range_rejected(self):
        with pytest.raises(ValueError):
            random_regular(4, 4, 0)

    def test_dense_degrees_feasible(self):
        g = random_regular(100, 64, 1)
        assert set(g.degree) == {64}


class TestRandomGraph:
    def test_degree_cap_respected(self):
        g = random_graph(50, 5, 0.9, 3)
        assert g.max_degree() <= 5

    def test_deterministic(self):
        assert random_graph(20, 6, 0.5, 9) == random_graph(20, 6, 0.5, 9)

    def test_zero_probability(self):
        assert random_graph(10, 5, 0.0, 1).m == 0


class TestConstructionSpec:
    def test_parse_build_roundtrip(self):
        spec = ConstructionSpec.parse("cycle:7")
        assert spec.build().n == 7
        assert str(spec) == "cycle:7"

    def test_steiner_spec(self):
        spec = ConstructionSpec.parse("steiner:7:3")
        assert spec.build().n == 14

    def test_regular_spec(self):
        g = ConstructionSpec.parse("regular:10:3:5").build()
        assert set(g.degree) == {3}

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            ConstructionSpec.parse("moebius:5")

    def test_wrong_arity(self):
        with pytest.raises(ValueError, match="expects"):
            ConstructionSpec.parse("cycle:5:6")
