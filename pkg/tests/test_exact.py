import random

import pytest

from oddcolour.audit import is_h_odd_colouring, is_odd_pair_colouring, is_proper
from oddcolour.constructions import (
    complete,
    complete_bipartite,
    cycle,
    multipartite_gadget,
    random_graph,
    rook,
    steiner_incidence,
    subdivision_complete,
)
from oddcolour.core import Colouring, Graph, Hypergraph, PairGH, SolveOutcome
from oddcolour.exact import (
    Budget,
    as_pair,
    chromatic_number,
    decide,
    enumerate_decide,
    greedy_clique_bound,
    verify_lower_bound,
)


class TestDecide:
    def test_cycle5_odd_threshold(self):
        p = as_pair(cycle(5))
        assert decide(p, "odd", 4).status == SolveOutcome.UNSAT
        out = decide(p, "odd", 5)
        assert out.status == SolveOutcome.SAT
        assert is_odd_pair_colouring(p, out.certificate)[0]

    def test_cycle6_odd_threshold(self):
        p = as_pair(cycle(6))
        assert decide(p, "odd", 2).status == SolveOutcome.UNSAT
        assert decide(p, "odd", 3).status == SolveOutcome.SAT

    def test_complete_graphs_up_to_eight(self):
        for n in range(2, 9):
            p = as_pair(complete(n))
            assert decide(p, "odd", n).status == SolveOutcome.SAT
            assert decide(p, "odd", n - 1).status == SolveOutcome.UNSAT

    def test_subdivided_k5(self):
        p = as_pair(subdivision_complete(5))
        assert decide(p, "proper", 2).status == SolveOutcome.SAT
        assert decide(p, "odd", 4).status == SolveOutcome.UNSAT
        assert decide(p, "odd", 5).status == SolveOutcome.SAT

    def test_empty_edge_unsat_for_odd_and_pcf(self):
        p = PairGH(Graph(3, []), Hypergraph(3, [(), (0, 1)]))
        assert decide(p, "odd", 3).status == SolveOutcome.UNSAT
        assert decide(p, "pcf", 3).status == SolveOutcome.UNSAT
        assert decide(p, "hodd", 3, h=2).status == SolveOutcome.SAT

    def test_proper_ignores_hyperedges(self):
        p = PairGH(Graph(2, [(0, 1)]), Hypergraph(2, [()]))
        assert decide(p, "proper", 2).status == SolveOutcome.SAT

    def test_budget_gives_up(self):
        p = as_pair(rook(4))
        out = decide(p, "hodd", 10, Budget(nodes=20), h=6)
        assert out.status == SolveOutcome.GAVE_UP

    def test_invalid_args(self):
        p = as_pair(cycle(3))
        with pytest.raises(ValueError):
            decide(p, "odd", 0)
        with pytest.raises(ValueError):
            decide(p, "nope", 2)

    @pytest.mark.parametrize("seed", range(12))
    def test_monotone_in_k(self, seed):
        rng = random.Random(seed)
        g = random_graph(rng.randint(3, 9), 6, rng.uniform(0.3, 0.9), seed)
        p = as_pair(g)
        statuses = [decide(p, "odd", k).status for k in range(1, 7)]
        first_sat = statuses.index(SolveOutcome.SAT)
        assert all(s == SolveOutcome.SAT for s in statuses[first_sat:])

    @pytest.mark.parametrize("seed", range(8))
    def test_variant_implication_chain(self, seed):
        rng = random.Random(100 + seed)
        g = random_graph(rng.randint(3, 8), 5, rng.uniform(0.3, 0.9), seed)
        p = as_pair(g)
        for k in range(1, 6):
            pcf = decide(p, "pcf", k).status == SolveOutcome.SAT
            odd = decide(p, "odd", k).status == SolveOutcome.SAT
            proper = decide(p, "proper", k).status == SolveOutcome.SAT
            assert not pcf or odd
            assert not odd or proper


class TestChromaticNumber:
    def test_pcf_cycle5(self):
        assert chromatic_number(as_pair(cycle(5)), "pcf").k == 5

    def test_odd_subdivided_k5(self):
        res = chromatic_number(as_pair(subdivision_complete(5)), "odd")
        assert res.k == 5

    def test_gadget_optimum(self):
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            g = multipartite_gadget(2, 2, 4)
        res = chromatic_number(as_pair(g), "odd")
        assert res.k == 8
        assert res.outcome.certificate is not None

    def test_rook_hodd(self):
        assert chromatic_number(as_pair(rook(3)), "hodd", h=4).k == 9

    def test_certificate_revalidated(self):
        p = as_pair(complete_bipartite(3, 3))
        res = chromatic_number(p, "hodd", h=2)
        assert is_h_odd_colouring(p, res.outcome.certificate, 2)[0]

    def test_gave_up_propagates(self):
        p = as_pair(rook(4))
        res = chromatic_number(p, "hodd", Budget(nodes=10), h=6)
        assert res.k is None
        assert res.outcome.status == SolveOutcome.GAVE_UP


class TestEnumerationOracle:
    @pytest.mark.parametrize("seed", range(15))
    def test_pruned_search_matches_enumeration(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 7)
        g = random_graph(n, 6, rng.uniform(0.2, 0.9), 50 + seed)
        p = as_pair(g)
        for variant, h in (("odd", 1), ("pcf", 1), ("hodd", 2), ("proper", 1)):
            for k in (1, 2, 3):
                want = enumerate_decide(p, variant, k, h=h)
                got = decide(p, variant, k, h=h).status == SolveOutcome.SAT
                assert want == got, (variant, k, seed)

    def test_explicit_hypergraph_instances(self):
        g = Graph(5, [(0, 1), (2, 3)])
        h = Hypergraph(5, [(0, 1, 2), (1, 2, 3, 4)])
        p = PairGH(g, h)
        for variant, hh in (("odd", 1), ("hodd", 2), ("pcf", 1)):
            for k in (1, 2, 3, 4):
                want = enumerate_decide(p, variant, k, h=hh)
                got = decide(p, variant, k, h=hh).status == SolveOutcome.SAT
                assert want == got


class TestCliqueBound:
    def test_values(self):
        assert greedy_clique_bound(complete(6)) == 6
        assert greedy_clique_bound(complete_bipartite(4, 4)) == 2
        assert greedy_clique_bound(rook(3)) == 3
        assert greedy_clique_bound(Graph(3, [])) == 1


class TestVerifyLowerBound:
    def test_multipartite_gadget_rows(self):
        rows = verify_lower_bound("multipartite", (2, 2, 4))
        assert rows[0].k == 5 and rows[0].status == SolveOutcome.UNSAT
        assert rows[1].k == 8 and rows[1].status == SolveOutcome.SAT

    def test_steiner_rows(self):
        rows = verify_lower_bound("steiner", (7, 2))
        assert rows[0].k == 6 and rows[0].status == SolveOutcome.UNSAT

    def test_rook_rows(self):
        rows = verify_lower_bound("rook", (3, 4))
        assert rows[0].k == 9
        assert "ok" in rows[0].note

    def test_unknown_construction(self):
        with pytest.raises(ValueError):
            verify_lower_bound("mystery", ())


class TestFanoIncidence:
    def test_hodd2_threshold(self):
        p = as_pair(steiner_incidence(7, 3).graph)
        assert decide(p, "hodd", 6, h=2).status == SolveOutcome.UNSAT
        out = decide(p, "hodd", 7, h=2)
        assert out.status == SolveOutcome.SAT
        assert is_h_odd_colouring(p, out.certificate, 2)[0]
