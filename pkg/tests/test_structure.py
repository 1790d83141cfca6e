import random

import pytest

from idomlib import (
    Digraph,
    DhkSpec,
    condensation,
    cycle_gcd_oracle,
    gen_cycle,
    gen_dhk,
    gen_path,
    gen_paw,
    is_strongly_connected,
    layer_decomposition,
    period,
    random_dag,
    random_digraph,
    scc_period,
    sccs,
)

from helpers import disjoint_union, strongly_connected_samples


def reachable_from(graph, start):
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in graph.out_adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


class TestSccs:
    def test_cycle_is_one_component(self):
        assert sccs(gen_cycle(3)).components == ((0, 1, 2),)

    def test_path_is_singletons(self):
        comps = sccs(gen_path(3)).components
        assert sorted(comps) == [(0,), (1,), (2,)]

    def test_paw_components(self):
        comps = set(sccs(gen_paw()).components)
        assert comps == {(0,), (1, 2, 3)}

    def test_reverse_topological_order(self):
        # cross arcs must go from a later-listed component to an earlier one
        for seed in range(25):
            g = random_digraph(8, 0.2, seed=seed)
            dec = sccs(g)
            for u, v in g.arcs:
                if dec.component_of[u] != dec.component_of[v]:
                    assert dec.component_of[u] > dec.component_of[v]

    def test_partition_and_mutual_reachability(self):
        for seed in range(25):
            g = random_digraph(8, 0.25, seed=100 + seed)
            dec = sccs(g)
            listed = sorted(v for comp in dec.components for v in comp)
            assert listed == list(range(g.n))
            reach = [reachable_from(g, v) for v in range(g.n)]
            for u in range(g.n):
                for v in range(g.n):
                    same = dec.component_of[u] == dec.component_of[v]
                    assert same == (v in reach[u] and u in reach[v])


class TestCondensation:
    def test_paw(self):
        cond = condensation(gen_paw())
        assert cond.dag.n == 2
        pendant = cond.scc.component_of[0]
        triangle = cond.scc.component_of[1]
        assert cond.dag.arcs == frozenset({(pendant, triangle)})
        assert cond.source_components() == [pendant]

    def test_strongly_connected_collapses(self):
        cond = condensation(gen_cycle(5))
        assert cond.dag.n == 1 and cond.dag.m == 0

    def test_disjoint_cycles(self):
        cond = condensation(disjoint_union(gen_cycle(3), gen_cycle(4)))
        assert cond.dag.n == 2 and cond.dag.m == 0
        assert len(cond.source_components()) == 2

    def test_condensation_is_acyclic(self):
        for seed in range(20):
            g = random_digraph(10, 0.2, seed=300 + seed)
            assert cycle_gcd_oracle(condensation(g).dag) == 0


class TestSccPeriod:
    def test_plain_cycles(self):
        assert scc_period(gen_cycle(4)) == 4
        assert scc_period(gen_cycle(2)) == 2

    def test_triangle_with_chord(self):
        g = Digraph(3, [(0, 1), (1, 2), (2, 0), (0, 2)])
        assert scc_period(g) == cycle_gcd_oracle(g) == 1

    def test_rejects_non_strongly_connected(self):
        with pytest.raises(ValueError, match="not strongly connected"):
            scc_period(gen_path(3))

    def test_rejects_single_vertex(self):
        with pytest.raises(ValueError, match="no directed cycle"):
            scc_period(Digraph(1))

    def test_matches_oracle_on_strong_samples(self):
        for g in strongly_connected_samples(40):
            assert scc_period(g) == cycle_gcd_oracle(g)

    def test_invariant_under_relabeling(self):
        rng = random.Random(42)
        for g in strongly_connected_samples(15, seed_base=900):
            perm = list(range(g.n))
            rng.shuffle(perm)
            relabeled = Digraph(g.n, [(perm[u], perm[v]) for u, v in g.arcs])
            assert scc_period(relabeled) == scc_period(g)


class TestPeriod:
    def test_acyclic_is_zero(self):
        assert period(gen_path(3)) == 0

    def test_gcd_of_disjoint_cycles(self):
        assert period(disjoint_union(gen_cycle(4), gen_cycle(6))) == 2
        assert period(disjoint_union(gen_cycle(3), gen_cycle(2))) == 1

    def test_matches_oracle_on_random_graphs(self):
        for seed in range(60):
            g = random_digraph(2 + seed % 11, 0.1 + 0.07 * (seed % 5), seed=500 + seed)
            assert period(g) == cycle_gcd_oracle(g)
        for seed in range(20):
            assert period(random_dag(10, 0.3, seed=seed)) == 0


class TestLayerDecomposition:
    def test_cycle_layers_are_singletons(self):
        layers = layer_decomposition(gen_cycle(6))
        assert layers.h == 6
        assert layers.layers == tuple(frozenset({i}) for i in range(6))

    def test_antiparallel_pair(self):
        layers = layer_decomposition(gen_cycle(2))
        assert layers.h == 2
        assert layers.layers == (frozenset({0}), frozenset({1}))

    def test_dhk_example_sizes(self):
        g = gen_dhk(DhkSpec(5, 3)).graph
        layers = layer_decomposition(g)
        assert [len(layer) for layer in layers.layers] == [3, 6, 6, 3, 6]

    def test_rejects_non_strongly_connected(self):
        with pytest.raises(ValueError, match="not strongly connected"):
            layer_decomposition(gen_path(4))

    def test_invariants_on_strong_samples(self):
        for g in strongly_connected_samples(30, seed_base=1500):
            layers = layer_decomposition(g)
            assert layers.layer_of[0] == 0
            listed = sorted(v for layer in layers.layers for v in layer)
            assert listed == list(range(g.n))
            assert all(layers.layers)
            for u, v in g.arcs:
                assert layers.layer_of[v] == (layers.layer_of[u] + 1) % layers.h
            if layers.h > 1:
                for layer in layers.layers:
                    assert not any(u in layer and v in layer for u, v in g.arcs)


class TestCycleGcdOracle:
    def test_cycle(self):
        assert cycle_gcd_oracle(gen_cycle(5)) == 5

    def test_dag(self):
        assert cycle_gcd_oracle(random_dag(9, 0.4, seed=3)) == 0

    def test_triangle_plus_antiparallel_arc(self):
        g = Digraph(3, [(0, 1), (1, 2), (2, 0), (1, 0)])
        assert cycle_gcd_oracle(g) == 1

    def test_size_guard(self):
        with pytest.raises(ValueError, match="exceeds"):
            cycle_gcd_oracle(Digraph(13))


def test_strong_connectivity_checks():
    assert is_strongly_connected(gen_cycle(4))
    assert not is_strongly_connected(gen_path(4))
    assert is_strongly_connected(Digraph(1))
    assert not is_strongly_connected(Digraph(0))
