"""Shared test fixtures: definition-level oracles and hypothesis strategies.

The oracles here re-implement the set definitions directly from first
principles (double loops over the arc list, subset enumeration through
itertools) so the package's bitmask paths are checked against an
independent route.
"""

from __future__ import annotations

from itertools import combinations

import hypothesis.strategies as st

from idomlib import Digraph, UndirectedGraph, induced_subgraph, random_digraph, sccs


def independent_double_loop(graph: Digraph, members) -> bool:
    s = set(members)
    for u, v in graph.arcs:
        if u in s and v in s:
            return False
    return True


def dominating_double_loop(graph: Digraph, members) -> bool:
    s = set(members)
    for v in range(graph.n):
        if v in s:
            continue
        if not any((u, v) in graph.arcs for u in s):
            return False
    return True


def all_ids_by_enumeration(graph: Digraph) -> set[frozenset[int]]:
    """Every independent dominating set, via itertools subset enumeration."""
    found = set()
    vertices = range(graph.n)
    for size in range(graph.n + 1):
        for combo in combinations(vertices, size):
            if independent_double_loop(graph, combo) and dominating_double_loop(
                graph, combo
            ):
                found.add(frozenset(combo))
    return found


def min_undirected_ids_size(graph: UndirectedGraph) -> int:
    """Minimum undirected independent dominating set size (always exists)."""
    adj = [set() for _ in range(graph.n)]
    for u, v in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    best = graph.n
    for size in range(graph.n + 1):
        if size >= best:
            break
        for combo in combinations(range(graph.n), size):
            s = set(combo)
            if any(w in s for v in combo for w in adj[v]):
                continue
            if all(v in s or adj[v] & s for v in range(graph.n)):
                best = size
                break
    return best


def disjoint_union(*graphs: Digraph) -> Digraph:
    arcs = []
    offset = 0
    for g in graphs:
        arcs.extend((u + offset, v + offset) for u, v in g.arcs)
        offset += g.n
    return Digraph(offset, arcs)


def strongly_connected_samples(count: int, max_n: int = 12, seed_base: int = 700):
    """Strongly connected digraphs harvested from random instances: the
    largest SCC with at least 2 vertices, when there is one."""
    samples = []
    i = 0
    while len(samples) < count and i < count * 10:
        g = random_digraph(2 + (i % (max_n - 1)), 0.15 + 0.08 * (i % 5), seed_base + i)
        i += 1
        comps = [c for c in sccs(g).components if len(c) >= 2]
        if not comps:
            continue
        biggest = max(comps, key=len)
        sub, _ = induced_subgraph(g, biggest)
        samples.append(sub)
    assert len(samples) == count
    return samples


@st.composite
def digraphs(draw, max_n: int = 7):
    n = draw(st.integers(0, max_n))
    if n < 2:
        return Digraph(n)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Digraph(n, arcs)


@st.composite
def digraphs_with_subset(draw, max_n: int = 7):
    graph = draw(digraphs(max_n))
    if graph.n == 0:
        return graph, frozenset()
    members = draw(st.lists(st.integers(0, graph.n - 1), unique=True))
    return graph, frozenset(members)
