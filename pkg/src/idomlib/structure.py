"""Strongly connected components, condensation, period, and layer structure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd

from .digraph import Digraph, induced_subgraph

__all__ = [
    "Condensation",
    "LayerDecomposition",
    "SccDecomposition",
    "condensation",
    "cycle_gcd_oracle",
    "is_strongly_connected",
    "layer_decomposition",
    "period",
    "scc_period",
    "sccs",
]


@dataclass(frozen=True)
class SccDecomposition:
    """SCC partition of a digraph.

    ``components`` is listed in reverse topological order: every arc between
    two distinct components goes from a later-listed component to an
    earlier-listed one. Vertices within a component are sorted ascending.
    """

    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


def sccs(graph: Digraph) -> SccDecomposition:
    """Strongly connected components via iterative Tarjan.

    Vertices and neighbors are visited in ascending order, so the output is
    deterministic; components come out in reverse topological order.
    """
    n = graph.n
    index = [-1] * n
    low = [0] * n
    onstack = [False] * n
    stack: list[int] = []
    components: list[tuple[int, ...]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work: list[tuple[int, int]] = [(root, 0)]
        while work:
            v, ptr = work[-1]
            if ptr == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                onstack[v] = True
            descended = False
            neighbors = graph.out_adj[v]
            while ptr < len(neighbors):
                w = neighbors[ptr]
                ptr += 1
                if index[w] == -1:
                    work[-1] = (v, ptr)
                    work.append((w, 0))
                    descended = True
                    break
                if onstack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(tuple(sorted(comp)))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    component_of = [0] * n
    for ci, comp in enumerate(components):
        for v in comp:
            component_of[v] = ci
    return SccDecomposition(tuple(component_of), tuple(components))


def is_strongly_connected(graph: Digraph) -> bool:
    return graph.n > 0 and len(sccs(graph).components) == 1


@dataclass(frozen=True)
class Condensation:
    """Acyclic quotient over component ids, plus the underlying SCC partition."""

    dag: Digraph
    scc: SccDecomposition

    def source_components(self) -> list[int]:
        """Component ids with no incoming arc from another component."""
        return [c for c in range(self.dag.n) if not self.dag.in_adj[c]]


def condensation(graph: Digraph) -> Condensation:
    s = sccs(graph)
    arcs = {
        (s.component_of[u], s.component_of[v])
        for (u, v) in graph.arcs
        if s.component_of[u] != s.component_of[v]
    }
    return Condensation(Digraph(len(s.components), arcs), s)


def _bfs_levels(graph: Digraph, root: int) -> list[int]:
    level = [-1] * graph.n
    level[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in graph.out_adj[u]:
            if level[v] == -1:
                level[v] = level[u] + 1
                queue.append(v)
    return level


def scc_period(graph: Digraph) -> int:
    """gcd of all directed cycle lengths of a strongly connected digraph.

    Computed from BFS levels: the gcd over arcs (u, v) of level(u)+1-level(v).
    """
    if graph.n == 0:
        raise ValueError("empty graph has no period")
    if not is_strongly_connected(graph):
        raise ValueError("graph is not strongly connected")
    if graph.n == 1:
        raise ValueError("single vertex contains no directed cycle")
    level = _bfs_levels(graph, 0)
    g = 0
    for u, v in graph.arcs:
        g = gcd(g, abs(level[u] + 1 - level[v]))
    # some arc closes a cycle, so g >= 1 here
    return g


def period(graph: Digraph) -> int:
    """gcd of all directed cycle lengths; 0 when the graph is acyclic.

    Every cycle lives inside a strongly connected component, so this is the
    gcd of the per-component periods over components with at least 2 vertices.
    """
    g = 0
    for comp in sccs(graph).components:
        if len(comp) >= 2:
            sub, _ = induced_subgraph(graph, comp)
            g = gcd(g, scc_period(sub))
    return g


@dataclass(frozen=True)
class LayerDecomposition:
    """Partition of a strongly connected digraph into ``h`` layers such that
    every arc goes from layer ``i`` to layer ``(i + 1) mod h``."""

    h: int
    layer_of: tuple[int, ...]
    layers: tuple[frozenset[int], ...]


def layer_decomposition(graph: Digraph) -> LayerDecomposition:
    """Layers of a strongly connected digraph: BFS level from vertex 0, mod h.

    Vertex 0 always lands in layer 0. Every residue class is nonempty because
    each vertex has an out-neighbor one layer onward.
    """
    h = scc_period(graph)
    level = _bfs_levels(graph, 0)
    layer_of = tuple(lv % h for lv in level)
    layers = tuple(
        frozenset(v for v in range(graph.n) if layer_of[v] == i) for i in range(h)
    )
    return LayerDecomposition(h, layer_of, layers)


def cycle_gcd_oracle(graph: Digraph, max_n: int = 12) -> int:
    """gcd of the lengths of all directed simple cycles, by exhaustive DFS.

    Independent of the BFS-level period computation; guarded to small graphs.
    Returns 0 when the graph is acyclic.
    """
    if graph.n > max_n:
        raise ValueError(f"n={graph.n} exceeds the oracle guard of {max_n}")
    g = 0
    onpath = [False] * graph.n

    def explore(start: int, v: int, length: int) -> bool:
        # enumerate each cycle once: rooted at its smallest vertex
        nonlocal g
        for w in graph.out_adj[v]:
            if w == start:
                g = gcd(g, length + 1)
                if g == 1:
                    return True
            elif w > start and not onpath[w]:
                onpath[w] = True
                done = explore(start, w, length + 1)
                onpath[w] = False
                if done:
                    return True
        return False

    for s in range(graph.n):
        if explore(s, s, 0):
            return 1
    return g
