"""Existence and construction algorithms for independent dominating sets,
plus exhaustive oracles for the domination parameters.

Every solver that answers "found" verifies its set with the independence and
domination checkers before returning, so a returned set is always valid. The
search-based solvers share a global step budget; exhausting it raises
:class:`BudgetExceeded` instead of producing an answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Iterator

from .digraph import Digraph, induced_subgraph, is_ids
from .structure import (
    LayerDecomposition,
    condensation,
    is_strongly_connected,
    layer_decomposition,
    period,
    scc_period,
)

__all__ = [
    "BudgetExceeded",
    "CapExceeded",
    "DEFAULT_BUDGET",
    "PropagationResult",
    "SolveOutcome",
    "SolverStats",
    "brute_force_solve",
    "enumerate_ids_brute",
    "forced_sources_closure",
    "idomatic_brute",
    "min_dom_size_brute",
    "min_ids_size_brute",
    "propagate_layer_seed",
    "solve_auto",
    "solve_bipartite",
    "solve_dag",
    "solve_even_period",
    "solve_exact",
    "solve_strong_by_layers",
    "two_disjoint_ids",
]

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """The global work budget ran out before the solver reached an answer."""


class CapExceeded(RuntimeError):
    """The instance is larger than an exhaustive oracle's size guard."""


@dataclass
class SolverStats:
    seeds_explored: int = 0
    subsets_explored: int = 0
    recursion_depth: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class SolveOutcome:
    status: str  # "found" | "none"
    set: frozenset[int] | None
    method: str
    stats: SolverStats

    @property
    def found(self) -> bool:
        return self.status == "found"


@dataclass(frozen=True)
class PropagationResult:
    consistent: bool
    union: frozenset[int] | None = None
    failed_step: int | None = None


class _Search:
    """Step budget and counters shared across one solver invocation."""

    def __init__(self, budget: int | None = None) -> None:
        self.budget = DEFAULT_BUDGET if budget is None else budget
        self.used = 0
        self.stats = SolverStats()

    def charge(self, steps: int = 1) -> None:
        self.used += steps
        if self.used > self.budget:
            raise BudgetExceeded(f"work budget of {self.budget} steps exhausted")


def _mask_of(members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


def _set_of(mask: int) -> frozenset[int]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(v)
    return frozenset(out)


def _finish_found(
    graph: Digraph, members: frozenset[int], method: str, search: _Search, t0: float
) -> SolveOutcome:
    search.stats.elapsed = time.perf_counter() - t0
    report = is_ids(graph, members)
    assert report.ids, f"internal error: method {method!r} produced an invalid set"
    return SolveOutcome("found", frozenset(members), method, search.stats)


def _finish_none(method: str, search: _Search, t0: float) -> SolveOutcome:
    search.stats.elapsed = time.perf_counter() - t0
    return SolveOutcome("none", None, method, search.stats)


def forced_sources_closure(graph: Digraph) -> tuple[frozenset[int], Digraph, tuple[int, ...]]:
    """Repeatedly take every source and delete its closed out-neighborhood.

    A source (in-degree-0 vertex) can only dominate itself, so it belongs to
    every independent dominating set; distinct sources are never adjacent.
    Returns (forced set in original ids, source-free residual, old-id map).
    """
    alive = set(range(graph.n))
    forced: set[int] = set()
    while True:
        sources = [
            v for v in alive if not any(u in alive for u in graph.in_adj[v])
        ]
        if not sources:
            break
        forced.update(sources)
        for v in sources:
            alive.discard(v)
            alive.difference_update(graph.out_adj[v])
    residual, old_ids = induced_subgraph(graph, alive)
    return frozenset(forced), residual, old_ids


def solve_dag(graph: Digraph) -> SolveOutcome:
    """Greedy solution for acyclic digraphs: the source closure empties them."""
    t0 = time.perf_counter()
    search = _Search()
    if period(graph) != 0:
        raise ValueError("graph contains a directed cycle")
    forced, residual, _ = forced_sources_closure(graph)
    assert residual.n == 0  # a nonempty acyclic graph always has a source
    return _finish_found(graph, forced, "dag-greedy", search, t0)


def solve_even_period(graph: Digraph) -> SolveOutcome:
    """Even-period strongly connected digraphs: take the even layers."""
    t0 = time.perf_counter()
    search = _Search()
    h = scc_period(graph)
    if h % 2 == 1:
        raise ValueError(f"period {h} is odd")
    layers = layer_decomposition(graph)
    evens = frozenset().union(*(layers.layers[i] for i in range(0, h, 2)))
    return _finish_found(graph, evens, "even-period", search, t0)


def two_disjoint_ids(graph: Digraph) -> tuple[frozenset[int], frozenset[int]]:
    """Two disjoint verified independent dominating sets of an even-period graph:
    the even-layer union and the odd-layer union."""
    h = scc_period(graph)
    if h % 2 == 1:
        raise ValueError(f"period {h} is odd")
    layers = layer_decomposition(graph)
    evens = frozenset().union(*(layers.layers[i] for i in range(0, h, 2)))
    odds = frozenset().union(*(layers.layers[i] for i in range(1, h, 2)))
    assert is_ids(graph, evens).ids and is_ids(graph, odds).ids
    return evens, odds


def _two_coloring(graph: Digraph, parts) -> list[int]:
    n = graph.n
    if parts is not None:
        side_a, side_b = (frozenset(p) for p in parts)
        if side_a & side_b or side_a | side_b != frozenset(range(n)):
            raise ValueError("parts do not partition the vertex set")
        for u, v in graph.arcs:
            if (u in side_a) == (v in side_a):
                raise ValueError(f"arc ({u}, {v}) lies inside one part")
        return [0 if v in side_a else 1 for v in range(n)]
    undirected: list[list[int]] = [[] for _ in range(n)]
    for u, v in graph.arcs:
        undirected[u].append(v)
        undirected[v].append(u)
    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in undirected[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    raise ValueError("underlying undirected graph is not bipartite")
    return color


def solve_bipartite(graph: Digraph, parts=None) -> SolveOutcome:
    """Bipartite underlying graph: source closure, then one side of the residual.

    The residual is source-free, so every vertex in it has an in-neighbor,
    necessarily on the other side; taking a whole side therefore dominates.
    """
    t0 = time.perf_counter()
    search = _Search()
    color = _two_coloring(graph, parts)
    forced, residual, old_ids = forced_sources_closure(graph)
    side = {old_ids[v] for v in range(residual.n) if color[old_ids[v]] == 0}
    return _finish_found(graph, forced | side, "bipartite", search, t0)


def _layer_masks(layers: LayerDecomposition) -> list[int]:
    masks = [0] * layers.h
    for v, i in enumerate(layers.layer_of):
        masks[i] |= 1 << v
    return masks


def _propagate(
    out_masks: tuple[int, ...],
    layer_masks: list[int],
    h: int,
    k: int,
    seed_mask: int,
    search: _Search | None,
) -> tuple[int | None, int | None]:
    """Walk the seed around the layers; (union mask, None) if the wrap-around
    recomputation of layer k reproduces the seed, else (None, failing step).

    Step t fills layer k+t with everything not dominated from the previous
    step. An empty intermediate step cannot wrap consistently when h is odd
    (a valid set meets every layer of an odd-period graph), so it fails fast.
    """
    odd = h % 2 == 1
    union = seed_mask
    current = seed_mask
    for t in range(1, h + 1):
        if search is not None:
            search.charge()
        forbidden = 0
        m = current
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            forbidden |= out_masks[v]
        current = layer_masks[(k + t) % h] & ~forbidden
        if t == h:
            if current == seed_mask:
                return union, None
            return None, t
        if odd and current == 0:
            return None, t
        union |= current
    raise AssertionError("unreachable")


def propagate_layer_seed(
    graph: Digraph,
    layers: LayerDecomposition,
    k: int,
    seed: Iterable[int],
    budget: int | None = None,
) -> PropagationResult:
    """Extend a seed subset of layer k around a strongly connected digraph.

    Each layer is fully determined by the previous one: layer k+t+1 of any
    valid set is exactly that layer minus the out-neighbors of layer k+t.
    A consistent wrap-around yields the unique independent dominating set
    whose layer-k slice equals the seed; it is verified before returning.
    """
    seed_set = frozenset(seed)
    if not (0 <= k < layers.h):
        raise ValueError(f"layer index {k} out of range for h={layers.h}")
    if not seed_set <= layers.layers[k]:
        raise ValueError("seed is not a subset of layer k")
    search = _Search(budget)
    union_mask, failed = _propagate(
        graph.out_masks, _layer_masks(layers), layers.h, k, _mask_of(seed_set), search
    )
    if union_mask is None:
        return PropagationResult(False, None, failed)
    union = _set_of(union_mask)
    assert is_ids(graph, union).ids
    return PropagationResult(True, union, None)


def _iter_strong_ids(graph: Digraph, search: _Search) -> Iterator[frozenset[int]]:
    """All independent dominating sets of a strongly connected digraph.

    Enumerates seeds over the smallest layer (ties: lowest index) in
    ascending bitmask order, bit j being the j-th smallest layer member;
    each consistent propagation is one distinct set, and every set shows up.
    """
    layers = layer_decomposition(graph)
    layer_masks = _layer_masks(layers)
    k = min(range(layers.h), key=lambda i: (len(layers.layers[i]), i))
    members = sorted(layers.layers[k])
    out_masks = graph.out_masks
    for seed_bits in range(1 << len(members)):
        search.charge()
        search.stats.seeds_explored += 1
        seed_mask = 0
        b = seed_bits
        while b:
            j = (b & -b).bit_length() - 1
            b &= b - 1
            seed_mask |= 1 << members[j]
        union_mask, _ = _propagate(out_masks, layer_masks, layers.h, k, seed_mask, search)
        if union_mask is not None:
            yield _set_of(union_mask)


def solve_strong_by_layers(graph: Digraph, budget: int | None = None) -> SolveOutcome:
    """Layer-seed search for strongly connected digraphs.

    Even period delegates to the even-layer construction. Odd period
    enumerates at most 2^{|smallest layer|} seeds, each propagated around the
    h layers, and reports the first consistent set or that none exists.
    """
    t0 = time.perf_counter()
    if not is_strongly_connected(graph):
        raise ValueError("graph is not strongly connected")
    if scc_period(graph) % 2 == 0:
        return solve_even_period(graph)
    search = _Search(budget)
    for found in _iter_strong_ids(graph, search):
        return _finish_found(graph, found, "layers", search, t0)
    return _finish_none("layers", search, t0)


def _exact(graph: Digraph, search: _Search, depth: int) -> frozenset[int] | None:
    search.stats.recursion_depth = max(search.stats.recursion_depth, depth)
    forced, residual, old_ids = forced_sources_closure(graph)
    if residual.n == 0:
        return forced
    cond = condensation(residual)
    sources = cond.source_components()
    # a size-1 source component would itself be a source vertex, so every
    # source component here is strongly connected on >= 2 vertices
    target = min(sources, key=lambda c: cond.scc.components[c][0])
    comp = cond.scc.components[target]
    comp_graph, comp_old = induced_subgraph(residual, comp)
    for candidate_local in _iter_strong_ids(comp_graph, search):
        candidate = {comp_old[v] for v in candidate_local}
        removed = set(comp)
        for v in candidate:
            removed.update(residual.out_adj[v])
        rest_graph, rest_old = induced_subgraph(
            residual, (v for v in range(residual.n) if v not in removed)
        )
        tail = _exact(rest_graph, search, depth + 1)
        if tail is not None:
            solved = candidate | {rest_old[v] for v in tail}
            return forced | {old_ids[v] for v in solved}
    return None


def solve_exact(graph: Digraph, budget: int | None = None) -> SolveOutcome:
    """Complete decision procedure for any digraph.

    Takes the forced sources, then branches on the independent dominating
    sets of a source component of the residual's condensation (that
    component can only be dominated from within), recursing on what is left
    undominated. Sound and complete; only the step budget can stop it early.
    """
    t0 = time.perf_counter()
    search = _Search(budget)
    solution = _exact(graph, search, 1)
    if solution is None:
        return _finish_none("exact", search, t0)
    return _finish_found(graph, solution, "exact", search, t0)


def solve_auto(graph: Digraph, budget: int | None = None) -> SolveOutcome:
    """Dispatch by structure: acyclic and even-period graphs have fast
    constructions; everything else goes through the exact solver."""
    if period(graph) == 0:
        return solve_dag(graph)
    if is_strongly_connected(graph) and scc_period(graph) % 2 == 0:
        return solve_even_period(graph)
    return solve_exact(graph, budget)


def _ids_mask(out_masks: tuple[int, ...], full: int, mask: int) -> bool:
    cover = mask
    rem = mask
    while rem:
        v = (rem & -rem).bit_length() - 1
        rem &= rem - 1
        outs = out_masks[v]
        if outs & mask:
            return False
        cover |= outs
    return cover == full


def brute_force_solve(
    graph: Digraph, cap: int = 20, budget: int | None = None
) -> SolveOutcome:
    """Scan all subsets in ascending bitmask order; the independent oracle."""
    t0 = time.perf_counter()
    if graph.n > cap:
        raise CapExceeded(f"n={graph.n} exceeds brute-force cap {cap}")
    search = _Search(budget)
    out_masks = graph.out_masks
    full = (1 << graph.n) - 1
    for mask in range(1 << graph.n):
        search.charge()
        search.stats.subsets_explored += 1
        if _ids_mask(out_masks, full, mask):
            return _finish_found(graph, _set_of(mask), "brute", search, t0)
    return _finish_none("brute", search, t0)


def enumerate_ids_brute(graph: Digraph, cap: int = 20) -> list[frozenset[int]]:
    """Every independent dominating set, in ascending bitmask order."""
    if graph.n > cap:
        raise CapExceeded(f"n={graph.n} exceeds brute-force cap {cap}")
    out_masks = graph.out_masks
    full = (1 << graph.n) - 1
    return [
        _set_of(mask)
        for mask in range(1 << graph.n)
        if _ids_mask(out_masks, full, mask)
    ]


def min_ids_size_brute(graph: Digraph, cap: int = 20) -> int | None:
    """Minimum size of an independent dominating set; None when there is none."""
    if graph.n > cap:
        raise CapExceeded(f"n={graph.n} exceeds brute-force cap {cap}")
    out_masks = graph.out_masks
    full = (1 << graph.n) - 1
    best: int | None = None
    for mask in range(1 << graph.n):
        if (best is None or mask.bit_count() < best) and _ids_mask(out_masks, full, mask):
            best = mask.bit_count()
    return best


def min_dom_size_brute(graph: Digraph, cap: int = 20) -> int:
    """Minimum size of a (not necessarily independent) dominating set."""
    if graph.n > cap:
        raise CapExceeded(f"n={graph.n} exceeds brute-force cap {cap}")
    out_masks = graph.out_masks
    full = (1 << graph.n) - 1
    best = graph.n  # the whole vertex set always dominates
    for mask in range(1 << graph.n):
        if mask.bit_count() >= best:
            continue
        cover = mask
        rem = mask
        while rem:
            v = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            cover |= out_masks[v]
        if cover == full:
            best = mask.bit_count()
    return best


def idomatic_brute(graph: Digraph, cap: int = 14) -> int:
    """Maximum number of pairwise vertex-disjoint independent dominating sets.

    Lists every set, then searches for the largest disjoint subfamily; 0 when
    the graph has no independent dominating set at all.
    """
    if graph.n > cap:
        raise CapExceeded(f"n={graph.n} exceeds idomatic cap {cap}")
    out_masks = graph.out_masks
    full = (1 << graph.n) - 1
    masks = [m for m in range(1 << graph.n) if _ids_mask(out_masks, full, m)]
    if not masks:
        return 0
    best = 0

    def extend(start: int, used: int, count: int) -> None:
        nonlocal best
        best = max(best, count)
        if count + (len(masks) - start) <= best:
            return
        for i in range(start, len(masks)):
            if masks[i] & used == 0:
                extend(i + 1, used | masks[i], count + 1)

    extend(0, 0, 0)
    return best
