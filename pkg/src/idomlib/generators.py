"""Graph family constructors: cycles, paths, the directed wheel and paw, the
layered subset families D_{h,k}, Cartesian products, antiparallel doubling,
and seeded random instances for property tests."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .digraph import Digraph, is_ids
from .structure import is_strongly_connected, period

__all__ = [
    "DhkGraph",
    "DhkSpec",
    "GenerationError",
    "UndirectedGraph",
    "cartesian_product",
    "cn_box_cn_ids",
    "double_edges",
    "gen_cycle",
    "gen_dhk",
    "gen_path",
    "gen_paw",
    "gen_wheel",
    "random_dag",
    "random_digraph",
    "random_layered_strong",
    "random_oriented_bipartite",
]


class GenerationError(ValueError):
    """A constructed instance failed its structural checks."""


def gen_cycle(n: int) -> Digraph:
    """Directed cycle 0 -> 1 -> ... -> n-1 -> 0. n=2 is an antiparallel pair."""
    if n < 2:
        raise ValueError("cycle needs at least 2 vertices")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Digraph:
    """Directed path 0 -> 1 -> ... -> n-1."""
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def gen_wheel(n: int) -> Digraph:
    """Directed wheel on n+1 vertices: vertex n is a dominating center with an
    arc to every rim vertex, and the rim 0..n-1 is a directed cycle."""
    if n < 3:
        raise ValueError("wheel rim needs at least 3 vertices")
    arcs = [(i, (i + 1) % n) for i in range(n)]
    arcs.extend((n, i) for i in range(n))
    return Digraph(n + 1, arcs)


def gen_paw() -> Digraph:
    """Oriented paw: pendant vertex 0 feeding the directed triangle 1 -> 2 -> 3 -> 1
    at vertex 3."""
    return Digraph(4, [(0, 3), (1, 2), (2, 3), (3, 1)])


@dataclass(frozen=True)
class DhkSpec:
    """Parameters of the layered subset family: h odd >= 3, k >= 2."""

    h: int
    k: int
    variant: str = "ids_free"  # "ids_free" | "with_ids"
    rules: str = "text"  # "text" | "figure"

    def __post_init__(self) -> None:
        if self.h < 3 or self.h % 2 == 0:
            raise ValueError("h must be odd and at least 3")
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if self.variant not in ("ids_free", "with_ids"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.rules not in ("text", "figure"):
            raise ValueError(f"unknown rules {self.rules!r}")


@dataclass(frozen=True)
class DhkGraph:
    """A constructed D_{h,k} instance with its intended layer labeling and the
    realized structural diagnostics."""

    graph: Digraph
    layers: tuple[tuple[int, ...], ...]
    spec: DhkSpec
    strongly_connected: bool
    period: int


def _dhk_layer_kinds(h: int) -> list[str]:
    # "L": k labeled vertices; "U": the 2^k - 2 nonempty proper subsets
    kinds = ["L", "U", "U"]
    for j in range(3, h):
        kinds.append("L" if j % 2 == 1 else "U")
    return kinds


def _dhk_rules(spec: DhkSpec) -> list[str]:
    # one membership rule per layer transition i -> i+1 mod h
    h = spec.h
    if h == 3:
        rules = ["in", "eq", "setin"]
        flip_at = 0
    else:
        rules = ["in", "eq", "setnotin"]
        for j in range(3, h - 2):
            rules.append("notin" if j % 2 == 1 else "setnotin")
        rules.append("in")  # last label layer into the final subset layer
        rules.append("setnotin")  # wrap back to layer 0
        flip_at = h - 2
    if spec.rules == "figure":
        rules[0] = "notin" if rules[0] == "in" else "in"
    if spec.variant == "with_ids":
        rules[flip_at] = "notin" if rules[flip_at] == "in" else "in"
    return rules


def gen_dhk(spec: DhkSpec, strict: bool = True) -> DhkGraph:
    """Layered graph with h layers alternating between k labeled vertices and
    the nonempty proper subsets of {1..k}, arcs by per-transition membership
    rules. Layer S_0 starts at vertex id 0; subset layers are ordered by
    ascending subset bitmask.

    Small parameters can degenerate (k=2 collapses the construction into
    plain cycles that may be disconnected or have a larger period); with
    ``strict`` the degenerate outcome raises, otherwise it is returned with
    its diagnostics filled in.
    """
    h, k = spec.h, spec.k
    kinds = _dhk_layer_kinds(h)
    rules = _dhk_rules(spec)
    subset_masks = list(range(1, (1 << k) - 1))  # nonempty proper subsets of [k]

    layers: list[list[int]] = []
    contents: list[list[int]] = []  # label number, or subset mask, per vertex
    next_id = 0
    for kind in kinds:
        size = k if kind == "L" else len(subset_masks)
        layers.append(list(range(next_id, next_id + size)))
        contents.append(
            list(range(1, k + 1)) if kind == "L" else list(subset_masks)
        )
        next_id += size

    def connects(rule: str, a, b) -> bool:
        if rule == "in":  # label a, subset mask b
            return bool(b & (1 << (a - 1)))
        if rule == "notin":
            return not b & (1 << (a - 1))
        if rule == "eq":  # subset masks
            return a == b
        if rule == "setin":  # subset mask a, label b
            return bool(a & (1 << (b - 1)))
        if rule == "setnotin":
            return not a & (1 << (b - 1))
        raise AssertionError(rule)

    arcs = []
    for i in range(h):
        j = (i + 1) % h
        rule = rules[i]
        for vi, ci in zip(layers[i], contents[i]):
            for vj, cj in zip(layers[j], contents[j]):
                if connects(rule, ci, cj):
                    arcs.append((vi, vj))
    graph = Digraph(next_id, arcs)

    connected = is_strongly_connected(graph)
    realized = period(graph)
    result = DhkGraph(
        graph, tuple(tuple(layer) for layer in layers), spec, connected, realized
    )
    if strict and not (connected and realized == h):
        raise GenerationError(
            f"D_({h},{k}) [{spec.variant}, {spec.rules} rules] degenerated: "
            f"strongly_connected={connected}, period={realized}; "
            "pass strict=False to accept the instance as constructed"
        )
    return result


def cartesian_product(g: Digraph, h: Digraph, max_vertices: int = 200_000) -> Digraph:
    """Cartesian product: (x, u) -> (y, u) for arcs x -> y, and (x, u) -> (x, v)
    for arcs u -> v. Vertex (x, u) gets id x * h.n + u (row-major)."""
    n = g.n * h.n
    if n > max_vertices:
        raise ValueError(f"product on {n} vertices exceeds guard of {max_vertices}")
    arcs = []
    for x, y in g.arcs:
        for u in range(h.n):
            arcs.append((x * h.n + u, y * h.n + u))
    for u, v in h.arcs:
        for x in range(g.n):
            arcs.append((x * h.n + u, x * h.n + v))
    return Digraph(n, arcs)


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph; edges stored as (u, v) with u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "UndirectedGraph":
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u}, {u}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            canon.add((min(u, v), max(u, v)))
        return cls(n, frozenset(canon))


def double_edges(graph: UndirectedGraph) -> Digraph:
    """Replace every undirected edge with a pair of antiparallel arcs.

    Independence and domination of any vertex set are preserved exactly, so
    this reduces the undirected problems to the directed ones.
    """
    arcs = []
    for u, v in graph.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(graph.n, arcs)


def cn_box_cn_ids(n: int) -> frozenset[int]:
    """An explicit independent dominating set of C_n x C_n for odd n: in row i
    take columns i, i+2, ..., i+2(floor(n/2)-1) mod n. Verified before return.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3")
    members = frozenset(
        i * n + (i + 2 * j) % n for i in range(n) for j in range(n // 2)
    )
    product = cartesian_product(gen_cycle(n), gen_cycle(n))
    assert is_ids(product, members).ids
    return members


def random_dag(n: int, arc_prob: float, seed: int) -> Digraph:
    """Acyclic: arcs only follow a random vertex order."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    arcs = [
        (order[i], order[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < arc_prob
    ]
    return Digraph(n, arcs)


def random_digraph(n: int, arc_prob: float, seed: int) -> Digraph:
    """Each ordered pair becomes an arc independently."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < arc_prob
    ]
    return Digraph(n, arcs)


def random_oriented_bipartite(a: int, b: int, arc_prob: float, seed: int) -> Digraph:
    """Parts 0..a-1 and a..a+b-1; each cross pair gets at most one arc, in a
    random direction, so there are never antiparallel pairs."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    rng = random.Random(seed)
    arcs = []
    for x in range(a):
        for y in range(a, a + b):
            if rng.random() < arc_prob:
                arcs.append((x, y) if rng.random() < 0.5 else (y, x))
    return Digraph(a + b, arcs)


def random_layered_strong(
    h: int, layer_size: int, arc_prob: float, seed: int, max_attempts: int = 64
) -> Digraph:
    """Strongly connected with period exactly h: layers of equal size, arcs
    only between consecutive layers. A spanning cycle through all vertices
    guarantees strong connectivity (and a period divisible by h); random
    extra arcs are added, resampling until the period is exactly h."""
    if h < 1 or layer_size < 1:
        raise ValueError("h and layer_size must be positive")
    if h == 1:
        raise ValueError("layers need h >= 2 (a single layer admits no arcs)")
    rng = random.Random(seed)
    s = layer_size
    vertex = lambda i, j: i * s + j
    for _ in range(max_attempts):
        arcs = set()
        for i in range(h):
            nxt = (i + 1) % h
            for j in range(s):
                target = (j + 1) % s if i == 0 else j
                arcs.add((vertex(i, j), vertex(nxt, target)))
        for i in range(h):
            nxt = (i + 1) % h
            for j in range(s):
                for j2 in range(s):
                    if rng.random() < arc_prob:
                        arcs.add((vertex(i, j), vertex(nxt, j2)))
        graph = Digraph(h * s, arcs)
        assert is_strongly_connected(graph)
        if period(graph) == h:
            return graph
    raise GenerationError(
        f"could not hit period {h} in {max_attempts} attempts "
        f"(h={h}, layer_size={layer_size}, arc_prob={arc_prob}, seed={seed})"
    )
