"""Core directed-graph representation, arc-list I/O, and the independence
and domination verifiers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

__all__ = [
    "Digraph",
    "IdsReport",
    "ParseError",
    "ParsedArcList",
    "Subgraph",
    "format_arc_list",
    "induced_subgraph",
    "is_dominating",
    "is_ids",
    "is_independent",
    "out_closed_removal",
    "parse_digraph",
]


class ParseError(ValueError):
    """Malformed arc-list document."""


class Digraph:
    """Immutable simple directed graph on vertices ``0 .. n-1``.

    Duplicate arcs collapse to a single arc and self-loops are rejected;
    antiparallel pairs ``(u, v)`` / ``(v, u)`` are allowed. Adjacency lists
    are sorted, so equal graphs have identical adjacency structure.
    """

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        unique: set[tuple[int, int]] = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop ({u}, {u}) is not allowed")
            unique.add((u, v))
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(unique):
            out[u].append(v)
            inn[v].append(u)
        self.n = n
        self.arcs = frozenset(unique)
        self.out_adj = tuple(tuple(vs) for vs in out)
        self.in_adj = tuple(tuple(us) for us in inn)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        """Per-vertex out-neighborhood as a bitmask (bit ``v`` is vertex ``v``)."""
        masks = []
        for vs in self.out_adj:
            m = 0
            for v in vs:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        """Per-vertex in-neighborhood as a bitmask."""
        masks = []
        for us in self.in_adj:
            m = 0
            for u in us:
                m |= 1 << u
            masks.append(m)
        return tuple(masks)


def _check_members(graph: Digraph, members: Iterable[int]) -> frozenset[int]:
    s = frozenset(members)
    for v in s:
        if not (0 <= v < graph.n):
            raise ValueError(f"vertex {v} out of range for n={graph.n}")
    return s


def is_independent(graph: Digraph, members: Iterable[int]) -> tuple[bool, list[tuple[int, int]]]:
    """Whether no arc has both endpoints in the set; returns (flag, violating arcs)."""
    s = _check_members(graph, members)
    bad = sorted((u, v) for (u, v) in graph.arcs if u in s and v in s)
    return (not bad, bad)


def is_dominating(graph: Digraph, members: Iterable[int]) -> tuple[bool, list[int]]:
    """Whether every vertex outside the set has an in-neighbor inside it.

    Returns (flag, undominated vertices).
    """
    s = _check_members(graph, members)
    bad = [
        v
        for v in range(graph.n)
        if v not in s and not any(u in s for u in graph.in_adj[v])
    ]
    return (not bad, bad)


@dataclass(frozen=True)
class IdsReport:
    """Joint verdict of the independence and domination verifiers."""

    independent: bool
    dominating: bool
    independence_violations: tuple[tuple[int, int], ...]
    domination_violations: tuple[int, ...]

    @property
    def ids(self) -> bool:
        return self.independent and self.dominating


def is_ids(graph: Digraph, members: Iterable[int]) -> IdsReport:
    """Verify a candidate independent dominating set, with witness lists."""
    indep, arc_violations = is_independent(graph, members)
    domin, undominated = is_dominating(graph, members)
    return IdsReport(indep, domin, tuple(arc_violations), tuple(undominated))


class Subgraph(NamedTuple):
    """A relabeled induced subgraph; ``old_ids[new] == old``."""

    graph: Digraph
    old_ids: tuple[int, ...]


def induced_subgraph(graph: Digraph, members: Iterable[int]) -> Subgraph:
    """Induced subgraph on the given vertices, relabeled to 0..k-1 in old-id order."""
    keep = sorted(_check_members(graph, members))
    index = {old: new for new, old in enumerate(keep)}
    arcs = [
        (index[u], index[v]) for (u, v) in graph.arcs if u in index and v in index
    ]
    return Subgraph(Digraph(len(keep), arcs), tuple(keep))


def out_closed_removal(graph: Digraph, members: Iterable[int]) -> Subgraph:
    """Delete the set and all of its out-neighbors; relabeled remainder plus old-id map."""
    s = _check_members(graph, members)
    removed = set(s)
    for u in s:
        removed.update(graph.out_adj[u])
    return induced_subgraph(graph, (v for v in range(graph.n) if v not in removed))


class ParsedArcList(NamedTuple):
    graph: Digraph
    duplicate_arcs: int


def parse_digraph(text: str) -> ParsedArcList:
    """Parse an arc-list document.

    Lines starting with ``#`` are comments and blank lines are tolerated.
    The first data line is ``n m``; exactly ``m`` data lines ``u v`` follow
    (0-indexed, ASCII decimals). Duplicate arcs collapse and are counted;
    self-loops, out-of-range ids, and malformed lines are errors.
    """
    data: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        data.append((lineno, stripped))
    if not data:
        raise ParseError("missing 'n m' header line")
    header_line, header = data[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"line {header_line}: header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"line {header_line}: header must be two integers") from None
    if n < 0 or m < 0:
        raise ParseError(f"line {header_line}: counts must be non-negative")
    body = data[1:]
    if len(body) != m:
        raise ParseError(f"expected {m} arc lines, found {len(body)}")
    arcs: list[tuple[int, int]] = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: arc line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: arc endpoints must be integers") from None
        if u == v:
            raise ParseError(f"line {lineno}: self-loop {u} {v}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: arc ({u}, {v}) out of range for n={n}")
        arcs.append((u, v))
    unique = set(arcs)
    return ParsedArcList(Digraph(n, unique), len(arcs) - len(unique))


def format_arc_list(graph: Digraph) -> str:
    """Normalized arc-list text: header then arcs sorted ascending, newline-terminated."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(graph.arcs))
    return "\n".join(lines) + "\n"
