"""Edge colorings, the local irregularity check, sums and color permutations.

Colors are the integers ``1..k``. Where the literature writes a, b, c, d we
use 1, 2, 3, 4.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import ColoringError, ParseError
from .graph import Edge, Graph, edge, label_index


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    graph: Graph
    colors: Mapping[Edge, int]
    k: int | None = None

    def __post_init__(self):
        colors = {edge(*e): c for e, c in self.colors.items()}
        if len(colors) != len(self.colors):
            raise ColoringError("edge listed twice")
        if colors.keys() != self.graph.edge_set:
            extra = sorted(colors.keys() - self.graph.edge_set)
            missing = sorted(self.graph.edge_set - colors.keys())
            raise ColoringError(f"coloring must cover E(G) exactly "
                                f"(missing {missing[:5]}, extra {extra[:5]})")
        top = max(colors.values(), default=0)
        k = top if self.k is None else self.k
        if k < top or any(c < 1 for c in colors.values()):
            raise ColoringError(f"colors must lie in 1..{k}")
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "k", k)

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and self.colors == other.colors

    def __getitem__(self, e) -> int:
        return self.colors[edge(*e)]

    @cached_property
    def _degrees(self) -> Counter:
        deg = Counter()
        for (u, v), c in self.colors.items():
            deg[u, c] += 1
            deg[v, c] += 1
        return deg

    def used_colors(self) -> set[int]:
        return set(self.colors.values())

    @property
    def num_colors(self) -> int:
        return len(self.used_colors())

    def colors_at(self, v: int) -> set[int]:
        return {self.colors[edge(v, w)] for w in self.graph.adj[v]}


def color_degree(coloring: EdgeColoring, v: int, c: int) -> int:
    return coloring._degrees[v, c]


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violations: list[tuple[Edge, int]] = field(default_factory=list)


def verify_liec(coloring: EdgeColoring) -> VerifyReport:
    deg = coloring._degrees
    bad = [(e, c) for e, c in sorted(coloring.colors.items())
           if deg[e[0], c] == deg[e[1], c]]
    return VerifyReport(not bad, bad)


def is_liec(coloring: EdgeColoring) -> bool:
    return verify_liec(coloring).valid


def verify_aliec(shrub, coloring: EdgeColoring) -> bool:
    root_edge = edge(*shrub.root_edge)
    return all(e == root_edge for e, _ in verify_liec(coloring).violations)


def sum_colorings(parts: Iterable[EdgeColoring], graph: Graph | None = None) -> EdgeColoring:
    parts = list(parts)
    merged: dict[Edge, int] = {}
    for part in parts:
        for e, c in part.colors.items():
            if e in merged:
                raise ColoringError(f"parts overlap on edge {e}")
            merged[e] = c
    if graph is None:
        n = max((p.graph.n for p in parts), default=0)
        labels = parts[0].graph.labels if parts and parts[0].graph.n == n else None
        graph = Graph(n, merged, labels)
    elif merged.keys() != graph.edge_set:
        raise ColoringError("parts do not cover the target graph exactly")
    k = max((p.k for p in parts), default=0)
    return EdgeColoring(graph, merged, k)


def permute_colors(coloring: EdgeColoring, mapping: Mapping[int, int]) -> EdgeColoring:
    """Relabel colors; ``mapping`` must be a bijection on ``1..k`` (missing keys fixed)."""
    k = coloring.k
    full = {c: mapping.get(c, c) for c in range(1, k + 1)}
    if set(mapping) - full.keys() or sorted(full.values()) != list(range(1, k + 1)):
        raise ColoringError(f"mapping {dict(mapping)} is not a bijection on 1..{k}")
    return EdgeColoring(coloring.graph,
                        {e: full[c] for e, c in coloring.colors.items()}, k)


def compact_colors(coloring: EdgeColoring) -> EdgeColoring:
    """Rename the used colors to 1..j keeping their relative order."""
    order = {c: i for i, c in enumerate(sorted(coloring.used_colors()), start=1)}
    return EdgeColoring(coloring.graph,
                        {e: order[c] for e, c in coloring.colors.items()}, len(order))


def monochromatic(graph: Graph, color: int = 1) -> EdgeColoring:
    return EdgeColoring(graph, {e: color for e in graph.edges}, color if graph.m else 0)


def parse_coloring(text: str, graph: Graph) -> EdgeColoring:
    index = label_index(graph)
    colors = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v color', got {raw!r}", lineno)
        try:
            a, b, c = (int(x) for x in parts)
        except ValueError:
            raise ParseError(f"non-integer field in {raw!r}", lineno) from None
        if a not in index or b not in index:
            raise ParseError(f"unknown vertex in {raw!r}", lineno)
        e = edge(index[a], index[b])
        if e not in graph.edge_set:
            raise ParseError(f"{a} {b} is not an edge of the graph", lineno)
        if e in colors:
            raise ParseError(f"edge {a} {b} colored twice", lineno)
        if c < 1:
            raise ParseError(f"color must be >= 1, got {c}", lineno)
        colors[e] = c
    try:
        return EdgeColoring(graph, colors)
    except ColoringError as exc:
        raise ParseError(str(exc)) from None


def format_coloring(coloring: EdgeColoring) -> str:
    lab = coloring.graph.labels
    return "".join(f"{lab[u]} {lab[v]} {c}\n" for (u, v), c in sorted(coloring.colors.items()))
