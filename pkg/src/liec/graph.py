"""Undirected simple graphs, block decomposition and the edge-list format.

Vertices are dense integers ``0..n-1``. Every graph also carries ``labels``,
the raw vertex names it was read with, so results can be written back in the
caller's numbering. Subgraphs produced by :func:`without_edges` keep the full
vertex set, which lets colorings of edge-disjoint pieces be summed directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import GraphError, ParseError

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n < 0:
            raise GraphError("negative vertex count")
        seen = set()
        adj = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            e = edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = tuple(sorted(seen))
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        if labels is None:
            labels = range(n)
        self.labels = tuple(labels)
        if len(self.labels) != n:
            raise GraphError("label map does not match vertex count")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edge_set

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def support(self) -> list[int]:
        """Vertices incident to at least one edge."""
        return [v for v in range(self.n) if self.adj[v]]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def without_edges(g: Graph, removed: Iterable[tuple[int, int]]) -> Graph:
    removed = {edge(*e) for e in removed}
    missing = removed - g.edge_set
    if missing:
        raise GraphError(f"edges not in graph: {sorted(missing)}")
    return Graph(g.n, [e for e in g.edges if e not in removed], g.labels)


def restrict(g: Graph, kept: Iterable[tuple[int, int]]) -> Graph:
    """Same vertex set, only the given edges (which must belong to ``g``)."""
    kept = {edge(*e) for e in kept}
    return without_edges(g, g.edge_set - kept)


def with_edges(g: Graph, added: Iterable[tuple[int, int]]) -> Graph:
    return Graph(g.n, list(g.edges) + [edge(*e) for e in added], g.labels)


def compact(g: Graph, edges: Iterable[tuple[int, int]] | None = None):
    """Relabel the subgraph spanned by ``edges`` to dense ids.

    Returns ``(h, ids)`` where ``ids[i]`` is the vertex of ``g`` that became
    vertex ``i`` of ``h``. Ids are assigned in increasing order of ``g``'s ids.
    """
    edges = g.edges if edges is None else [edge(*e) for e in edges]
    ids = sorted({x for e in edges for x in e})
    index = {v: i for i, v in enumerate(ids)}
    h = Graph(len(ids), [(index[u], index[v]) for u, v in edges],
              [g.labels[v] for v in ids])
    return h, ids


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, isolated vertices included."""
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] != -1:
            continue
        comp[s] = len(out)
        stack, members = [s], [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if comp[y] == -1:
                    comp[y] = comp[s]
                    stack.append(y)
                    members.append(y)
        out.append(sorted(members))
    return out


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(components(g)) == 1


def edge_components(g: Graph) -> list[list[Edge]]:
    """Edge sets of the components that contain at least one edge."""
    out = []
    for comp in components(g):
        if len(comp) > 1:
            vs = set(comp)
            out.append([e for e in g.edges if e[0] in vs])
    return out


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("graph must be connected")


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


@dataclass(frozen=True)
class BlockTree:
    """Blocks (biconnected components) and the cut vertices joining them."""

    blocks: tuple[frozenset, ...]
    block_vertices: tuple[frozenset, ...]
    cut_vertices: frozenset
    block_cuts: tuple[tuple[int, ...], ...]
    cut_blocks: dict

    def is_cycle(self, i: int) -> bool:
        return len(self.blocks[i]) > 1

    def cycle_indices(self) -> list[int]:
        return [i for i in range(len(self.blocks)) if self.is_cycle(i)]

    def blocks_at(self, v: int) -> tuple[int, ...]:
        if v in self.cut_blocks:
            return self.cut_blocks[v]
        return tuple(i for i, vs in enumerate(self.block_vertices) if v in vs)


def decompose_blocks(g: Graph) -> BlockTree:
    """Hopcroft-Tarjan lowpoint decomposition, iterative so long paths are fine."""
    require_connected(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    edge_stack = []
    if n > 1:
        disc[0] = low[0] = 0
        clock = 1
        stack = [(0, -1, iter(g.adj[0]))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append(edge(v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.adj[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append(edge(v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                tree_edge = edge(parent, v)
                block = set()
                while True:
                    e = edge_stack.pop()
                    block.add(e)
                    if e == tree_edge:
                        break
                blocks.append(frozenset(block))
    block_vertices = tuple(frozenset(x for e in b for x in e) for b in blocks)
    where = {}
    for i, vs in enumerate(block_vertices):
        for v in vs:
            where.setdefault(v, []).append(i)
    cut_blocks = {v: tuple(bs) for v, bs in where.items() if len(bs) > 1}
    block_cuts = tuple(tuple(sorted(v for v in vs if v in cut_blocks))
                       for vs in block_vertices)
    return BlockTree(tuple(blocks), block_vertices, frozenset(cut_blocks),
                     block_cuts, cut_blocks)


def is_cactus(g: Graph) -> bool:
    bt = decompose_blocks(g)
    return all(len(b) == 1 or len(b) == len(vs)
               for b, vs in zip(bt.blocks, bt.block_vertices))


def cycle_rank(g: Graph) -> int:
    """m - n + c; equals the number of cycles when ``g`` is a cactus."""
    return g.m - g.n + len(components(g))


def parse_edge_list(text: str) -> Graph:
    labels: dict[int, int] = {}
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two vertex labels, got {raw!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer label in {raw!r}", lineno) from None
        if a < 0 or b < 0:
            raise ParseError(f"negative label in {raw!r}", lineno)
        if a == b:
            raise ParseError(f"self-loop at {a}", lineno)
        u = labels.setdefault(a, len(labels))
        v = labels.setdefault(b, len(labels))
        e = edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge {a} {b}", lineno)
        seen.add(e)
        edges.append(e)
    return Graph(len(labels), edges, list(labels))


def format_edge_list(g: Graph) -> str:
    return "".join(f"{g.labels[u]} {g.labels[v]}\n" for u, v in g.edges)


def label_index(g: Graph) -> dict[int, int]:
    return {lab: i for i, lab in enumerate(g.labels)}
