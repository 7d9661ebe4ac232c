"""Locally irregular colorings of trees built from shrubs.

A shrub is a tree rooted at one of its leaves. Splitting a tree at a vertex
``u`` gives one shrub per neighbor of ``u``; coloring each shrub with two
colors so that only its root edge may be regular, and giving every root edge
color 1, yields a shrub-based coloring. Swapping the two colors inside some of
the shrubs usually repairs the edges at ``u``; when no subset works the tree
is colored with three colors, the third one confined to a single shrub.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _treedp
from .classify import classify
from .coloring import (EdgeColoring, color_degree, compact_colors, permute_colors,
                       sum_colorings)
from .errors import GraphError, NonColorableError, NotApplicable, SolverBug
from .graph import Graph, edge, is_tree, restrict

SWAP = {1: 2, 2: 1}

# Center degree -> the only a-sequences that resist every inversion.
RESISTANT = {3: [3, 2, 2], 4: [4, 3, 3, 2]}


@dataclass(frozen=True)
class Shrub:
    """``tree`` shares vertex ids with the tree it was cut from."""

    tree: Graph
    root: int

    def __post_init__(self):
        t = self.tree
        if t.degree(self.root) != 1:
            raise GraphError("shrub root must be a leaf")
        support = t.support()
        if t.m != len(support) - 1:
            raise GraphError("shrub must be a tree")

    @property
    def root_edge(self):
        return edge(self.root, self.tree.adj[self.root][0])

    @property
    def top(self) -> int:
        """The root's only neighbor."""
        return self.tree.adj[self.root][0]

    def vertices(self) -> set[int]:
        return set(self.tree.support())


def shrubs_at(t: Graph, u: int) -> list[Shrub]:
    out = []
    for v in t.adj[u]:
        edges = [edge(u, v)]
        seen = {u, v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in t.adj[x]:
                if y not in seen:
                    seen.add(y)
                    edges.append(edge(x, y))
                    stack.append(y)
        out.append(Shrub(restrict(t, edges), u))
    return out


def shrub_2aliec(shrub: Shrub) -> EdgeColoring:
    """Two colors, root edge colored 1, every other edge irregular.

    The root edge is made irregular as well whenever that is possible.
    """
    root, top = shrub.root, shrub.top
    forest = _treedp.PendantForest(shrub.tree.adj, 2)
    degrees = forest.degrees(top, root)
    if not degrees:
        raise SolverBug(f"no 2-aliec found for shrub rooted at {root}")
    d = min((x for x in degrees if x != 1), default=1)
    colors = {edge(root, top): 1}
    forest.realize(top, root, 0, d, colors)
    return EdgeColoring(shrub.tree, colors, 2)


@dataclass(frozen=True, eq=False)
class ShrubBasedColoring:
    tree: Graph
    center: int
    shrubs: tuple[Shrub, ...]
    parts: tuple[EdgeColoring, ...]
    coloring: EdgeColoring

    @property
    def degree(self) -> int:
        return len(self.shrubs)

    def a_values(self) -> list[int]:
        """Color-1 degree of each shrub's top vertex, in shrub order."""
        return [color_degree(self.coloring, s.top, 1) for s in self.shrubs]


def shrub_based_coloring(t: Graph, u: int) -> ShrubBasedColoring:
    if not is_tree(t):
        raise GraphError("shrub-based coloring needs a tree")
    if t.degree(u) == 0:
        raise GraphError(f"vertex {u} is isolated")
    shrubs = tuple(shrubs_at(t, u))
    parts = tuple(shrub_2aliec(s) for s in shrubs)
    return ShrubBasedColoring(t, u, shrubs, parts, sum_colorings(parts, t))


def a_sequence(sbc: ShrubBasedColoring) -> list[int]:
    return sorted(sbc.a_values(), reverse=True)


def find_inversion(sbc: ShrubBasedColoring) -> tuple[int, ...] | None:
    """First set of shrubs whose inversion fixes every edge at the center.

    Sets are ordered by size, then lexicographically. With ``s`` shrubs
    inverted the center has color-1 degree ``k - s`` and color-2 degree ``s``,
    so a shrub with a-value ``k - s`` must be inverted and one with a-value
    ``s`` must not; the remaining slots go to the lowest free indices.
    """
    a = sbc.a_values()
    k = len(a)
    for s in range(k + 1):
        forced_in = {i for i in range(k) if a[i] == k - s}
        forced_out = {i for i in range(k) if a[i] == s}
        if forced_in & forced_out or len(forced_in) > s or k - len(forced_out) < s:
            continue
        free = [i for i in range(k) if i not in forced_in and i not in forced_out]
        return tuple(sorted(forced_in | set(free[:s - len(forced_in)])))
    return None


def _invert(sbc: ShrubBasedColoring, chosen) -> EdgeColoring:
    parts = [permute_colors(p, SWAP) if i in chosen else p
             for i, p in enumerate(sbc.parts)]
    return sum_colorings(parts, sbc.tree)


def search_inversions(sbc: ShrubBasedColoring) -> EdgeColoring | None:
    chosen = find_inversion(sbc)
    if chosen is not None:
        return _invert(sbc, chosen)
    t, u = sbc.tree, sbc.center
    if t.degree(u) == t.max_degree() and classify(t).colorable:
        if RESISTANT.get(t.degree(u)) != a_sequence(sbc):
            raise SolverBug(f"inversion resistant with degree {t.degree(u)} "
                            f"and a-sequence {a_sequence(sbc)}")
    return None


def rainbow_3liec(sbc: ShrubBasedColoring, c_shrub: int | None = None) -> EdgeColoring:
    """Three-color the tree so that only the center sees all three colors.

    Color 3 replaces color 1 inside shrub ``c_shrub``; among the other shrubs
    one is inverted and the rest keep their coloring.
    """
    d = sbc.degree
    if d not in RESISTANT or find_inversion(sbc) is not None:
        raise NotApplicable("rainbow coloring needs an inversion-resistant "
                            "center of degree 3 or 4")
    a = sbc.a_values()
    picks = range(d) if c_shrub is None else [c_shrub]
    for ci in picks:
        if a[ci] == 1:
            continue
        others = [i for i in range(d) if i != ci]
        for inv in others:
            kept = [i for i in others if i != inv]
            if a[inv] != 1 and all(a[i] != len(kept) for i in kept):
                parts = []
                for i, p in enumerate(sbc.parts):
                    if i == ci:
                        p = permute_colors(EdgeColoring(p.graph, p.colors, 3), {1: 3, 3: 1})
                    elif i == inv:
                        p = permute_colors(p, SWAP)
                    parts.append(p)
                return sum_colorings(parts, sbc.tree)
    raise NotApplicable(f"no rainbow coloring with color 3 in shrub {c_shrub}")


def _max_degree_vertices(t: Graph) -> list[int]:
    delta = t.max_degree()
    return [v for v in range(t.n) if t.degree(v) == delta]


def _check_colorable_tree(t: Graph) -> None:
    if not is_tree(t):
        raise GraphError("input is not a tree")
    klass = classify(t)
    if not klass.colorable:
        raise NonColorableError(klass)


def tree_liec(t: Graph) -> EdgeColoring:
    _check_colorable_tree(t)
    if t.m == 0:
        return EdgeColoring(t, {}, 0)
    sbc = shrub_based_coloring(t, _max_degree_vertices(t)[0])
    col = search_inversions(sbc)
    if col is None:
        col = rainbow_3liec(sbc)
    col = compact_colors(col)
    if t.max_degree() >= 5 and col.k > 2:
        raise SolverBug("tree with max degree >= 5 got three colors")
    return col


def tree_liec_avoiding(t: Graph, avoid) -> EdgeColoring:
    """Like :func:`tree_liec`, but color 3 never touches a vertex of ``avoid``.

    ``avoid`` must be independent. The rainbow center is taken outside
    ``avoid`` and color 3 is routed to a shrub free of ``avoid``.
    """
    _check_colorable_tree(t)
    avoid = set(avoid)
    if any(u in avoid and v in avoid for u, v in t.edges):
        raise GraphError("vertices to avoid must be independent")
    if t.m == 0:
        return EdgeColoring(t, {}, 0)
    tops = _max_degree_vertices(t)
    tops.sort(key=lambda v: (v in avoid, v))
    for z in tops:
        sbc = shrub_based_coloring(t, z)
        col = search_inversions(sbc)
        if col is not None:
            return compact_colors(col)
        if z in avoid:
            continue
        for ci, s in enumerate(sbc.shrubs):
            if (s.vertices() - {z}).isdisjoint(avoid):
                try:
                    return rainbow_3liec(sbc, ci)
                except NotApplicable:
                    continue
    raise NotApplicable("could not keep color 3 away from the given vertices")

