"""Which connected graphs admit a locally irregular edge coloring.

A connected graph is non-colorable exactly when it is an odd path, an odd
cycle, or a member of the triangle family: subcubic cacti whose cycles are
vertex-disjoint triangles, joined by odd paths, with only even pendant paths
hanging at triangle vertices of degree 3.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, decompose_blocks, edge, is_cactus, require_connected


class Tag(enum.Enum):
    COLORABLE = "Colorable"
    ODD_PATH = "OddPath"
    ODD_CYCLE = "OddCycle"
    T_FAMILY = "TFamily"


@dataclass(frozen=True)
class TWitness:
    """Triangles plus the connector and pendant paths between/under them.

    Paths are vertex tuples. Connectors run between two triangle vertices;
    pendants start at a triangle vertex and end at a leaf.
    """

    triangles: tuple[tuple[int, int, int], ...]
    connectors: tuple[tuple[int, ...], ...]
    pendants: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph) -> bool:
        if not self.triangles or g.max_degree() > 3:
            return False
        tri_vertices = [v for t in self.triangles for v in t]
        if len(set(tri_vertices)) != len(tri_vertices):
            return False
        tv = set(tri_vertices)
        covered = []
        for a, b, c in self.triangles:
            covered += [edge(a, b), edge(b, c), edge(a, c)]
        for path in self.connectors:
            if (len(path) - 1) % 2 != 1 or path[0] not in tv or path[-1] not in tv:
                return False
            covered += [edge(x, y) for x, y in zip(path, path[1:])]
        for path in self.pendants:
            length = len(path) - 1
            if length <= 0 or length % 2 or path[0] not in tv or g.degree(path[-1]) != 1:
                return False
            covered += [edge(x, y) for x, y in zip(path, path[1:])]
        return len(covered) == g.m and set(covered) == g.edge_set


@dataclass(frozen=True)
class ColorabilityClass:
    tag: Tag
    witness: TWitness | None = None

    @property
    def colorable(self) -> bool:
        return self.tag is Tag.COLORABLE


def t_family_witness(g: Graph) -> TWitness | None:
    """Structural decomposition of ``g`` if it belongs to the triangle family."""
    require_connected(g)
    if g.m == 0 or g.max_degree() > 3 or not is_cactus(g):
        return None
    bt = decompose_blocks(g)
    triangles = []
    for b, vs in zip(bt.blocks, bt.block_vertices):
        if len(b) == 1:
            continue
        if len(b) != 3:
            return None
        triangles.append(tuple(sorted(vs)))
    if not triangles:
        return None
    owner = {}
    for i, t in enumerate(triangles):
        for v in t:
            if v in owner:
                return None
            owner[v] = i
    for v in range(g.n):
        if v not in owner and g.degree(v) > 2:
            return None

    tri_edges = {edge(t[i], t[j]) for t in triangles for i, j in ((0, 1), (1, 2), (0, 2))}
    connectors, pendants = [], []
    for start in sorted(owner):
        for nxt in g.adj[start]:
            if edge(start, nxt) in tri_edges:
                continue
            path = [start, nxt]
            while path[-1] not in owner and g.degree(path[-1]) == 2:
                a, b = g.adj[path[-1]]
                path.append(b if a == path[-2] else a)
            length = len(path) - 1
            if path[-1] in owner:
                if path[-1] == start or owner[path[-1]] == owner[start]:
                    return None
                if length % 2 == 0:
                    return None
                if start < path[-1]:
                    connectors.append(tuple(path))
            else:
                if length % 2:
                    return None
                pendants.append(tuple(path))
    return TWitness(tuple(triangles), tuple(connectors), tuple(pendants))


def recognize_T_family(g: Graph) -> bool:
    return t_family_witness(g) is not None


def is_path_graph(g: Graph) -> bool:
    return g.m == g.n - 1 and g.max_degree() <= 2


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and all(len(a) == 2 for a in g.adj)


def classify(g: Graph) -> ColorabilityClass:
    require_connected(g)
    if is_path_graph(g):
        return ColorabilityClass(Tag.ODD_PATH if g.m % 2 else Tag.COLORABLE)
    if is_cycle_graph(g):
        return ColorabilityClass(Tag.ODD_CYCLE if g.m % 2 else Tag.COLORABLE)
    w = t_family_witness(g)
    if w is not None:
        return ColorabilityClass(Tag.T_FAMILY, w)
    return ColorabilityClass(Tag.COLORABLE)


def is_colorable(g: Graph) -> bool:
    return classify(g).colorable


def format_class(klass: ColorabilityClass, labels=None) -> str:
    lab = (lambda vs: " ".join(str(labels[v]) for v in vs)) if labels else (
        lambda vs: " ".join(map(str, vs)))
    lines = [klass.tag.value]
    w = klass.witness
    if w is not None:
        lines += ["triangle " + lab(t) for t in w.triangles]
        lines += ["connector " + lab(p) for p in w.connectors]
        lines += ["pendant " + lab(p) for p in w.pendants]
    return "\n".join(lines)

