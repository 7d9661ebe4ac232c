"""Colorings of connected graphs with exactly one cycle.

Pendant trees are summarized by :mod:`liec._treedp`; the cycle is then
handled by a transfer pass that carries, edge to edge, the color of the
current cycle edge and the color degree of its tail. The pass is exact for a
fixed number of colors, so trying k = 1, 2, 3 in turn returns an optimal
coloring. A colorable unicyclic graph never needs more than three.
"""
from __future__ import annotations

from collections import Counter

from ._treedp import PendantForest, fixed_splits
from .classify import classify
from .coloring import EdgeColoring, compact_colors
from .errors import GraphError, NonColorableError, SolverBug
from .graph import Graph, edge, require_connected


def cycle_order(g: Graph) -> list[int]:
    """Cycle vertices in walking order, starting from the smallest id.

    The walk leaves the start vertex toward its smaller cycle neighbor.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    leaves = [v for v in range(g.n) if deg[v] <= 1]
    while leaves:
        v = leaves.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    on_cycle = {v for v in range(g.n) if alive[v]}
    if not on_cycle:
        raise GraphError("graph has no cycle")
    start = min(on_cycle)
    order = [start]
    prev, cur = start, min(w for w in g.adj[start] if w in on_cycle)
    while cur != start:
        order.append(cur)
        prev, cur = cur, next(w for w in g.adj[cur] if w in on_cycle and w != prev)
    return order


def liec_with_k(g: Graph, k: int, cycle: list[int] | None = None) -> dict | None:
    """A k-liec of the unicyclic graph ``g`` as an edge->color dict, or None."""
    cycle = cycle_order(g) if cycle is None else cycle
    forest = PendantForest(g.adj, k)
    on_cycle = set(cycle)
    size = len(cycle)
    dsets = []
    for c in cycle:
        kids = [w for w in g.adj[c] if w not in on_cycle]
        ds = Counter(frozenset(forest.degrees(w, c)) for w in kids)
        if ds.get(frozenset()):
            return None
        dsets.append(ds)

    cache = {}

    def options(j, left, right):
        key = (j, left, right)
        if key not in cache:
            fixed = [0] * k
            fixed[left] += 1
            fixed[right] += 1
            found = {}
            for n, m in fixed_splits(dsets[j], fixed, k):
                found.setdefault((n[left], n[right]), (n, m))
            cache[key] = found
        return cache[key]

    # state: (color of closing edge, its degree at cycle[0], color of current edge, its degree at tail)
    first = 0
    layer = {}
    for right in range(min(k, 2)):
        for (x, y), nm in options(0, first, right).items():
            layer.setdefault((first, x, right, y), (None, (first, right) + nm))
    layers = [layer]
    for j in range(1, size):
        last = j == size - 1
        nxt = {}
        for state in layers[-1]:
            a0, x0, col, deg = state
            for right in range(k):
                if last and right != a0:
                    continue
                for (x, y), nm in options(j, col, right).items():
                    if x == deg or (last and y == x0):
                        continue
                    nxt.setdefault((a0, x0, right, y), (state, (col, right) + nm))
        if not nxt:
            return None
        layers.append(nxt)

    colors = {}
    state = next(iter(layers[-1]))
    for j in range(size - 1, -1, -1):
        prev, (left, right, n, m) = layers[j][state]
        c = cycle[j]
        colors[edge(c, cycle[(j + 1) % size])] = right + 1
        forest.realize_with(c, {cycle[j - 1], cycle[(j + 1) % size]}, list(n), list(m), colors)
        state = prev
    return colors


def unicyclic_liec(g: Graph) -> EdgeColoring:
    require_connected(g)
    if g.m != g.n:
        raise GraphError("graph is not unicyclic")
    klass = classify(g)
    if not klass.colorable:
        raise NonColorableError(klass)
    cycle = cycle_order(g)
    for k in (1, 2, 3):
        colors = liec_with_k(g, k, cycle)
        if colors is not None:
            return compact_colors(EdgeColoring(g, colors, k))
    raise SolverBug("colorable unicyclic graph without a 3-liec")
