"""Exhaustive ground truth for the locally irregular chromatic index.

Plain backtracking over edge colors. Only meant for small graphs; it exists
to check the constructive solvers, never to feed them.
"""
from __future__ import annotations

from collections import deque

from .coloring import EdgeColoring
from .errors import LiecError
from .graph import Graph

DEFAULT_MAX_EDGES = 13


class OracleLimit(LiecError):
    pass


def _edge_order(g: Graph) -> list:
    pos = {}
    for s in range(g.n):
        if s in pos:
            continue
        pos[s] = len(pos)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in pos:
                    pos[y] = len(pos)
                    queue.append(y)
    return sorted(g.edges, key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])))


def find_liec(g: Graph, k: int, step_budget: int | None = None) -> EdgeColoring | None:
    """Some liec with at most ``k`` colors, or None if there is none."""
    edges = _edge_order(g)
    m = len(edges)
    last = [-1] * g.n
    for i, (u, v) in enumerate(edges):
        last[u] = last[v] = i
    # edges that become checkable once edge i is colored
    ready = [[] for _ in range(m)]
    for i, (u, v) in enumerate(edges):
        ready[max(last[u], last[v])].append(i)
    deg = [[0] * (k + 1) for _ in range(g.n)]
    col = [0] * m
    steps = 0

    # iterative DFS: frame = (edge index, next color to try, colors used before)
    stack = [[0, 1, 0]] if m else []
    if not m:
        return EdgeColoring(g, {}, 0)
    while stack:
        frame = stack[-1]
        i, c, used = frame
        u, v = edges[i]
        if col[i]:
            deg[u][col[i]] -= 1
            deg[v][col[i]] -= 1
            col[i] = 0
        if c > min(used + 1, k):
            stack.pop()
            continue
        frame[1] = c + 1
        steps += 1
        if step_budget is not None and steps > step_budget:
            raise OracleLimit(f"step budget {step_budget} exhausted")
        col[i] = c
        deg[u][c] += 1
        deg[v][c] += 1
        if all(deg[edges[j][0]][col[j]] != deg[edges[j][1]][col[j]] for j in ready[i]):
            if i + 1 == m:
                return EdgeColoring(g, {edges[j]: col[j] for j in range(m)}, k)
            stack.append([i + 1, 1, max(used, c)])
    return None


def _check_budget(g: Graph, max_edges: int, override: bool) -> None:
    if g.m > max_edges and not override:
        raise OracleLimit(f"{g.m} edges exceed the oracle budget of {max_edges}")


def exact_with_witness(g: Graph, kmax: int, max_edges: int = DEFAULT_MAX_EDGES,
                       override: bool = False, step_budget: int | None = None):
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    _check_budget(g, max_edges, override)
    if g.m == 0:
        return 0, EdgeColoring(g, {}, 0)
    for k in range(1, kmax + 1):
        found = find_liec(g, k, step_budget)
        if found is not None:
            return k, found
    return None, None


def exact_chi_irr(g: Graph, kmax: int, max_edges: int = DEFAULT_MAX_EDGES,
                  override: bool = False, step_budget: int | None = None) -> int | None:
    return exact_with_witness(g, kmax, max_edges, override, step_budget)[0]


def is_colorable_exhaustive(g: Graph, kmax: int, max_edges: int = DEFAULT_MAX_EDGES,
                            override: bool = False) -> bool:
    return exact_chi_irr(g, kmax, max_edges, override) is not None
