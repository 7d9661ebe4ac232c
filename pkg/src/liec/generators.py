"""Seeded graph generators for test corpora and experiments.

Every generator owns a private ``random.Random(seed)``, so identical arguments
give identical edge lists.
"""
from __future__ import annotations

import heapq
import random

import networkx as nx

from .errors import GraphError
from .graph import Graph


def gen_path(length: int) -> Graph:
    return Graph(length + 1, [(i, i + 1) for i in range(length)])


def gen_cycle(length: int) -> Graph:
    if length < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph(length, [(i, (i + 1) % length) for i in range(length)])


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree, decoded from a Prüfer sequence."""
    if n < 1:
        raise GraphError("a tree needs at least one vertex")
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def gen_random_cactus(n: int, cycles: int, seed: int, max_cycle: int | None = None) -> Graph:
    """Connected cactus on ``n`` vertices with exactly ``cycles`` cycles.

    Grows from a single vertex by grafting, at uniformly chosen existing
    vertices, either a pendant edge or a new cycle of length >= 3. Vertex
    ids are shuffled at the end.
    """
    if n < 1 or cycles < 0 or n < 1 + 2 * cycles:
        raise GraphError(f"no connected cactus with n={n} and {cycles} cycles")
    if max_cycle is not None and max_cycle < 3 and cycles:
        raise GraphError("max_cycle must be at least 3")
    rng = random.Random(seed)
    spare = n - 1 - 2 * cycles
    lengths = [3] * cycles
    leaves = 0
    for _ in range(spare):
        open_cycles = [i for i in range(cycles) if max_cycle is None or lengths[i] < max_cycle]
        if open_cycles and rng.random() < 0.5:
            lengths[rng.choice(open_cycles)] += 1
        else:
            leaves += 1
    ops = ["leaf"] * leaves + lengths
    rng.shuffle(ops)
    edges = []
    size = 1
    for op in ops:
        at = rng.randrange(size)
        if op == "leaf":
            edges.append((at, size))
            size += 1
        else:
            ring = [at] + list(range(size, size + op - 1))
            edges += [(ring[i], ring[(i + 1) % op]) for i in range(op)]
            size += op - 1
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


def gen_random_grape(n: int, cycles: int, seed: int) -> Graph:
    """Like :func:`gen_random_cactus`, but every cycle goes through vertex 0."""
    if cycles < 1 or n < 1 + 2 * cycles:
        raise GraphError(f"no grape with n={n} and {cycles} cycles")
    rng = random.Random(seed)
    lengths = [3] * cycles
    spare = n - 1 - 2 * cycles
    edges = []
    size = 1
    for _ in range(spare):
        if rng.random() < 0.4:
            lengths[rng.randrange(cycles)] += 1
    for length in lengths:
        ring = [0] + list(range(size, size + length - 1))
        edges += [(ring[i], ring[(i + 1) % length]) for i in range(length)]
        size += length - 1
    while size < n:
        edges.append((rng.randrange(size), size))
        size += 1
    return Graph(n, edges)


def gen_T_member(seed: int, steps: int, max_len: int = 6, p_triangle: float = 0.5) -> Graph:
    """A member of the non-colorable triangle family.

    Starts from a triangle. Each step picks a triangle vertex of degree 2 and
    hangs either an even path there, or an odd path ending in a new triangle.
    When a single degree-2 triangle vertex is left, a triangle is forced so
    that later steps always have somewhere to attach.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if max_len < 2:
        raise ValueError("max_len must allow an even path")
    rng = random.Random(seed)
    edges = [(0, 1), (1, 2), (0, 2)]
    free = [0, 1, 2]
    size = 3
    odd = list(range(1, max_len + 1, 2))
    even = list(range(2, max_len + 1, 2))
    for _ in range(steps):
        at = free.pop(rng.randrange(len(free)))
        if not free or rng.random() < p_triangle:
            length = rng.choice(odd)
            path = [at] + list(range(size, size + length))
            size += length
            tip = path[-1]
            a, b = size, size + 1
            size += 2
            edges += list(zip(path, path[1:])) + [(tip, a), (a, b), (tip, b)]
            free += [a, b]
        else:
            length = rng.choice(even)
            path = [at] + list(range(size, size + length))
            size += length
            edges += list(zip(path, path[1:]))
    return Graph(size, edges)


def gen_bowtie() -> Graph:
    """The cactus that needs four colors: two bow-ties whose centers are joined.

    A bow-tie is two triangles sharing a vertex. Vertices 0 and 1 are the
    centers.
    """
    return Graph(10, [(0, 1), (0, 2), (0, 3), (2, 3), (0, 4), (0, 5), (4, 5),
                      (1, 6), (1, 7), (6, 7), (1, 8), (1, 9), (8, 9)])


def all_cacti(max_edges: int) -> list[Graph]:
    """Every connected cactus with 1..``max_edges`` edges, one per isomorphism class.

    Each cactus with an edge has a leaf block (a pendant edge or a cycle with
    one attachment vertex), so growing by leaf blocks from a single vertex
    reaches all of them. Output is sorted by edge count, then by edge list.
    """
    def add(store, g):
        bucket = store.setdefault(nx.weisfeiler_lehman_graph_hash(g, iterations=3), [])
        if not any(nx.is_isomorphic(g, h) for h in bucket):
            bucket.append(g)

    by_size = {0: {}}
    add(by_size[0], nx.empty_graph(1))
    for m in range(max_edges):
        for bucket in list(by_size.get(m, {}).values()):
            for g in bucket:
                n = g.number_of_nodes()
                for v in range(n):
                    for length in [1] + list(range(3, max_edges - m + 1)):
                        if m + length > max_edges:
                            break
                        h = g.copy()
                        ring = [v] + list(range(n, n + max(length - 1, 1)))
                        if length == 1:
                            h.add_edge(v, n)
                        else:
                            nx.add_cycle(h, ring)
                        add(by_size.setdefault(m + length, {}), h)
    out = []
    for m in range(1, max_edges + 1):
        graphs = [Graph(g.number_of_nodes(), g.edges())
                  for bucket in by_size.get(m, {}).values() for g in bucket]
        out += sorted(graphs, key=lambda g: g.edges)
    return out
