"""Exact k-color locally irregular colorings of pendant trees.

Below a vertex all colors are interchangeable, so the subtree hanging from
``v`` (through its parent edge) is summarized by the set of values the degree
of ``v`` in the parent-edge color can take in some coloring that is locally
irregular everywhere below the parent edge. A child with degree set ``D`` can
take color ``c`` at its parent unless ``D == {n_c}``, where ``n_c`` is the
parent's final ``c``-degree. Whether the children can be distributed over the
colors with prescribed counts is a b-matching question, decided by Hall's
condition over color subsets.

Colors are 0-based inside this module.
"""
from __future__ import annotations

from collections import Counter

from .errors import SolverBug
from .graph import edge


def count_vectors(total: int, parts: int, nonincreasing: bool = False, cap=None):
    """All ``parts``-tuples of non-negative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if cap is None or total <= cap:
            yield (total,)
        return
    top = total if cap is None else min(total, cap)
    for first in range(top, -1, -1):
        nxt_cap = first if nonincreasing else None
        for rest in count_vectors(total - first, parts - 1, nonincreasing, nxt_cap):
            yield (first,) + rest


def hall_ok(groups: Counter, caps, k: int) -> bool:
    """Can children (grouped by allowed-color bitmask) fill ``caps`` exactly?"""
    if groups.get(0):
        return False
    if sum(groups.values()) != sum(caps):
        return False
    full = (1 << k) - 1
    for q in range(1, full):
        need = sum(cnt for mask, cnt in groups.items() if cnt and mask & ~q & full == 0)
        if need > sum(caps[c] for c in range(k) if q >> c & 1):
            return False
    return True


def allowed_mask(dset, n, k: int) -> int:
    mask = 0
    for c in range(k):
        if any(d != n[c] for d in dset):
            mask |= 1 << c
    return mask


def split_ok(dsets: Counter, n, m, k: int) -> bool:
    groups = Counter()
    for dset, cnt in dsets.items():
        groups[allowed_mask(dset, n, k)] += cnt
    return hall_ok(groups, m, k)


def assign_children(children, dsets, n, m, k: int) -> dict:
    """Greedy color choice per child, keeping the rest Hall-feasible."""
    masks = [allowed_mask(dsets[ch], n, k) for ch in children]
    groups = Counter(masks)
    caps = list(m)
    out = {}
    for ch, mask in zip(children, masks):
        groups[mask] -= 1
        for c in range(k):
            if mask >> c & 1 and caps[c]:
                caps[c] -= 1
                if hall_ok(groups, caps, k):
                    out[ch] = c
                    break
                caps[c] += 1
        else:
            raise SolverBug("child assignment failed after a feasible split")
    return out


def fixed_splits(dsets: Counter, fixed, k: int):
    """Yield ``(n, m)`` for every feasible split given extra fixed edges.

    ``fixed[c]`` edges of color ``c`` at the vertex are already decided; ``m``
    counts children per color and ``n = m + fixed`` is the final color degree.
    """
    r = sum(dsets.values())
    for m in count_vectors(r, k):
        n = tuple(a + b for a, b in zip(m, fixed))
        if split_ok(dsets, n, m, k):
            yield n, m


class PendantForest:
    """Degree sets and realizations for subtrees of an (otherwise arbitrary) graph.

    ``degrees(v, parent)`` assumes the part of the graph reached from ``v``
    without crossing ``parent`` is a tree.
    """

    def __init__(self, adj, k: int):
        self.adj = adj
        self.k = k
        self._deg: dict[tuple[int, int], dict[int, tuple]] = {}

    def children(self, v: int, parent: int) -> list[int]:
        return [w for w in self.adj[v] if w != parent]

    def degrees(self, v: int, parent: int) -> dict[int, tuple]:
        """Map each achievable parent-color degree of ``v`` to a child split.

        The split is normalized so that color 0 is the parent-edge color.
        """
        if (v, parent) in self._deg:
            return self._deg[v, parent]
        order = []
        stack = [(v, parent)]
        while stack:
            x, p = stack.pop()
            if (x, p) in self._deg:
                continue
            order.append((x, p))
            stack.extend((w, x) for w in self.children(x, p))
        for x, p in reversed(order):
            if (x, p) not in self._deg:
                self._deg[x, p] = self._vertex(x, p)
        return self._deg[v, parent]

    def _vertex(self, x: int, p: int) -> dict[int, tuple]:
        k = self.k
        dsets = Counter(frozenset(self._deg[w, x]) for w in self.children(x, p))
        r = sum(dsets.values())
        out = {}
        if dsets.get(frozenset()):
            return out
        for m0 in range(r + 1):
            for rest in count_vectors(r - m0, k - 1, nonincreasing=True):
                m = (m0,) + rest
                n = (m0 + 1,) + rest
                if split_ok(dsets, n, m, k):
                    out[m0 + 1] = m
                    break
        return out

    def realize(self, v: int, parent: int, color: int, degree: int, out: dict) -> None:
        """Color the subtree below ``v`` so that ``v`` has ``degree`` edges of ``color``.

        Writes 1-based colors into ``out`` for every edge below ``v`` (the
        parent edge itself is the caller's business).
        """
        k = self.k
        stack = [(v, parent, color, degree)]
        while stack:
            x, p, c, d = stack.pop()
            split = self._deg[x, p][d]
            perm = list(range(k))
            perm[0], perm[c] = perm[c], perm[0]
            m = [0] * k
            for i, cnt in enumerate(split):
                m[perm[i]] = cnt
            n = list(m)
            n[c] += 1
            self._place(x, p, n, m, out, stack)

    def realize_with(self, x: int, excluded, n, m, out: dict) -> None:
        """Color the pendant children of ``x`` for a precomputed split ``(n, m)``."""
        stack = []
        self._place(x, excluded, n, m, out, stack)
        while stack:
            y, p, c, d = stack.pop()
            self.realize(y, p, c, d, out)

    def _place(self, x, excluded, n, m, out, stack) -> None:
        if isinstance(excluded, int):
            kids = self.children(x, excluded)
        else:
            kids = [w for w in self.adj[x] if w not in excluded]
        parents = {w: x for w in kids}
        dsets = {w: frozenset(self.degrees(w, parents[w])) for w in kids}
        chosen = assign_children(kids, dsets, n, m, self.k)
        for w in kids:
            c = chosen[w]
            d = min(d for d in dsets[w] if d != n[c])
            out[edge(x, w)] = c + 1
            stack.append((w, x, c, d))
