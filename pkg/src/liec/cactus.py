"""Four-color locally irregular colorings of colorable cacti.

The solver peels end-grapes off the cactus until a tree, a unicyclic graph
or a grape is left, colors that directly, and then glues the peeled parts
back in reverse order. Each peel records a small closure that takes a
coloring of the smaller graph and returns one of the larger graph, renaming
colors at the attachment vertex where needed.

An end-grape rooted at ``u`` is a set of berries hanging from ``u``: every
berry is a tree in which ``u`` is a leaf, or a unicyclic graph whose cycle
passes through ``u``. Apart from ``u`` no vertex of the end-grape touches the
rest of the graph, and ``u`` meets the rest through one or two exit edges.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .classify import TWitness, classify, recognize_T_family, t_family_witness
from .coloring import EdgeColoring, compact_colors, permute_colors, verify_liec
from .errors import GraphError, NonColorableError, NotApplicable, SolverBug
from .graph import (BlockTree, Edge, Graph, compact, cycle_rank, decompose_blocks, edge,
                    edge_components, is_cactus, require_connected, restrict,
                    with_edges, without_edges)
from .trees import tree_liec, tree_liec_avoiding
from .unicyclic import unicyclic_liec

Glue = Callable[[dict], dict]


@dataclass(frozen=True)
class Berry:
    """``v`` (and ``w`` for a cyclic berry) are the root's neighbors in the berry."""

    v: int
    w: int | None
    edges: frozenset

    @property
    def cyclic(self) -> bool:
        return self.w is not None


@dataclass(frozen=True)
class EndGrape:
    root: int
    cyclic_berries: tuple[Berry, ...]
    acyclic_berries: tuple[Berry, ...]
    exit_edges: tuple[Edge, ...]

    @property
    def p(self) -> int:
        return len(self.cyclic_berries)

    @property
    def q(self) -> int:
        return len(self.acyclic_berries)

    @property
    def E_u(self) -> tuple[Edge, ...]:
        return tuple(edge(self.root, b.v) for b in self.cyclic_berries)

    @property
    def exit_neighbors(self) -> tuple[int, ...]:
        return tuple(a if b == self.root else b for a, b in self.exit_edges)

    @property
    def grape_edges(self) -> frozenset:
        return frozenset().union(*(b.edges for b in self.cyclic_berries + self.acyclic_berries))

    def validate(self, g: Graph) -> bool:
        u = self.root
        if self.p < 1 or len(self.exit_edges) not in (1, 2):
            return False
        grape = restrict(g, self.grape_edges)
        rest = without_edges(g, self.grape_edges)
        if any(x != u and rest.degree(x) for x in grape.support()):
            return False
        if sorted(self.exit_edges) != sorted(edge(u, w) for w in rest.adj[u]):
            return False
        for b in self.cyclic_berries + self.acyclic_berries:
            sub, ids = compact(g, b.edges)
            nbrs = sorted(w for w in grape.adj[u] if edge(u, w) in b.edges)
            expected = [b.v, b.w] if b.cyclic else [b.v]
            if nbrs != expected or not _connected_without(sub, ids.index(u)):
                return False
            if sub.m != sub.n - (0 if b.cyclic else 1):
                return False
        if len(self.exit_edges) == 2:
            a, b = self.exit_neighbors
            if b not in _reach(rest, a, u):
                return False
        return True


def _reach(g: Graph, start: int, blocked: int) -> set[int]:
    seen = {start, blocked}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    seen.discard(blocked)
    return seen


def _connected_without(g: Graph, u: int) -> bool:
    others = [x for x in range(g.n) if x != u]
    return not others or len(_reach(g, others[0], u)) == len(others)


def _end_grape_at(g: Graph, u: int, exit_nbrs) -> EndGrape | None:
    """Read off the end-grape at ``u`` whose exit edges lead to ``exit_nbrs``."""
    exit_nbrs = sorted(exit_nbrs)
    if len(exit_nbrs) not in (1, 2):
        return None
    outside = _reach(g, exit_nbrs[0], u)
    if len(exit_nbrs) == 2 and exit_nbrs[1] not in outside:
        return None
    cyclic, acyclic = [], []
    done = set()
    for s in g.adj[u]:
        if s in done or s in exit_nbrs:
            continue
        part = _reach(g, s, u)
        if part & outside:
            return None
        done |= part
        edges = frozenset(edge(x, y) for x in part for y in g.adj[x] if y in part or y == u)
        at_u = sorted(x for x in part if g.has_edge(u, x))
        if len(at_u) == 1 and len(edges) == len(part):
            acyclic.append(Berry(at_u[0], None, edges))
        elif len(at_u) == 2 and len(edges) == len(part) + 1:
            cyclic.append(Berry(at_u[0], at_u[1], edges))
        else:
            return None
    if not cyclic:
        return None
    return EndGrape(u, tuple(cyclic), tuple(acyclic), tuple(edge(u, w) for w in exit_nbrs))


def _cycle_vertex_sets(g: Graph) -> list[frozenset]:
    bt = decompose_blocks(g)
    return [bt.block_vertices[i] for i in bt.cycle_indices()]


def _common_cycle_vertex(bt: BlockTree) -> int | None:
    cycles = [bt.block_vertices[i] for i in bt.cycle_indices()]
    common = frozenset.intersection(*cycles) if cycles else frozenset()
    return min(common) if common else None


def grape_root(g: Graph) -> int | None:
    """Smallest vertex shared by every cycle, or None if ``g`` is not a grape."""
    if not is_cactus(g):
        return None
    return _common_cycle_vertex(decompose_blocks(g))


def is_grape(g: Graph) -> bool:
    return grape_root(g) is not None


def find_end_grape(g: Graph, bt: BlockTree | None = None) -> EndGrape:
    """End-grape at a deepest cut vertex of the block-cut tree rooted at block 0.

    ``bt`` may be passed when the caller already decomposed ``g``.
    """
    if bt is None:
        require_connected(g)
        if not is_cactus(g):
            raise GraphError("graph is not a cactus")
        bt = decompose_blocks(g)
    if len(bt.cycle_indices()) < 2:
        raise GraphError("end-grapes need at least two cycles")
    if _common_cycle_vertex(bt) is not None:
        raise NotApplicable("graph is itself a grape")
    nb = len(bt.blocks)
    parent_cut = [None] * nb
    order = [0]
    cut_parent, cut_depth = {}, {}
    depth = [0] * nb
    for b in order:
        for c in bt.block_cuts[b]:
            if c == parent_cut[b]:
                continue
            cut_parent[c] = b
            cut_depth[c] = depth[b] + 1
            for b2 in bt.cut_blocks[c]:
                if b2 != b:
                    parent_cut[b2] = c
                    depth[b2] = depth[b] + 2
                    order.append(b2)

    def kids(c):
        return [b for b in bt.cut_blocks[c] if b != cut_parent[c]]

    below = [0] * nb
    for b in reversed(order):
        below[b] = int(bt.is_cycle(b)) + sum(
            below[b2] for c in bt.block_cuts[b] if c != parent_cut[b] for b2 in kids(c))
    best = None
    for c in cut_parent:
        ks = kids(c)
        if sum(below[b] for b in ks) and all(below[b] == bt.is_cycle(b) for b in ks):
            key = (-cut_depth[c], c)
            best = key if best is None or key < best else best
    if best is None:
        raise SolverBug("cactus with two cycles but no end-grape")
    u = best[1]
    pb = cut_parent[u]
    eg = _end_grape_at(g, u, [w for w in g.adj[u] if w in bt.block_vertices[pb]])
    if eg is None or not eg.validate(g):
        raise SolverBug(f"end-grape at {u} fails its invariants")
    return eg


def end_grapes(g: Graph) -> list[EndGrape]:
    """Every end-grape of ``g``, one per (root, exit block) pair."""
    bt = decompose_blocks(g)
    out = []
    for u in sorted(bt.cut_vertices):
        for b in bt.cut_blocks[u]:
            eg = _end_grape_at(g, u, [w for w in g.adj[u] if w in bt.block_vertices[b]])
            if eg is not None:
                out.append(eg)
    return out


def _tree_colors(g: Graph, edges, avoid=()) -> dict:
    """Color the tree spanned by ``edges`` and return colors keyed by ``g``'s ids."""
    t, ids = compact(g, edges)
    if avoid:
        index = {v: i for i, v in enumerate(ids)}
        try:
            col = tree_liec_avoiding(t, {index[x] for x in avoid if x in index})
        except NotApplicable as exc:
            raise SolverBug(f"color 3 cannot avoid the attachment vertices: {exc}") from exc
    else:
        col = tree_liec(t)
    return {edge(ids[a], ids[b]): c for (a, b), c in col.colors.items()}


def _odd_side_neighbor(t: Graph, u: int) -> int:
    """For a path ``t`` of odd length, the neighbor of ``u`` that leaves even pieces."""
    if t.degree(u) == 1:
        return t.adj[u][0]
    for z in t.adj[u]:
        length, prev, cur = 1, u, z
        while t.degree(cur) == 2:
            prev, cur = cur, next(y for y in t.adj[cur] if y != prev)
            length += 1
        if length % 2:
            return z
    raise SolverBug("path has no odd side")


def _split_odd_path(g: Graph, t_edges, u: int, star) -> dict:
    """Even pieces of the odd path ``t_edges`` in colors 1-2, ``star`` plus the cut edge in 3."""
    t = restrict(g, t_edges)
    z = _odd_side_neighbor(t, u)
    colors = {}
    for comp in edge_components(without_edges(t, [edge(u, z)])):
        colors.update(_tree_colors(g, comp))
    for e in list(star) + [edge(u, z)]:
        colors[e] = 3
    return colors


def grape_liec(g: Graph) -> EdgeColoring:
    require_connected(g)
    u = grape_root(g)
    if u is None or cycle_rank(g) < 2:
        raise NotApplicable("grape coloring needs at least two cycles through one vertex")
    klass = classify(g)
    if not klass.colorable:
        raise NonColorableError(klass)
    e_u = _grape_e_u(g, u)
    t_edges = g.edge_set - set(e_u)
    t, _ = compact(g, t_edges)
    if classify(t).colorable:
        colors = _tree_colors(g, t_edges)
        top = max(colors.values(), default=0)
        colors.update({e: top + 1 for e in e_u})
    else:
        colors = _split_odd_path(g, t_edges, u, e_u)
    return EdgeColoring(g, colors)


def _grape_e_u(g: Graph, u: int) -> list[Edge]:
    out = []
    for cyc in _cycle_vertex_sets(g):
        out.append(edge(u, min(w for w in g.adj[u] if w in cyc)))
    return out


# ---------------------------------------------------------------- gluing

def _rename(sub: Graph, colors: dict, ok) -> dict:
    """Apply the lexicographically first permutation of 1..4 accepted by ``ok``."""
    base = EdgeColoring(sub, colors, 4)
    for perm in itertools.permutations(range(1, 5)):
        mapping = dict(zip(range(1, 5), perm))
        if ok(mapping):
            return dict(permute_colors(base, mapping).colors)
    raise SolverBug("no color renaming satisfies the gluing constraints")


def _colors_at(sub: Graph, colors: dict, v: int) -> set[int]:
    return {colors[edge(v, w)] for w in sub.adj[v]}


def _degree_in(sub: Graph, colors: dict, v: int, c: int) -> int:
    return sum(colors[edge(v, w)] == c for w in sub.adj[v])


@dataclass(frozen=True)
class BerryRecipe:
    """Data to put back a triangular berry removed by :func:`reduce_noncolorable_berry`.

    The removed tree is the path ``root - v - w`` plus the even path
    ``pendant`` hanging at ``v`` (``pendant[0] == v``).
    """

    root: int
    v: int
    w: int
    pendant: tuple[int, ...]

    @property
    def tree_edges(self) -> list[Edge]:
        path = [edge(self.root, self.v), edge(self.v, self.w)]
        return path + [edge(a, b) for a, b in zip(self.pendant, self.pendant[1:])]

    def glue(self, colors: dict) -> dict:
        ends = (self.root, self.w)
        seen = {c for e, c in colors.items() if e[0] in ends or e[1] in ends}
        c = min(set(range(1, 6)) - seen)
        if c > 4:
            raise SolverBug("no free color for the removed berry")
        b = 1 if c != 1 else 2
        out = dict(colors)
        out[edge(self.root, self.v)] = out[edge(self.v, self.w)] = c
        # pairs of pendant edges alternate, starting with c at v
        for i, (x, y) in enumerate(zip(self.pendant, self.pendant[1:])):
            out[edge(x, y)] = c if (i // 2) % 2 == 0 else b
        return out


def _pendant_path(g: Graph, start: int, exclude) -> tuple[int, ...]:
    path = [start]
    nxt = [y for y in g.adj[start] if y not in exclude]
    if not nxt:
        return ()
    if len(nxt) > 1:
        raise NotApplicable(f"vertex {start} has more than one pendant path")
    prev, cur = start, nxt[0]
    path.append(cur)
    while g.degree(cur) == 2:
        prev, cur = cur, next(y for y in g.adj[cur] if y != prev)
        path.append(cur)
    if g.degree(cur) != 1:
        raise NotApplicable(f"path from {start} does not end in a leaf")
    return tuple(path)


def reduce_noncolorable_berry(g: Graph, eg: EndGrape):
    """Remove a lone non-colorable triangular berry, keeping a pendant path at its root.

    Returns the smaller graph (same vertex ids) and a :class:`BerryRecipe`.
    """
    if eg.p != 1 or eg.q or len(eg.exit_edges) != 1:
        raise NotApplicable("needs a single cyclic berry and one exit edge")
    berry = eg.cyclic_berries[0]
    r, v, w = eg.root, berry.v, berry.w
    if not g.has_edge(v, w):
        raise NotApplicable("berry cycle is not a triangle")
    sub, _ = compact(g, berry.edges)
    if not recognize_T_family(sub):
        raise NotApplicable("berry is colorable")
    recipe = BerryRecipe(r, v, w, _pendant_path(g, v, {r, w}))
    return without_edges(g, recipe.tree_edges), recipe


def _witness_in(region: Graph) -> TWitness:
    sub, ids = compact(region)
    wit = t_family_witness(sub)
    if wit is None:
        raise SolverBug("non-colorable region without a triangle-family witness")

    def back(seq):
        return tuple(tuple(ids[x] for x in item) for item in seq)
    return TWitness(back(wit.triangles), back(wit.connectors), back(wit.pendants))


def _berry_site(g: Graph, region: Graph) -> EndGrape:
    """A lone non-colorable triangular end-grape of ``g`` inside ``region``.

    ``region`` is a non-colorable subgraph; vertices where ``g`` has extra
    edges must stay outside the chosen triangle and its pendant paths.
    """
    touched = {x for x in region.support() if g.degree(x) != region.degree(x)}
    wit = _witness_in(region)
    paths = {}
    for path in wit.connectors:
        paths[path[0]] = ("connector", path)
        paths[path[-1]] = ("connector", path[::-1])
    for path in wit.pendants:
        paths[path[0]] = ("pendant", path)
    for tri in wit.triangles:
        if touched & set(tri):
            continue
        for r in sorted(tri):
            if r not in paths:
                continue
            v, w = sorted(set(tri) - {r})
            if all(x not in paths or (paths[x][0] == "pendant" and not touched & set(paths[x][1]))
                   for x in (v, w)):
                edges = {edge(r, v), edge(r, w), edge(v, w)}
                for x in (v, w):
                    if x in paths:
                        p = paths[x][1]
                        edges |= {edge(a, b) for a, b in zip(p, p[1:])}
                eg = EndGrape(r, (Berry(v, w, frozenset(edges)),), (),
                              (edge(r, paths[r][1][1]),))
                if not eg.validate(g):
                    raise SolverBug(f"berry at {r} fails the end-grape invariants")
                return eg
    raise SolverBug("no removable triangular berry in a non-colorable region")


def _via_berry(g: Graph, region: Graph):
    return _reduce_with_recipe(g, _berry_site(g, region))


def _reduce_with_recipe(g: Graph, eg: EndGrape):
    smaller, recipe = reduce_noncolorable_berry(g, eg)
    return smaller, recipe.glue


def _peel(g: Graph, bt: BlockTree) -> tuple[Graph, Glue]:
    """One reduction step: a smaller graph and the glue that undoes it."""
    eg = find_end_grape(g, bt)
    u = eg.root
    g0 = without_edges(g, eg.grape_edges)
    if not classify(compact(g0)[0]).colorable:
        return _via_berry(g, g0)

    e_u = list(eg.E_u)
    t_edges = eg.grape_edges - set(e_u)
    if not classify(compact(g, t_edges)[0]).colorable:
        part = _split_odd_path(g, t_edges, u, e_u)
        mine = {c for e, c in part.items() if u in e}

        def glue_odd(colors):
            at_u = _colors_at(g0, colors, u)
            out = _rename(g0, colors, lambda mp: not {mp[c] for c in at_u} & mine)
            out.update(part)
            return out
        return g0, glue_odd

    if eg.p >= 2:
        part = _tree_colors(g, t_edges, {u} | {b.v for b in eg.cyclic_berries})
        part.update({e: 3 for e in e_u})
        return g0, _glue_many(g0, eg, part)

    v1 = eg.cyclic_berries[0].v
    g0pp = with_edges(g0, [edge(u, v1)])
    if not classify(compact(g0pp)[0]).colorable:
        return _via_berry(g, g0pp)
    part = _tree_colors(g, t_edges, {u, v1})

    def glue_single(colors):
        at_u = _colors_at(g0pp, colors, u)
        if len(at_u) > 2:
            raise SolverBug(f"vertex {u} is {len(at_u)}-chromatic after adding its berry edge")
        out = _rename(g0pp, colors, lambda mp: {mp[c] for c in at_u} <= {3, 4})
        out.update(part)
        return out
    return g0pp, glue_single


def _glue_many(g0: Graph, eg: EndGrape, part: dict) -> Glue:
    u, p = eg.root, eg.p
    exits = eg.exit_neighbors

    def glue(colors):
        first = colors[edge(u, exits[0])]
        if len(exits) == 1 or colors[edge(u, exits[1])] == first:
            out = _rename(g0, colors, lambda mp: mp[first] == 4)
            out.update(part)
            return out
        u1, u2 = exits
        second = colors[edge(u, u2)]
        if _degree_in(g0, colors, u1, first) != p + 1:
            out = _rename(g0, colors, lambda mp: mp[first] == 3 and mp[second] == 4)
        elif _degree_in(g0, colors, u2, second) != p + 1:
            out = _rename(g0, colors, lambda mp: mp[second] == 3 and mp[first] == 4)
        else:
            out = _rename(g0, colors, lambda mp: mp[first] == 3 and mp[second] == 4)
            out.update(part)
            return _clash_repair(out, eg)
        out.update(part)
        return out
    return glue


def _clash_repair(colors: dict, eg: EndGrape) -> dict:
    """Both exits clash with color 3 at ``u``: move the first berry edge to color 4."""
    colors[edge(eg.root, eg.cyclic_berries[0].v)] = 4
    return colors


def cactus_liec(g: Graph) -> EdgeColoring:
    """A locally irregular coloring of a colorable cactus with at most four colors."""
    require_connected(g)
    if not is_cactus(g):
        raise GraphError("graph is not a cactus")
    klass = classify(g)
    if not klass.colorable:
        raise NonColorableError(klass)
    stack = []
    h = g
    while True:
        bt = decompose_blocks(h)
        cycles = len(bt.cycle_indices())
        if cycles == 0:
            colors = dict(tree_liec(h).colors)
            break
        if cycles == 1:
            colors = dict(unicyclic_liec(h).colors)
            break
        if _common_cycle_vertex(bt) is not None:
            colors = dict(grape_liec(h).colors)
            break
        smaller, glue = _peel(h, bt)
        nxt, ids = compact(smaller)
        if cycle_rank(nxt) >= cycles:
            raise SolverBug("reduction did not remove a cycle")
        stack.append((glue, ids))
        h = nxt
    while stack:
        glue, ids = stack.pop()
        colors = glue({edge(ids[a], ids[b]): c for (a, b), c in colors.items()})
    result = compact_colors(EdgeColoring(g, colors))
    report = verify_liec(result)
    if not report.valid or result.k > 4:
        raise SolverBug(f"cactus coloring failed verification: {report.violations[:5]}")
    return result
