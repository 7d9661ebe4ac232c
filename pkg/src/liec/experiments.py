"""Seeded corpora and sweeps shared by the acceptance tests and scripts/."""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .cactus import cactus_liec
from .classify import classify
from .coloring import format_coloring, is_liec
from .errors import NotApplicable
from .generators import (all_cacti, gen_cycle, gen_path, gen_random_cactus, gen_random_tree,
                         gen_T_member)
from .graph import (Graph, compact, decompose_blocks, edge_components, format_edge_list,
                    without_edges)
from .trees import (RESISTANT, a_sequence, rainbow_3liec, search_inversions,
                    shrub_based_coloring, tree_liec)
from .unicyclic import unicyclic_liec


@dataclass(frozen=True)
class CactusCorpus:
    count: int = 300
    max_n: int = 40
    min_cycles: int = 2
    max_cycles: int = 8
    seed: int = 0


@dataclass(frozen=True)
class TreeCorpus:
    count: int = 200
    min_n: int = 2
    max_n: int = 60
    seed: int = 0


@dataclass(frozen=True)
class NonColorableCorpus:
    count: int = 200
    max_path: int = 15
    max_steps: int = 4
    seed: int = 0


def _draw(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{index}")


def colorable_cacti(cfg: CactusCorpus = CactusCorpus()) -> list[Graph]:
    out, i = [], 0
    while len(out) < cfg.count:
        rng = _draw(cfg.seed, i)
        cycles = rng.randint(cfg.min_cycles, cfg.max_cycles)
        n = rng.randint(2 * cycles + 1, max(cfg.max_n, 2 * cycles + 1))
        g = gen_random_cactus(n, cycles, rng.randrange(2**31))
        if classify(g).colorable:
            out.append(g)
        i += 1
    return out


def colorable_unicyclic(cfg: TreeCorpus = TreeCorpus(count=200, min_n=3, max_n=40)) -> list[Graph]:
    out, i = [], 0
    while len(out) < cfg.count:
        rng = _draw(cfg.seed, i)
        g = gen_random_cactus(rng.randint(max(cfg.min_n, 3), cfg.max_n), 1, rng.randrange(2**31))
        if classify(g).colorable:
            out.append(g)
        i += 1
    return out


def random_trees(cfg: TreeCorpus = TreeCorpus(), colorable_only: bool = True) -> list[Graph]:
    out, i = [], 0
    while len(out) < cfg.count:
        rng = _draw(cfg.seed, i)
        g = gen_random_tree(rng.randint(cfg.min_n, cfg.max_n), rng.randrange(2**31))
        if not colorable_only or classify(g).colorable:
            out.append(g)
        i += 1
    return out


def noncolorable_graphs(cfg: NonColorableCorpus = NonColorableCorpus()) -> list[Graph]:
    """Odd paths, odd cycles and triangle-family members in rotation."""
    out = []
    for i in range(cfg.count):
        rng = _draw(cfg.seed, i)
        kind = i % 3
        if kind == 0:
            out.append(gen_path(2 * rng.randint(0, cfg.max_path // 2) + 1))
        elif kind == 1:
            out.append(gen_cycle(2 * rng.randint(1, cfg.max_path // 2) + 1))
        else:
            out.append(gen_T_member(rng.randrange(2**31), rng.randint(0, cfg.max_steps)))
    return out


def cactus_sweep(cfg: CactusCorpus = CactusCorpus(), exhaustive_edges: int = 9) -> list[Graph]:
    """Random colorable cacti followed by every colorable cactus up to ``exhaustive_edges``."""
    small = [g for g in all_cacti(exhaustive_edges) if classify(g).colorable]
    return colorable_cacti(cfg) + small


def deletion_targets(g: Graph) -> list:
    """Edges touching a leaf, plus edges lying on a cycle."""
    bt = decompose_blocks(g)
    on_cycle = {e for i in bt.cycle_indices() for e in bt.blocks[i]}
    return [e for e in g.edges if e in on_cycle or g.degree(e[0]) == 1 or g.degree(e[1]) == 1]


def deletion_verdicts(g: Graph) -> list[tuple[tuple[int, int], bool]]:
    """For each target edge: are all edge-bearing components of ``g - e`` colorable?"""
    out = []
    for e in deletion_targets(g):
        h = without_edges(g, [e])
        ok = all(classify(compact(h, comp)[0]).colorable for comp in edge_components(h))
        out.append((e, ok))
    return out


@dataclass(frozen=True)
class InversionOutcome:
    center: int
    degree: int
    a_sequence: tuple[int, ...]
    inverted: bool
    rainbow: tuple[tuple[bool, bool], ...]  # per c_shrub: (valid liec, center is the only 3-chromatic vertex)

    @property
    def ok(self) -> bool:
        if self.inverted:
            return True
        pattern = RESISTANT.get(self.degree) == list(self.a_sequence)
        return pattern and len(self.rainbow) == self.degree and all(a and b for a, b in self.rainbow)


def inversion_outcome(t: Graph) -> InversionOutcome:
    delta = t.max_degree()
    u = min(v for v in range(t.n) if t.degree(v) == delta)
    sbc = shrub_based_coloring(t, u)
    seq = tuple(a_sequence(sbc))
    if search_inversions(sbc) is not None:
        return InversionOutcome(u, delta, seq, True, ())
    rainbow = []
    for ci in range(sbc.degree):
        try:
            col = rainbow_3liec(sbc, ci)
        except NotApplicable:
            rainbow.append((False, False))
            continue
        tri = [v for v in range(t.n) if len(col.colors_at(v)) == 3]
        rainbow.append((is_liec(col) and col.k == 3, tri == [u]))
    return InversionOutcome(u, delta, seq, False, tuple(rainbow))


def _colorings_text(graphs, solver) -> str:
    parts = []
    for g in graphs:
        parts.append(format_edge_list(g) + "--\n" + format_coloring(solver(g)) + "==\n")
    return "".join(parts)


def sweep_outputs() -> dict[str, str]:
    """Serialized outputs of the seeded sweeps; used for byte-level determinism checks."""
    outputs = {
        "cacti": _colorings_text(cactus_sweep(), cactus_liec),
        "trees": _colorings_text(random_trees(TreeCorpus(count=200, max_n=60)), tree_liec),
        "unicyclic": _colorings_text(colorable_unicyclic(), unicyclic_liec),
    }
    lines = []
    for g in noncolorable_graphs():
        lines.append(format_edge_list(g) + "".join(f"{u} {v} {int(ok)}\n" for (u, v), ok in deletion_verdicts(g)))
    outputs["deletions"] = "==\n".join(lines)
    lines = []
    for t in random_trees(TreeCorpus(count=500, min_n=3, max_n=20)):
        lines.append(format_edge_list(t) + repr(inversion_outcome(t)) + "\n")
    outputs["inversions"] = "==\n".join(lines)
    return outputs


def sweep_digests() -> dict[str, str]:
    return {k: hashlib.sha256(v.encode()).hexdigest() for k, v in sweep_outputs().items()}


if __name__ == "__main__":
    import json
    print(json.dumps(sweep_digests(), sort_keys=True))
