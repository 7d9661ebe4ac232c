"""Color a seeded corpus of cacti and compare against the exhaustive oracle.

    python scripts/sweep.py --count 300 --max-n 40 --oracle-edges 10
"""
import argparse
import time
from collections import Counter
from dataclasses import dataclass

from liec.cactus import cactus_liec
from liec.experiments import CactusCorpus, cactus_sweep
from liec.oracle import exact_chi_irr


@dataclass(frozen=True)
class SweepRun:
    corpus: CactusCorpus
    exhaustive_edges: int = 9
    oracle_edges: int = 10


def main(run: SweepRun) -> None:
    start = time.perf_counter()
    graphs = cactus_sweep(run.corpus, run.exhaustive_edges)
    used = Counter()
    gap = Counter()
    for g in graphs:
        k = cactus_liec(g).k
        used[k] += 1
        if g.m <= run.oracle_edges:
            gap[k - exact_chi_irr(g, 4, max_edges=run.oracle_edges)] += 1
    print(f"{len(graphs)} colorable cacti in {time.perf_counter() - start:.1f}s")
    print("colors used:", dict(sorted(used.items())))
    print(f"solver minus optimum (m <= {run.oracle_edges}):", dict(sorted(gap.items())))


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--exhaustive-edges", type=int, default=9)
    ap.add_argument("--oracle-edges", type=int, default=10)
    a = ap.parse_args()
    main(SweepRun(CactusCorpus(count=a.count, max_n=a.max_n, seed=a.seed),
                  a.exhaustive_edges, a.oracle_edges))
