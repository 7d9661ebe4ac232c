"""List every cactus with at most --max-edges edges that needs four colors.

Only cacti with two or more cycles are searched: trees and unicyclic graphs
never need more than three.

    python scripts/find_chi4.py --max-edges 13
"""
import argparse
import time

from liec.classify import classify
from liec.generators import all_cacti
from liec.graph import cycle_rank
from liec.oracle import find_liec


def main(max_edges: int) -> None:
    start = time.perf_counter()
    graphs = [g for g in all_cacti(max_edges) if cycle_rank(g) >= 2 and classify(g).colorable]
    print(f"{len(graphs)} colorable cacti with >= 2 cycles ({time.perf_counter() - start:.1f}s)")
    for g in graphs:
        if find_liec(g, 3) is None:
            print(f"needs 4: n={g.n} m={g.m} edges={list(g.edges)}")
    print(f"done in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-edges", type=int, default=13)
    main(ap.parse_args().max_edges)
