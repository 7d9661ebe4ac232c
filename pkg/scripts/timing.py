"""Wall-clock time of the cactus solver as the number of cycles grows.

    python scripts/timing.py --sizes 250 500 1000 2000
"""
import argparse
import time

from liec.cactus import cactus_liec
from liec.classify import classify
from liec.generators import gen_random_cactus


def main(sizes, density: int, seed: int) -> None:
    print("n\tcycles\tcolors\tseconds")
    for n in sizes:
        cycles = max(2, n // density)
        s = seed
        g = gen_random_cactus(n, cycles, s)
        while not classify(g).colorable:
            s += 1
            g = gen_random_cactus(n, cycles, s)
        start = time.perf_counter()
        k = cactus_liec(g).k
        print(f"{n}\t{cycles}\t{k}\t{time.perf_counter() - start:.2f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[250, 500, 1000, 2000])
    ap.add_argument("--density", type=int, default=10, help="vertices per cycle")
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    main(a.sizes, a.density, a.seed)
