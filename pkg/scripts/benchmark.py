"""Compare the three toric-extension enumerators on random quivers.

Reports wall time per method and, for the recursive method, the number of
recursion-tree nodes next to the size of the flip class the other two scan.
"""

import argparse
import random
import time

from toricposets.extensions import ltor_bruteforce, ltor_partition, ltor_recursion_tree
from toricposets.generate import random_quiver
from toricposets.toric import flip_class


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[5, 6, 7, 8])
    ap.add_argument("--per-size", type=int, default=10)
    ap.add_argument("--density", type=float, default=0.5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"{'n':>3} {'|[Q]|':>7} {'|Ltor|':>7} {'nodes':>7} {'brute s':>9} {'part s':>9} {'rec s':>9}")
    for n in args.sizes:
        for _ in range(args.per_size):
            q = random_quiver(n, rng, args.density)
            t0 = time.perf_counter()
            brute = ltor_bruteforce(q)
            t1 = time.perf_counter()
            ltor_partition(q, 1)
            t2 = time.perf_counter()
            tree = ltor_recursion_tree(q)
            t3 = time.perf_counter()
            print(f"{n:>3} {len(flip_class(q)):>7} {len(brute):>7} {tree.size():>7} "
                  f"{t1 - t0:>9.4f} {t2 - t1:>9.4f} {t3 - t2:>9.4f}")


if __name__ == "__main__":
    main()
