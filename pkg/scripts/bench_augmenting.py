"""Wall-clock of the augmenting-path solver on planted instances of growing size."""
import argparse
import time

from hallmatch.oracles import planted_family
from hallmatch.solver import solve_augmenting


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=8)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    for n in (1_000, 10_000, 50_000, 100_000):
        f = planted_family(args.seed, n, int(n * 1.2), args.degree)
        start = time.perf_counter()
        t = solve_augmenting(f)
        print(f"n={n:>7}  saturated={t is not None}  {time.perf_counter() - start:.3f}s")


if __name__ == "__main__":
    main()
