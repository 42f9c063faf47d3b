"""Compare the inductive construction with Hopcroft-Karp on random families.

Reports existence agreement, how often the two transversals coincide, and
mean runtime per instance as the index count grows.
"""
import argparse
import time

from hallmatch.oracles import random_family
from hallmatch.solver import solve_augmenting, solve_inductive


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--density", type=float, default=0.35)
    parser.add_argument("--max-indices", type=int, default=12)
    args = parser.parse_args()
    for n in range(2, args.max_indices + 1, 2):
        agree = same = 0
        t_ind = t_aug = 0.0
        for seed in range(args.trials):
            f = random_family(seed, n, n + 2, args.density)
            s = time.perf_counter()
            ind = solve_inductive(f)
            t_ind += time.perf_counter() - s
            s = time.perf_counter()
            aug = solve_augmenting(f)
            t_aug += time.perf_counter() - s
            agree += ind.ok == (aug is not None)
            same += ind.ok and aug is not None and ind.matching.as_dict() == aug.as_dict()
        print(
            f"n={n:>2}  agree={agree}/{args.trials}  identical={same}  "
            f"inductive={1e3 * t_ind / args.trials:.2f}ms  augmenting={1e3 * t_aug / args.trials:.2f}ms"
        )


if __name__ == "__main__":
    main()
