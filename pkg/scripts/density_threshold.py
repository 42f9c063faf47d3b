"""Fraction of random families with a transversal, swept over inclusion density.

    python scripts/density_threshold.py --indices 8 --values 8 --trials 400
"""
import argparse

from hallmatch.oracles import random_family
from hallmatch.solver import deficiency_witness, solve_augmenting


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--indices", type=int, default=8)
    parser.add_argument("--values", type=int, default=8)
    parser.add_argument("--trials", type=int, default=400)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'density':>8} {'solvable':>9} {'mean |J|':>9}")
    for step in range(1, 11):
        density = step / 10
        solvable = 0
        witness_sizes = []
        for t in range(args.trials):
            f = random_family(args.seed * 1_000_003 + t, args.indices, args.values, density)
            if solve_augmenting(f) is not None:
                solvable += 1
            else:
                witness_sizes.append(len(deficiency_witness(f)))
        mean_j = sum(witness_sizes) / len(witness_sizes) if witness_sizes else float("nan")
        print(f"{density:8.1f} {solvable / args.trials:9.3f} {mean_j:9.2f}")


if __name__ == "__main__":
    main()
