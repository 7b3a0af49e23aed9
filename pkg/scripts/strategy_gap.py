#!/usr/bin/env python3
"""Compare question counts of the naive per-state strategy with the n-step
sieve for a range of particle counts, printing one table row per n."""

import argparse

from statesieve import question_count_stats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--trials", type=int, default=20000)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    print(f"{'n':>2} {'states':>7} {'naive mean':>11} {'naive max':>10} "
          f"{'exact (N+1)/2':>14} {'sieve':>6}")
    for n in range(1, args.max_n + 1):
        summary = question_count_stats(n, trials=args.trials, seed=args.seed)
        exact = (2 ** n + 1) / 2
        print(f"{n:>2} {2 ** n:>7} {summary.naive.mean:>11.3f} "
              f"{summary.naive.max:>10} {exact:>14.1f} {summary.sieve.max:>6}")


if __name__ == "__main__":
    main()
