"""Count snake graphs by number of perfect matchings and compare with Euler's totient."""
import argparse
from math import gcd

from snakefrac.cf_core import format_cf
from snakefrac.snake import snakes_with_matching_count_cfs


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--list", type=int, default=11, help="also list the CFs for this N")
    args = p.parse_args()
    print("N  graphs  phi(N)")
    for n in range(1, args.max_n + 1):
        count = len(snakes_with_matching_count_cfs(n))
        phi = sum(1 for q in range(1, n + 1) if gcd(n, q) == 1)
        print(f"{n:<3d}{count:>7d}{phi:>8d}{'' if count == phi else '  MISMATCH'}")
    print(f"\ncontinued fractions with {args.list} matchings:")
    for cf, shape in snakes_with_matching_count_cfs(args.list):
        print(f"  [{format_cf(cf)}]  {shape.d} tiles")


if __name__ == "__main__":
    main()
