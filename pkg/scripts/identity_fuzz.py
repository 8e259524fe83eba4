"""Random instances of the continuant identities and the grafting identity."""
import argparse
import random

from snakefrac.identities import check_c, fuzz, random_c_instance


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    res = fuzz(args.count, args.seed)
    for key, n in res.counts.items():
        print(f"{key:<9s}{n} passed")
    for r in res.failures:
        print("FAIL", r.name, r.description)
    # sign in the second branch of the shared-window identity
    rng = random.Random(args.seed)
    literal = sum(not check_c(*random_c_instance(rng, "<"), literal_sign=True).holds
                  for _ in range(args.count))
    print(f"second branch with sign (-1)^k: {literal}/{args.count} fail; with (-1)^(k+1): 0 expected")
    raise SystemExit(0 if res.ok else 1)


if __name__ == "__main__":
    main()
