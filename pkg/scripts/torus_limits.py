"""Finite quotients of the torus family against the closed-form limits."""
import argparse

from snakefrac.asymptotics import VARIANTS, alpha, alpha_prime, beta, distance, limit_table
from snakefrac.gaussian import parse_gaussian


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--point", default="1,1,1")
    p.add_argument("--imax", type=int, default=25)
    p.add_argument("--variant", choices=VARIANTS, default="ALT")
    p.add_argument("--digits", type=int, default=20)
    args = p.parse_args()
    point = tuple(parse_gaussian(t) for t in args.point.split(","))
    target_a = alpha_prime(point) if args.variant == "STAIR" else alpha(point)
    target_b = beta(point)
    print(f"alpha target {target_a} = {target_a.render(args.digits)}")
    print(f"beta  {target_b} = {target_b.render(args.digits)}")
    print("i   |u/v - alpha|   |u(i)/u(i-1) - beta|")
    for row in limit_table(point, args.imax, args.variant):
        da = distance(row.u_over_v, target_a, 40)
        db = "-" if row.u_ratio is None else f"{float(distance(row.u_ratio, target_b, 40)):.3e}"
        print(f"{row.i:<4d}{float(da):<16.3e}{db}")


if __name__ == "__main__":
    main()
