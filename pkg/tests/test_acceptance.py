"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) or under pytest.
"""
from __future__ import annotations

import os
import random
import subprocess
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import gcd
from pathlib import Path

from snakefrac.asymptotics import (
    alpha,
    alpha_quadratic_residual,
    beta,
    distance,
    eval_expansion,
    kronecker_alpha,
    kronecker_beta,
    limit_table,
    metallic_checks,
)
from snakefrac.cf_core import (
    continuant,
    continuant_ring,
    evaluate,
    is_reduced,
)
from snakefrac.gaussian import GaussianRational, normalize, is_zero
from snakefrac.identities import all_cfs, all_cfs_up_to, check_a, check_b, check_c, random_c_instance
from snakefrac.labeled import (
    L_sequence,
    complex_specialize,
    example_labeled_graph,
    gamma_prime,
    generic_labeling,
    msw_expand,
    random_triangulated,
    verify_quotient,
    x_H,
    x_H_formula,
)
from snakefrac.matchings import count_matchings, enumerate_matchings
from snakefrac.snake import (
    NeChoice,
    all_shapes,
    cf_to_snake,
    cf_to_snake_with_edge,
    chi,
    snake_to_cf,
    snake_to_cf_canonical,
    snakes_with_matching_count,
    snakes_with_matching_count_cfs,
)
from snakefrac.surd import QuadraticSurd, sqrt_exact

SEED = 20240601
TOL = Fraction(1, 10 ** 9)


def _report(number: int, ok: bool, detail: str):
    return number, ok, detail


def _line(number, ok, detail) -> str:
    return f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


# --- oracles -----------------------------------------------------------------

def fib(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def pell_like(n: int) -> int:
    """``p_1 = 2, p_2 = 5, p_k = 2 p_{k-1} + p_{k-2}``."""
    a, b = 1, 2
    for _ in range(n - 1):
        a, b = b, 2 * b + a
    return b


def nested_value(coeffs) -> Fraction:
    """``a1 + 1/(a2 + 1/(...))`` evaluated from the tail."""
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        value = a + 1 / value
    return value


def totient(n: int) -> int:
    return sum(1 for q in range(1, n + 1) if gcd(n, q) == 1)


# --- criteria ----------------------------------------------------------------

def criterion_1():
    expected = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
    ones = lambda n: (1,) * n
    enum = [len(enumerate_matchings(cf_to_snake(ones(n))[0])) for n in range(1, 11)]
    cont = all(count_matchings(cf_to_snake(ones(n))[0]) == continuant(ones(n)) == fib(n + 1)
               for n in range(1, 61))
    return _report(1, enum == expected and cont, f"enumerated {enum}; continuant agrees for n <= 60")


def criterion_2():
    expected = [2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741]
    twos = lambda n: (2,) * n
    enum = [len(enumerate_matchings(cf_to_snake(twos(n))[0])) for n in range(1, 11)]
    cont = all(continuant(twos(n)) == count_matchings(cf_to_snake(twos(n))[0]) == pell_like(n)
               for n in range(1, 41))
    return _report(2, enum == expected and cont, f"enumerated {enum}; continuant agrees for n <= 40")


def criterion_3():
    checked, bad = 0, []
    for cf in all_cfs_up_to(12):
        shape, _ = cf_to_snake(cf)
        m = len(enumerate_matchings(shape))
        tail = continuant(cf[1:]) if len(cf) > 1 else 1
        value = nested_value(cf)
        ok = (m == continuant(cf) and value.numerator == m and value.denominator == tail
              and gcd(m, tail) == 1 and is_reduced(cf) and evaluate(cf) == value)
        checked += 1
        if not ok:
            bad.append(cf)
    return _report(3, not bad, f"{checked} continued fractions, {len(bad)} mismatches")


def criterion_4():
    bad = []
    pairs = 0
    for d in range(1, 12):
        for shape in all_shapes(d):
            for ne in NeChoice:
                cf = snake_to_cf(shape, ne)
                if cf_to_snake_with_edge(cf) != (shape, ne):
                    bad.append(("F then G", shape, ne))
                pairs += 1
        for cf in all_cfs(d + 1):
            if snake_to_cf(*cf_to_snake_with_edge(cf)).coeffs != cf:
                bad.append(("G then F", cf))
    for d in range(1, 11):
        shapes = list(all_shapes(d))
        image = {snake_to_cf_canonical(s).coeffs for s in shapes}
        canonical = {cf for cf in all_cfs(d + 1) if cf[-1] >= 2}
        if image != canonical or len(image) != len(shapes):
            bad.append(("F' not bijective", d))
        for s in shapes:
            if chi(s) != nested_value(snake_to_cf_canonical(s).coeffs):
                bad.append(("chi", s))
    return _report(4, not bad, f"{pairs} shape/edge pairs round-trip; F' and chi checked for d <= 10")


def criterion_5():
    bad = [N for N in range(1, 201) if len(snakes_with_matching_count(N)) != totient(N)]
    fig = [(11,), (5, 2), (3, 1, 2), (2, 1, 3), (2, 5), (1, 1, 5), (1, 1, 1, 3),
           (1, 2, 1, 2), (1, 4, 2), (1, 10)]
    got = [cf.coeffs for cf, _ in snakes_with_matching_count_cfs(11)]
    counts_ok = all(count_matchings(s) == 11 for s in snakes_with_matching_count(11))
    ok = not bad and got == fig and counts_ok
    return _report(5, ok, f"totient matches for N <= 200 ({len(bad)} misses); N = 11 list {'equal' if got == fig else got}")


def criterion_6():
    count_ab, bad = 0, []
    for cf in all_cfs_up_to(12):
        n = len(cf)
        for i in range(1, n + 1):
            count_ab += 1
            if not check_a(cf, i).holds:
                bad.append(("a", cf, i))
        for i in range(1, n):
            for j in range(0, n - i):
                count_ab += 1
                if not check_b(cf, i, j).holds:
                    bad.append(("b", cf, i, j))
    paper = check_c((1, 2, 3, 4, 3), (1, 4, 3, 4, 1, 2), 3, 3, 1)
    if not (paper.holds and paper.lhs == 33221):
        bad.append(("c", "33221 instance"))
    rng = random.Random(SEED)
    for branch in (">", "<"):
        for _ in range(1000):
            rep = check_c(*random_c_instance(rng, branch))
            if not rep.holds:
                bad.append(("c", rep.description))
    return _report(6, not bad, f"{count_ab} instances of (a)/(b), 33221 = {paper.rhs}, 2000 of (c); {len(bad)} failures")


def criterion_7():
    bad = []
    g = example_labeled_graph()
    for ne, cf in ((NeChoice.EAST, (2, 3, 1)), (NeChoice.NORTH, (2, 4))):
        h = g.with_ne(ne)
        if h.cf().coeffs != cf or not verify_quotient(h).holds:
            bad.append(("example", ne))
    rng = random.Random(SEED)
    for _ in range(200):
        h = random_triangulated(rng, 9)
        if not verify_quotient(h).holds:
            bad.append(("quotient", str(h)))
        for i in range(1, len(h.cf()) + 1):
            if x_H(h, i) != x_H_formula(h, i):
                bad.append(("x_H", str(h), i))
    return _report(7, not bad, f"example under both readings and 200 random graphs; {len(bad)} failures")


def _random_gaussian(rng: random.Random):
    while True:
        z = normalize(GaussianRational(Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                                       Fraction(rng.randint(-4, 4), rng.randint(1, 3))))
        if not is_zero(z):
            return z


def criterion_8():
    bad = []
    z = [GaussianRational(0, 2), GaussianRational(-3, 1)]
    if continuant_ring(z) != GaussianRational(-1, -6):
        bad.append("[2i,-3+i]")
    rng = random.Random(SEED)
    for _ in range(500):
        zs = [_random_gaussian(rng) for _ in range(rng.randint(1, 5))]
        g, point, _ = complex_specialize(zs)
        L = [p.eval(point) for p in L_sequence(g)]
        top = eval_expansion(g, point)
        bottom = eval_expansion(gamma_prime(g), point)
        if L != zs or top * continuant_ring(zs[1:]) != bottom * continuant_ring(zs):
            bad.append(zs)
    return _report(8, not bad, f"N[2i,-3+i] = -1-6i; 500 random Gaussian CFs, {len(bad)} failures")


def criterion_9():
    bad, graphs = [], 0
    for d in range(1, 13):
        for shape in all_shapes(d):
            m = count_matchings(shape)
            for ne in NeChoice:
                g = generic_labeling(snake_to_cf(shape, ne))
                graphs += 1
                if g.shape != shape or msw_expand(g).eval({v: 1 for v in g.varset.names}) != m:
                    bad.append((shape, ne))
    return _report(9, not bad, f"{graphs} labeled graphs (both readings of every shape), {len(bad)} failures")


def criterion_10():
    notes, ok = [], True

    def near(q, s, label):
        nonlocal ok
        dist = distance(q, s, 40)
        good = dist < TOL
        ok &= good
        notes.append(f"{label} {float(dist):.1e}")

    rows = limit_table((1, 1, 1), 25)
    golden = QuadraticSurd(Fraction(1, 2), Fraction(1, 2), 5)
    near(rows[-1].u_over_v, golden, "(1,1,1) u/v")
    near(rows[-1].u_over_v, alpha((1, 1, 1)), "alpha")
    near(rows[-1].u_ratio, beta((1, 1, 1)), "beta")
    rows = limit_table((1, 1, 2), 25)
    near(rows[-1].u_over_v, 1 + sqrt_exact(2), "(1,1,2)")
    for pt in ((2, 3, 1), (Fraction(1, 2), 1, 1), (1, 2, 1)):
        rows = limit_table(pt, 25)
        near(rows[-1].u_over_v, kronecker_alpha(pt[0], pt[1]), f"{pt} alpha")
        near(rows[-1].u_ratio, kronecker_beta(pt[0], pt[1]), f"{pt} beta")
    quad = [(1, 1, 1), (1, 1, 2), (2, 3, 5), (Fraction(1, 3), 2, Fraction(5, 7)), (3, 1, 4)]
    quad_ok = all(alpha_quadratic_residual(p).is_zero() for p in quad)
    reports = metallic_checks(10)
    metallic_ok = all(r.holds for r in reports)
    ok = ok and quad_ok and metallic_ok
    notes.append(f"quadratic {'exact' if quad_ok else 'FAIL'}; metallic {sum(r.holds for r in reports)}/{len(reports)}")
    return _report(10, ok, "; ".join(notes))


CLI_COMMANDS = [
    ["cf", "eval", "2,3,4"],
    ["cf", "continuant", "2,3,1,2,3"],
    ["cf", "from-rational", "30/13"],
    ["cf", "scale", "2,3,4", "3/2"],
    ["cf", "reverse", "2,3,1,2,3"],
    ["snake", "from-cf", "2,3,1,2,3"],
    ["snake", "to-cf", "10:RRURRRUUR"],
    ["snake", "to-cf", "5:RRUR", "--ne", "E"],
    ["snake", "chi", "10:RRURRRUUR"],
    ["snake", "rotate", "10:RRURRRUUR"],
    ["count-matchings", "2,3,1,2,3"],
    ["list-matchings", "2,3,1"],
    ["totient-count", "11"],
    ["expand", "--example"],
    ["expand", "--cf", "2,2", "--format", "json"],
    ["verify-quotient", "--example", "--ne", "E"],
    ["complex-continuant", "2i,-3+i"],
    ["identity", "a", "--cf", "1,2,3,4", "--i", "2"],
    ["identity", "b", "--cf", "1,2,3,4", "--i", "2", "--j", "1"],
    ["identity", "c", "--a", "1,2,3,4,3", "--b", "1,4,3,4,1,2", "--i", "3", "--j", "3", "--k", "1"],
    ["identity", "fuzz", "--count", "20", "--seed", "7"],
    ["limit", "--point", "1,1,1", "--imax", "12", "--precision", "30"],
    ["metallic", "--n", "3"],
    ["render", "2,3,1", "--matchings", "--out", "m.svg"],
]


def _run_cli(args, tmp: Path, hashseed: str) -> tuple:
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    proc = subprocess.run([sys.executable, "-m", "snakefrac.cli", *args], cwd=tmp,
                          capture_output=True, env=env, check=False)
    out = proc.stdout + proc.stderr
    if args[0] == "render":
        out += (tmp / "m.svg").read_bytes()
    return proc.returncode, out


def criterion_11(tmp_root: Path):
    bad = []

    def one(k_args):
        k, args = k_args
        dirs = [tmp_root / f"{k}-{r}" for r in range(2)]
        for p in dirs:
            p.mkdir(parents=True, exist_ok=True)
        first = _run_cli(args, dirs[0], "1")
        second = _run_cli(args, dirs[1], "2")
        return args, first == second and first[0] == 0

    with ThreadPoolExecutor(max_workers=8) as pool:
        for args, same in pool.map(one, enumerate(CLI_COMMANDS)):
            if not same:
                bad.append(" ".join(args))
    return _report(11, not bad, f"{len(CLI_COMMANDS)} commands run twice with different hash seeds; differing: {bad or 'none'}")


# --- pytest wrappers -----------------------------------------------------------

def _check(capsys, result):
    with capsys.disabled():
        print("\n" + _line(*result))
    assert result[1], result[2]


def test_criterion_01_fibonacci(capsys):
    _check(capsys, criterion_1())


def test_criterion_02_pell(capsys):
    _check(capsys, criterion_2())


def test_criterion_03_count_is_continuant(capsys):
    _check(capsys, criterion_3())


def test_criterion_04_bijections(capsys):
    _check(capsys, criterion_4())


def test_criterion_05_totient(capsys):
    _check(capsys, criterion_5())


def test_criterion_06_continuant_identities(capsys):
    _check(capsys, criterion_6())


def test_criterion_07_quotient(capsys):
    _check(capsys, criterion_7())


def test_criterion_08_complex(capsys):
    _check(capsys, criterion_8())


def test_criterion_09_specialization(capsys):
    _check(capsys, criterion_9())


def test_criterion_10_limits(capsys):
    _check(capsys, criterion_10())


def test_criterion_11_determinism(capsys, tmp_path):
    _check(capsys, criterion_11(tmp_path))


if __name__ == "__main__":
    import tempfile

    results = [f() for f in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                             criterion_6, criterion_7, criterion_8, criterion_9, criterion_10)]
    with tempfile.TemporaryDirectory() as tmp:
        results.append(criterion_11(Path(tmp)))
    for r in results:
        print(_line(*r))
    sys.exit(0 if all(r[1] for r in results) else 1)
