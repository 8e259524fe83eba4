"""Checkers for continuant identities and the Laurent-level grafting identity.

Indices follow the usual 1-based notation ``a_1..a_n``.  Continuants of
index ranges use two boundary conventions: an empty range (``a_{k+1}..a_k``)
has continuant 1 and a range one shorter than empty (``a_{k+2}..a_k``) has
continuant 0.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from snakefrac.cf_core import ContinuedFraction, integer_continuant
from snakefrac.laurent import LaurentPoly


class IdentityPreconditionError(ValueError):
    """The instance falls outside the identity's hypotheses."""


@dataclass
class IdentityReport:
    name: str
    lhs: object
    rhs: object
    description: str

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def verdict(self) -> str:
        return "PASS" if self.holds else "FAIL"

    def __str__(self):
        return f"{self.lhs} = {self.rhs} {self.verdict()}"


def N(seq: Sequence[int], lo: int, hi: int) -> int:
    """Continuant of ``seq[lo..hi]`` (1-based, inclusive) with the boundary conventions."""
    if hi < lo - 2:
        raise IndexError(f"range {lo}..{hi} is shorter than the conventions allow")
    if hi == lo - 2:
        return 0
    if lo < 1 or hi > len(seq):
        raise IndexError(f"range {lo}..{hi} outside 1..{len(seq)}")
    return integer_continuant(seq[lo - 1:hi])


def _coeffs(cf) -> tuple:
    return ContinuedFraction.of(cf).coeffs


def _describe(cf) -> str:
    return "[" + ",".join(str(a) for a in cf) + "]"


def check_a(cf, i: int) -> IdentityReport:
    """``N[1..n] = N[1..i] N[i+1..n] + N[1..i-1] N[i+2..n]``."""
    a = _coeffs(cf)
    n = len(a)
    if not 1 <= i <= n:
        raise IdentityPreconditionError(f"i = {i} outside 1..{n}")
    lhs = N(a, 1, n)
    rhs = N(a, 1, i) * N(a, i + 1, n) + N(a, 1, i - 1) * N(a, i + 2, n)
    return IdentityReport("a", lhs, rhs, f"{_describe(a)} i={i}")


def check_b(cf, i: int, j: int) -> IdentityReport:
    """``N[1..i+j] N[i..n] = N[1..n] N[i..i+j] + (-1)^j N[1..i-2] N[i+j+2..n]``."""
    a = _coeffs(cf)
    n = len(a)
    if j < 0 or i < 1 or not 1 <= i + j <= n - 1:
        raise IdentityPreconditionError(f"need j >= 0, i >= 1 and 1 <= i+j <= n-1 (n={n})")
    lhs = N(a, 1, i + j) * N(a, i, n)
    rhs = N(a, 1, n) * N(a, i, i + j) + (-1) ** j * N(a, 1, i - 2) * N(a, i + j + 2, n)
    return IdentityReport("b", lhs, rhs, f"{_describe(a)} i={i} j={j}")


def check_c_terms(a: Sequence[int], b: Sequence[int], i: int, j: int, k: int) -> tuple:
    """Validate an instance and return ``(first_correction, second_correction, branch)``.

    Entries of the correction sequences may be 0; their continuants are
    taken with the plain recurrence.
    """
    a, b = tuple(a), tuple(b)
    n, m = len(a), len(b)
    A = lambda t: a[t - 1]
    B = lambda t: b[t - 1]
    if k < 0:
        raise IdentityPreconditionError("k must be nonnegative")
    if not (2 < i and i + k + 1 <= n):
        raise IdentityPreconditionError(f"need 2 < i and i+k+1 <= n (i={i}, k={k}, n={n})")
    if not (2 < j and j + k + 1 <= m):
        raise IdentityPreconditionError(f"need 2 < j and j+k+1 <= m (j={j}, k={k}, m={m})")
    if a[i - 1:i + k] != b[j - 1:j + k]:
        raise IdentityPreconditionError("the windows a_i..a_{i+k} and b_j..b_{j+k} differ")
    if not A(i - 1) < B(j - 1):
        raise IdentityPreconditionError("need a_{i-1} < b_{j-1}")
    if A(i + k + 1) == B(j + k + 1):
        raise IdentityPreconditionError("need a_{i+k+1} != b_{j+k+1}")
    first = a[:i - 3] + (A(i - 2) - 1, 1, B(j - 1) - A(i - 1) - 1) + tuple(reversed(b[:j - 2]))
    if A(i + k + 1) > B(j + k + 1):
        if j + k + 2 > m:
            raise IdentityPreconditionError("this branch needs b_{j+k+2}")
        head = tuple(reversed(b[j + k + 2:]))
        second = head + (B(j + k + 2) - 1, 1, A(i + k + 1) - B(j + k + 1) - 1) + a[i + k + 1:]
        branch = ">"
    else:
        if i + k + 2 > n:
            raise IdentityPreconditionError("this branch needs a_{i+k+2}")
        head = tuple(reversed(b[j + k + 1:]))
        second = head + (B(j + k + 1) - A(i + k + 1) - 1, 1, A(i + k + 2) - 1) + a[i + k + 2:]
        branch = "<"
    if min(first + second) < 0:
        raise IdentityPreconditionError("a correction term has a negative entry")
    return first, second, branch


def check_c_sign(k: int, branch: str, literal_sign: bool = False) -> int:
    """Sign of the correction product.

    It is ``(-1)^k`` when ``a_{i+k+1} > b_{j+k+1}`` and ``(-1)^{k+1}`` in the
    other branch; ``literal_sign`` forces ``(-1)^k`` in both branches, which
    fails in the ``<`` branch.
    """
    if branch == "<" and not literal_sign:
        return (-1) ** (k + 1)
    return (-1) ** k


def check_c(cf_a, cf_b, i: int, j: int, k: int, literal_sign: bool = False) -> IdentityReport:
    """Product of two continuants with a common window, resolved into two products."""
    a, b = _coeffs(cf_a), _coeffs(cf_b)
    first, second, branch = check_c_terms(a, b, i, j, k)
    lhs = integer_continuant(a) * integer_continuant(b)
    swapped_1 = a[:i - 1] + b[j - 1:]
    swapped_2 = b[:j - 1] + a[i - 1:]
    sign = check_c_sign(k, branch, literal_sign)
    rhs = (integer_continuant(swapped_1) * integer_continuant(swapped_2)
           + sign * integer_continuant(first) * integer_continuant(second))
    desc = f"a={_describe(a)} b={_describe(b)} i={i} j={j} k={k} branch {branch}"
    return IdentityReport("c", lhs, rhs, desc)


# --- instance generators ----------------------------------------------------

def random_c_instance(rng: random.Random, branch: Optional[str] = None, k: Optional[int] = None,
                      max_coeff: int = 6, max_len: int = 9, tries: int = 100000) -> tuple:
    """Rejection-sample ``(a, b, i, j, k)`` satisfying every hypothesis of :func:`check_c`."""
    for _ in range(tries):
        kk = rng.randint(0, 3) if k is None else k
        i = rng.randint(3, max_len - kk - 1)
        j = rng.randint(3, max_len - kk - 1)
        n = rng.randint(i + kk + 1, max_len)
        m = rng.randint(j + kk + 1, max_len)
        window = [rng.randint(1, max_coeff) for _ in range(kk + 1)]
        a = [rng.randint(1, max_coeff) for _ in range(n)]
        b = [rng.randint(1, max_coeff) for _ in range(m)]
        a[i - 1:i + kk] = window
        b[j - 1:j + kk] = window
        try:
            _, _, br = check_c_terms(a, b, i, j, kk)
        except IdentityPreconditionError:
            continue
        if branch is None or br == branch:
            return tuple(a), tuple(b), i, j, kk
    raise RuntimeError("no valid instance found")


def all_cfs(total: int):
    """Every positive continued fraction whose coefficients sum to ``total``."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in all_cfs(total - first):
            yield (first,) + rest


def all_cfs_up_to(max_total: int):
    for t in range(1, max_total + 1):
        yield from all_cfs(t)


# --- Laurent level -----------------------------------------------------------

def grafting_pieces(g, i: int) -> tuple:
    """Labeled pieces ``(G[1..i], G[i+1..n], G[1..i-1], G[i+2..n])`` as expansions.

    ``G[a_1..a_0]`` is the edge ``b_0``, ``G[a_{n+1}..a_n]`` the edge ``b_n``
    and a range shorter than empty contributes 0.
    """
    from snakefrac.labeled import boundary_data, msw_expand, restrict

    ell = (0,) + g.ells()
    n = len(ell) - 1
    bd = boundary_data(g)
    var = g.var

    def left(k):
        if k == 0:
            return var(bd.b0)
        return msw_expand(restrict(g, 1, ell[k] - 1))

    def right(k):
        if k == n + 1:
            return var(bd.bn)
        if k == n + 2:
            return LaurentPoly.zero(g.varset)
        return msw_expand(restrict(g, ell[k - 1] + 1, g.d))

    return left(i), right(i + 1), left(i - 1), right(i + 2)


def check_grafting_laurent(g, i: int) -> IdentityReport:
    """``b_i x(G) = x(G[1..i]) x(G[i+1..n]) + x(G[1..i-1]) x(G[i+2..n])``."""
    from snakefrac.labeled import boundary_data, msw_expand, require_conditions

    require_conditions(g)
    n = len(g.cf())
    if not 1 <= i <= n:
        raise IdentityPreconditionError(f"i = {i} outside 1..{n}")
    bd = boundary_data(g)
    l1, r1, l0, r2 = grafting_pieces(g, i)
    lhs = g.var(bd.b(i)) * msw_expand(g)
    rhs = l1 * r1 + l0 * r2
    return IdentityReport("grafting", lhs, rhs, f"{g.cf()} i={i}")


# --- fuzzing -----------------------------------------------------------------

@dataclass
class FuzzResult:
    counts: dict
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def fuzz(count: int, seed: int, max_total: int = 14, graph_tiles: int = 7) -> FuzzResult:
    """Random instances of every identity; ``count`` of each kind."""
    from snakefrac.labeled import random_triangulated

    rng = random.Random(seed)
    counts = {"a": 0, "b": 0, "c>": 0, "c<": 0, "grafting": 0}
    failures = []

    def record(key, report):
        if report.holds:
            counts[key] += 1
        else:
            failures.append(report)

    for _ in range(count):
        cf = _random_cf(rng, max_total)
        record("a", check_a(cf, rng.randint(1, len(cf))))
        if len(cf) >= 2:
            i = rng.randint(1, len(cf) - 1)
            j = rng.randint(0, len(cf) - 1 - i)
            record("b", check_b(cf, i, j))
        else:
            counts["b"] += 1
        for br in (">", "<"):
            record("c" + br, check_c(*random_c_instance(rng, br)))
        g = random_triangulated(rng, graph_tiles)
        record("grafting", check_grafting_laurent(g, rng.randint(1, len(g.cf()))))
    return FuzzResult(counts, failures)


def _random_cf(rng: random.Random, max_total: int) -> tuple:
    left = rng.randint(1, max_total)
    out = []
    while left:
        a = rng.randint(1, left)
        out.append(a)
        left -= a
    return tuple(out)
