"""Sparse multivariate Laurent polynomials over Gaussian rationals.

A :class:`LaurentPoly` maps exponent vectors (negative entries allowed) to
nonzero coefficients.  Coefficients are ``int``, ``Fraction`` or
:class:`~snakefrac.gaussian.GaussianRational`, always normalised so that real
values stay on the rational fast path.

:class:`RationalFunction` is an unreduced pair ``num/den``; equality is tested
by cross-multiplication, so no polynomial gcd is ever needed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from snakefrac.gaussian import GaussianRational, format_gaussian, is_zero, normalize, parse_gaussian

EXPONENT_LIMIT = 2 ** 31


class VarSetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class VarSet:
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for n in names:
            if not _NAME_RE.fullmatch(n):
                raise ValueError(f"invalid variable name {n!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: k for k, n in enumerate(names)})

    @classmethod
    def of(cls, *names) -> "VarSet":
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return cls(tuple(names))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in {self.names}") from None

    def __contains__(self, name):
        return name in self._index

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def zero_exponent(self) -> tuple:
        return (0,) * len(self.names)


def _is_scalar(x) -> bool:
    return isinstance(x, (Rational, GaussianRational)) and not isinstance(x, bool)


def _check_exponents(exps: tuple) -> tuple:
    for e in exps:
        if not -EXPONENT_LIMIT < e < EXPONENT_LIMIT:
            raise OverflowError(f"exponent {e} out of range")
    return exps


def _max_abs_exponent(p) -> int:
    """Upper bound on the absolute value of every exponent, cached on ``p``."""
    if p._bound is None:
        p._bound = max((max(map(abs, exps), default=0) for exps in p.terms), default=0)
    return p._bound


def _term_order_key(exps: tuple):
    """Graded lexicographic order, largest term first."""
    return (-sum(exps), tuple(-e for e in exps))


class LaurentPoly:
    __slots__ = ("varset", "terms", "_hash", "_bound")

    def __init__(self, varset: VarSet, terms: Mapping = None):
        clean = {}
        for exps, c in (terms or {}).items():
            exps = _check_exponents(tuple(int(e) for e in exps))
            if len(exps) != len(varset):
                raise ValueError("exponent vector length does not match the variable set")
            c = normalize(c)
            if not is_zero(c):
                clean[exps] = c
        self.varset = varset
        self.terms = clean
        self._hash = None
        self._bound = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def _raw(cls, varset, terms):
        p = cls.__new__(cls)
        p.varset = varset
        p.terms = terms
        p._hash = None
        p._bound = None
        return p

    @classmethod
    def zero(cls, varset: VarSet) -> "LaurentPoly":
        return cls._raw(varset, {})

    @classmethod
    def const(cls, varset: VarSet, c) -> "LaurentPoly":
        return cls(varset, {varset.zero_exponent(): c})

    @classmethod
    def one(cls, varset: VarSet) -> "LaurentPoly":
        return cls.const(varset, 1)

    @classmethod
    def var(cls, varset: VarSet, name: str, power: int = 1) -> "LaurentPoly":
        exps = [0] * len(varset)
        exps[varset.index(name)] = power
        return cls._raw(varset, {tuple(exps): 1})

    @classmethod
    def monomial(cls, varset: VarSet, powers: Mapping, coeff=1) -> "LaurentPoly":
        exps = [0] * len(varset)
        for name, e in powers.items():
            exps[varset.index(name)] += e
        return cls(varset, {tuple(exps): coeff})

    # -- inspection --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {self.varset.zero_exponent()}

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get(self.varset.zero_exponent(), 0)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: _term_order_key(kv[0]))

    def coefficients(self) -> list:
        return [c for _, c in self.sorted_terms()]

    def __len__(self):
        return len(self.terms)

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.varset != self.varset:
                raise VarSetMismatch(f"{self.varset.names} vs {other.varset.names}")
            return other
        if _is_scalar(other):
            return LaurentPoly.const(self.varset, other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for exps, c in o.terms.items():
            s = normalize(out.get(exps, 0) + c)
            if is_zero(s):
                out.pop(exps, None)
            else:
                out[exps] = s
        return LaurentPoly._raw(self.varset, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.varset, {e: normalize(-c) for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self.terms or not o.terms:
            return LaurentPoly.zero(self.varset)
        # one bound check per product instead of per term
        bound = _max_abs_exponent(self) + _max_abs_exponent(o)
        if bound >= EXPONENT_LIMIT:
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in o.terms.items():
                    exps = _check_exponents(tuple(a + b for a, b in zip(e1, e2)))
                    out[exps] = out.get(exps, 0) + c1 * c2
            return LaurentPoly(self.varset, out)
        out = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                exps = tuple(map(int.__add__, e1, e2))
                out[exps] = get(exps, 0) + c1 * c2
        clean = {}
        for exps, c in out.items():
            c = normalize(c)
            if not is_zero(c):
                clean[exps] = c
        result = LaurentPoly._raw(self.varset, clean)
        result._bound = bound
        return result

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.monomial_inverse() ** (-k)
        result = LaurentPoly.one(self.varset)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monomial_inverse(self) -> "LaurentPoly":
        """Inverse of a single term; only monomials are units."""
        if not self.is_monomial():
            raise ValueError("only a single-term Laurent polynomial is invertible")
        (exps, c), = self.terms.items()
        inv = 1 / GaussianRational.coerce(c) if isinstance(c, GaussianRational) else Fraction(1) / c
        return LaurentPoly(self.varset, {tuple(-e for e in exps): inv})

    def div_by_monomial(self, m) -> "LaurentPoly":
        m = self._coerce(m)
        return self * m.monomial_inverse()

    def __truediv__(self, other):
        if _is_scalar(other):
            if is_zero(other):
                raise ZeroDivisionError("division by zero")
            inv = GaussianRational.coerce(other).inverse()
            return self * inv
        if isinstance(other, LaurentPoly):
            return self.div_by_monomial(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return self.monomial_inverse() * other
        return NotImplemented

    # -- evaluation --------------------------------------------------------
    def eval(self, point: Mapping):
        """Exact value at ``point`` (a map from variable name to number)."""
        names = self.varset.names
        values = [point.get(name) for name in names]
        powers: dict = {}

        def power(k, e):
            key = (k, e)
            if key not in powers:
                v = values[k]
                if v is None:
                    raise KeyError(f"no value given for {names[k]!r}")
                if e < 0 and is_zero(v):
                    raise ZeroDivisionError(f"{names[k]} = 0 raised to a negative power")
                powers[key] = _power(v, e)
            return powers[key]

        total = 0
        for exps, c in self.terms.items():
            term = c
            for k, e in enumerate(exps):
                if e:
                    term = term * power(k, e)
            total = total + term
        return normalize(total)

    def substitute(self, values: Mapping) -> "LaurentPoly":
        """Replace some variables by Laurent polynomials (monomials if the exponent is negative)."""
        result = LaurentPoly.zero(self.varset)
        for exps, c in self.terms.items():
            term = LaurentPoly.const(self.varset, c)
            for name, e in zip(self.varset.names, exps):
                if e == 0:
                    continue
                base = values.get(name)
                if base is None:
                    base = LaurentPoly.var(self.varset, name)
                elif _is_scalar(base):
                    base = LaurentPoly.const(self.varset, base)
                term = term * base ** e
            result = result + term
        return result

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.varset == other.varset and self.terms == other.terms
        if _is_scalar(other):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"


def _power(v, e: int):
    if e >= 0:
        return v ** e
    if v == 1 or v == -1:
        return v ** -e
    if isinstance(v, GaussianRational):
        return v.inverse() ** (-e) if (-e) > 1 else v.inverse()
    return Fraction(1) / Fraction(v) ** (-e)


# --- text format --------------------------------------------------------------

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


def _format_coeff_abs(c) -> tuple:
    """Split a coefficient into (is_negative, text) for a signed sum."""
    if isinstance(c, GaussianRational):
        return False, "(" + format_gaussian(c) + ")"
    c = Fraction(c)
    text = str(abs(c.numerator)) if c.denominator == 1 else f"{abs(c.numerator)}/{c.denominator}"
    return c < 0, text


def format_poly(p: LaurentPoly) -> str:
    """``coeff*x1^e1*x2^e2 + ...`` in graded-lex order, largest term first."""
    if p.is_zero():
        return "0"
    parts = []
    for exps, c in p.sorted_terms():
        negative, ctext = _format_coeff_abs(c)
        factors = []
        for name, e in zip(p.varset.names, exps):
            if e == 1:
                factors.append(name)
            elif e != 0:
                factors.append(f"{name}^{e}")
        if ctext == "1" and factors:
            body = "*".join(factors)
        else:
            body = "*".join([ctext] + factors)
        parts.append(("-" if negative else "+", body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _split_terms(text: str) -> list:
    """Split on top-level + and - (not inside parentheses or after ``^``)."""
    terms, depth, cur, sign = [], 0, "", 1
    s = text.replace(" ", "")
    k = 0
    while k < len(s):
        ch = s[k]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and (not cur or cur[-1] != "^"):
            if cur:
                terms.append((sign, cur))
                cur = ""
            sign = 1 if ch == "+" else -1
            k += 1
            continue
        cur += ch
        k += 1
    if cur:
        terms.append((sign, cur))
    return terms


def _split_factors(term: str) -> list:
    out, depth, cur = [], 0, ""
    for ch in term:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


def _parse_scalar(tok: str):
    if tok.startswith("(") and tok.endswith(")"):
        return parse_gaussian(tok[1:-1])
    if re.fullmatch(r"\d+(/\d+)?", tok):
        return normalize(Fraction(tok))
    if re.fullmatch(r"(\d+(/\d+)?)?i", tok):
        return parse_gaussian(tok)
    return None


def _parse_raw(text: str) -> list:
    """List of (coefficient, {name: exponent}) pairs."""
    if not text.strip():
        raise ValueError("empty polynomial")
    out = []
    for sign, body in _split_terms(text):
        coeff = sign
        powers: dict = {}
        for tok in _split_factors(body):
            if not tok:
                raise ValueError(f"malformed term {body!r}")
            scalar = _parse_scalar(tok)
            if scalar is not None:
                coeff = coeff * scalar
                continue
            name, caret, exp = tok.partition("^")
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"malformed factor {tok!r}")
            try:
                e = int(exp) if caret else 1
            except ValueError:
                raise ValueError(f"malformed exponent in {tok!r}") from None
            powers[name] = powers.get(name, 0) + e
        out.append((coeff, powers))
    return out


def parse_poly(text: str, varset: VarSet = None) -> LaurentPoly:
    """Inverse of :func:`format_poly`.

    Without ``varset`` the variables are those that occur, in sorted order.
    """
    raw = _parse_raw(text)
    if varset is None:
        varset = VarSet(tuple(sorted({n for _, pw in raw for n in pw})))
    result = LaurentPoly.zero(varset)
    for coeff, powers in raw:
        result = result + LaurentPoly.monomial(varset, powers, coeff)
    return result


# --- unreduced fractions -----------------------------------------------------

@dataclass(frozen=True, eq=False)
class RationalFunction:
    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self):
        if self.num.varset != self.den.varset:
            raise VarSetMismatch("numerator and denominator use different variables")
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    @property
    def varset(self) -> VarSet:
        return self.num.varset

    @classmethod
    def of(cls, p: LaurentPoly) -> "RationalFunction":
        return cls(p, LaurentPoly.one(p.varset))

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return frac_eq(self, other)
        return NotImplemented

    __hash__ = None

    def __str__(self):
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"


def frac_add(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    return RationalFunction(f.num * g.den + g.num * f.den, f.den * g.den)


def frac_mul(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    return RationalFunction(f.num * g.num, f.den * g.den)


def frac_inv(f: RationalFunction) -> RationalFunction:
    if f.num.is_zero():
        raise ZeroDivisionError("inverse of the zero fraction")
    return RationalFunction(f.den, f.num)


def frac_eq(f: RationalFunction, g: RationalFunction) -> bool:
    return f.num * g.den == g.num * f.den


def variables(names: Iterable[str]) -> tuple:
    """Convenience: a VarSet and one generator per name."""
    vs = VarSet(tuple(names))
    return (vs,) + tuple(LaurentPoly.var(vs, n) for n in vs.names)
