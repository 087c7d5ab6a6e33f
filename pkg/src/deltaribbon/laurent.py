"""Exact Laurent polynomials with half-integer exponents.

Exponents are stored doubled, so ``y^(1/2)`` is the exponent 1 on ``y``.
Coefficients are Python integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, isqrt
from typing import Iterable, Mapping

from .errors import HalfPowerNotSquare, ZeroToNegativePower

VARIABLES = ("x", "y", "z", "w", "a", "b")
_INDEX = {v: i for i, v in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
_ZERO = (0,) * _NVARS

Exponent = tuple[int, ...]


def _key(exp: Exponent):
    """Monomial order: lexicographic on its (variable, doubled exponent) pairs."""
    return tuple((i, e) for i, e in enumerate(exp) if e)


def _fmt_power(name: str, e: int) -> str:
    if e == 2:
        return name
    if e % 2 == 0:
        k = e // 2
        return f"{name}^{k}" if k > 0 else f"{name}^({k})"
    return f"{name}^({e}/2)"


def _int_sqrt(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def _frac_sqrt(q: Fraction) -> Fraction | None:
    a, b = _int_sqrt(q.numerator), _int_sqrt(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


class LaurentPoly:
    """Immutable sparse polynomial in x, y, z, w, a, b.

    With ``idempotent=("w",)`` every positive power of w is reduced to w as
    terms are inserted, i.e. arithmetic happens modulo w^2 - w.
    """

    __slots__ = ("_terms", "_idem", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, idempotent: Iterable[str] = ()):
        self._idem = frozenset(_INDEX[v] for v in idempotent)
        self._terms: dict[Exponent, int] = {}
        self._hash = None
        if terms:
            for exp, c in terms.items():
                self._add(tuple(exp), c)

    def _add(self, exp: Exponent, c: int) -> None:
        if not c:
            return
        if self._idem:
            exp = tuple(2 if (i in self._idem and e > 0) else e for i, e in enumerate(exp))
        new = self._terms.get(exp, 0) + c
        if new:
            self._terms[exp] = new
        else:
            del self._terms[exp]

    @classmethod
    def _raw(cls, terms: dict, idem: frozenset) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._idem = idem
        obj._terms = {}
        obj._hash = None
        for exp, c in terms.items():
            obj._add(exp, c)
        return obj

    # -- constructors ------------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({_ZERO: c})

    @classmethod
    def var(cls, name: str, power: Fraction | int = 1) -> "LaurentPoly":
        """``name ** power`` for an integer or half-integer power."""
        doubled = Fraction(power) * 2
        if doubled.denominator != 1:
            raise ValueError("powers must be multiples of 1/2")
        exp = [0] * _NVARS
        exp[_INDEX[name]] = int(doubled)
        return cls({tuple(exp): 1})

    @classmethod
    def monomial(cls, coeff: int = 1, **powers) -> "LaurentPoly":
        exp = [0] * _NVARS
        for name, p in powers.items():
            d = Fraction(p) * 2
            if d.denominator != 1:
                raise ValueError("powers must be multiples of 1/2")
            exp[_INDEX[name]] = int(d)
        return cls({tuple(exp): coeff})

    # -- inspection ----------------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        """Doubled exponent vectors mapped to coefficients (a copy)."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables(self) -> set[str]:
        return {VARIABLES[i] for exp in self._terms for i, e in enumerate(exp) if e}

    def coefficient(self, **powers) -> int:
        exp = [0] * _NVARS
        for name, p in powers.items():
            exp[_INDEX[name]] = int(Fraction(p) * 2)
        return self._terms.get(tuple(exp), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, key=_key):
            c = self._terms[exp]
            mono = "*".join(_fmt_power(VARIABLES[i], e) for i, e in enumerate(exp) if e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    # -- arithmetic ----------------------------------------------------------------

    @staticmethod
    def _lift(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        out = LaurentPoly._raw(self._terms, self._idem | other._idem)
        for exp, c in other._terms.items():
            out._add(exp, c)
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self._idem)

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._lift(other)
        out = LaurentPoly._raw({}, self._idem | other._idem)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out._add(tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers need a monomial")
            ((exp, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative powers need a unit coefficient")
            return LaurentPoly._raw({tuple(-e * -k for e in exp): c ** (-k)}, self._idem)
        result = LaurentPoly._raw({_ZERO: 1}, self._idem)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def half_power(self, doubled: int) -> "LaurentPoly":
        """``self ** (doubled / 2)``; odd values need a monomial whose
        coefficient is a perfect square and whose exponents are integers."""
        if doubled % 2 == 0:
            return self ** (doubled // 2)
        if not self.is_monomial():
            raise HalfPowerNotSquare("half powers are only taken of monomials")
        ((exp, c),) = self._terms.items()
        root = _int_sqrt(c)
        if root is None or any(e % 2 for e in exp):
            raise HalfPowerNotSquare(f"{self} is not a perfect square monomial")
        sq = LaurentPoly._raw({tuple(e // 2 for e in exp): root}, self._idem)
        return sq ** doubled

    # -- substitution and evaluation ---------------------------------------------

    def substitute(self, mapping: Mapping[str, "LaurentPoly | int"]) -> "LaurentPoly":
        """Simultaneously replace variables by polynomials.

        Variables missing from ``mapping`` are kept.  The result does not
        inherit the idempotent reduction.
        """
        subs = {_INDEX[k]: LaurentPoly._lift(v) for k, v in mapping.items()}
        cache: dict[tuple[int, int], LaurentPoly] = {}
        out = LaurentPoly()
        for exp, c in self._terms.items():
            kept = [0] * _NVARS
            parts = []
            for i, e in enumerate(exp):
                if not e:
                    continue
                if i in subs:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = subs[i].half_power(e)
                    parts.append(cache[key])
                else:
                    kept[i] = e
            # expand the product of the substituted factors into ``out``
            acc = {tuple(kept): c}
            for part in parts:
                nxt: dict = {}
                for e1, c1 in acc.items():
                    for e2, c2 in part._terms.items():
                        k = tuple(a + b for a, b in zip(e1, e2))
                        nxt[k] = nxt.get(k, 0) + c1 * c2
                acc = nxt
            for k, v in acc.items():
                out._add(k, v)
        return out

    def evaluate(self, assignment: Mapping[str, "int | Fraction"]) -> Fraction:
        """Exact value at rational points.  Odd doubled exponents require
        the assigned value to be the square of a rational."""
        vals = {_INDEX[k]: Fraction(v) for k, v in assignment.items()}
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = Fraction(c)
            for i, e in enumerate(exp):
                if not e:
                    continue
                if i not in vals:
                    raise KeyError(f"no value given for {VARIABLES[i]}")
                v = vals[i]
                if e < 0 and v == 0:
                    raise ZeroToNegativePower(f"{VARIABLES[i]} = 0 raised to a negative power")
                if e % 2:
                    root = _frac_sqrt(v)
                    if root is None:
                        raise HalfPowerNotSquare(f"{VARIABLES[i]} = {v} is not a rational square")
                    term *= root ** e
                else:
                    term *= v ** (e // 2)
            total += term
        return total

    def max_power(self, name: str) -> Fraction:
        i = _INDEX[name]
        return Fraction(max((e[i] for e in self._terms), default=0), 2)

    def min_power(self, name: str) -> Fraction:
        i = _INDEX[name]
        return Fraction(min((e[i] for e in self._terms), default=0), 2)


def var(name: str, power: Fraction | int = 1) -> LaurentPoly:
    return LaurentPoly.var(name, power)


def const(c: int) -> LaurentPoly:
    return LaurentPoly.const(c)


def binomial_shift(name: str, k: int, shift: int = -1) -> LaurentPoly:
    """(name + shift)^k for k >= 0, expanded."""
    i = _INDEX[name]
    terms = {}
    for j in range(k + 1):
        exp = [0] * _NVARS
        exp[i] = 2 * j
        terms[tuple(exp)] = comb(k, j) * shift ** (k - j)
    return LaurentPoly(terms)


def clear_reciprocal(p: LaurentPoly, name: str, denominator: LaurentPoly, degree: int) -> LaurentPoly:
    """denominator^degree * p(name -> 1/denominator), for p whose exponents
    in ``name`` are integers between 0 and ``degree``."""
    i = _INDEX[name]
    out = LaurentPoly()
    for exp, c in p.terms.items():
        e = exp[i]
        if e % 2 or e < 0 or e // 2 > degree:
            raise ValueError(f"exponent of {name} out of range for clearing")
        rest = list(exp)
        rest[i] = 0
        out = out + LaurentPoly({tuple(rest): c}) * denominator ** (degree - e // 2)
    return out
