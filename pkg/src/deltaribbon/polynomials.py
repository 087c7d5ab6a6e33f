"""Tutte, Las Vergnas, Bollobás-Riordan and Krushkal polynomials of
delta-matroids, by subset expansion."""

from __future__ import annotations

from collections import Counter
from functools import cached_property
from math import comb

from .dm import DeltaMatroid, dual, lower_matroid, restriction_masks, upper_matroid
from .elements import popcount
from .errors import GroundTooLarge
from .laurent import VARIABLES, LaurentPoly

MAX_POLY_ELEMENTS = 16
_IX = {v: i for i, v in enumerate(VARIABLES)}


def _rank_table(m: DeltaMatroid) -> list[int]:
    """r_M(A) for every mask A of a matroid M."""
    bases = list(m.feasible)
    return [max(popcount(a & b) for b in bases) for a in range(1 << m.size)]


class SubsetData:
    """Per-subset quantities shared by all the polynomials.

    Doubled sigma values are kept as integers: ``sigma2[A]`` equals
    r((D|A)_max) + r((D|A)_min).
    """

    def __init__(self, d: DeltaMatroid):
        if d.size > MAX_POLY_ELEMENTS:
            raise GroundTooLarge(f"polynomials are limited to {MAX_POLY_ELEMENTS} elements")
        self.d = d
        self.n = d.size
        self.full = d.full

    @cached_property
    def r_min(self) -> list[int]:
        return _rank_table(lower_matroid(self.d))

    @cached_property
    def r_max(self) -> list[int]:
        return _rank_table(upper_matroid(self.d))

    @cached_property
    def _restrictions(self) -> list[tuple[int, int, int]]:
        """(min size, max size, parity flag) of D|A for each mask A."""
        out = []
        for a in range(1 << self.n):
            sizes = [popcount(f) for f in restriction_masks(self.d, a)]
            odd = 1 if len({s & 1 for s in sizes}) > 1 else 0
            out.append((min(sizes), max(sizes), odd))
        return out

    @cached_property
    def width(self) -> list[int]:
        """w_D(A) = w(D|A)."""
        return [hi - lo for lo, hi, _ in self._restrictions]

    @cached_property
    def t(self) -> list[int]:
        return [odd for _, _, odd in self._restrictions]

    @cached_property
    def sigma2(self) -> list[int]:
        return [lo + hi for lo, hi, _ in self._restrictions]

    @cached_property
    def rho(self) -> list[int]:
        fam = list(self.d.feasible)
        return [self.n - min(popcount(a ^ f) for f in fam) for a in range(1 << self.n)]


def _sum_terms(patterns: Counter, shifted: dict[str, int], idempotent=()) -> LaurentPoly:
    """Expand sum over patterns of coeff * prod (v + shift_v)^{e_v} * v^{e_v}.

    ``patterns`` maps doubled exponent tuples (over VARIABLES) to counts.
    Variables listed in ``shifted`` carry the factor (v + shift) instead of v;
    their exponents must be non-negative integers.
    """
    terms: dict[tuple[int, ...], int] = {}
    for exp, count in patterns.items():
        partial = {tuple(exp): count}
        for name, shift in shifted.items():
            i = _IX[name]
            nxt: dict[tuple[int, ...], int] = {}
            for e, c in partial.items():
                k = e[i] // 2
                for j in range(k + 1):
                    new = list(e)
                    new[i] = 2 * j
                    new = tuple(new)
                    nxt[new] = nxt.get(new, 0) + c * comb(k, j) * shift ** (k - j)
            partial = nxt
        for e, c in partial.items():
            terms[e] = terms.get(e, 0) + c
    return LaurentPoly(terms, idempotent=idempotent)


def _exp(**powers) -> tuple[int, ...]:
    """Doubled exponent vector from integer or doubled keyword powers."""
    e = [0] * len(VARIABLES)
    for k, v in powers.items():
        e[_IX[k]] = v
    return tuple(e)


def tutte(d: DeltaMatroid, data: SubsetData | None = None) -> LaurentPoly:
    """T(D; x, y) = T(D_min; x, y)."""
    s = data or SubsetData(d)
    r, full = s.r_min, s.full
    pats = Counter()
    for a in range(1 << s.n):
        pats[_exp(x=2 * (r[full] - r[a]), y=2 * (popcount(a) - r[a]))] += 1
    return _sum_terms(pats, {"x": -1, "y": -1})


def las_vergnas(d: DeltaMatroid, data: SubsetData | None = None) -> LaurentPoly:
    s = data or SubsetData(d)
    rmin, rmax, full = s.r_min, s.r_max, s.full
    pats = Counter()
    for a in range(1 << s.n):
        zexp = rmax[full] - rmin[full] - (rmax[a] - rmin[a])
        pats[_exp(x=2 * (rmin[full] - rmin[a]), y=2 * (popcount(a) - rmax[a]), z=2 * zexp)] += 1
    return _sum_terms(pats, {"x": -1, "y": -1})


def bollobas_riordan(d: DeltaMatroid, data: SubsetData | None = None) -> LaurentPoly:
    """R(D; x, y, z, w) in Z[x, y, z, w] / (w^2 - w)."""
    s = data or SubsetData(d)
    r, full = s.r_min, s.full
    pats = Counter()
    for a in range(1 << s.n):
        pats[_exp(x=2 * (r[full] - r[a]), y=2 * (popcount(a) - r[a]), z=2 * s.width[a], w=2 * s.t[a])] += 1
    return _sum_terms(pats, {"x": -1}, idempotent=("w",))


def br_two_var(d: DeltaMatroid, data: SubsetData | None = None) -> LaurentPoly:
    """The shifted two-variable polynomial R~(D; x + 1, y + 1).

    It equals the sum over A of x^(sigma(E) - sigma(A)) y^(|A| - sigma(A)).
    The shift keeps half-integer powers on monomials, where they are exact;
    substitute x -> x - 1, y -> y - 1 mentally to read R~(D; x, y) itself.
    """
    s = data or SubsetData(d)
    sig, full = s.sigma2, s.full
    pats = Counter()
    for a in range(1 << s.n):
        pats[_exp(x=sig[full] - sig[a], y=2 * popcount(a) - sig[a])] += 1
    return LaurentPoly(pats)


def krushkal(d: DeltaMatroid, data: SubsetData | None = None, dual_data: SubsetData | None = None) -> LaurentPoly:
    """K(D; x, y, a, b) from its definition via D and D*."""
    s = data or SubsetData(d)
    sd = dual_data or SubsetData(dual(d))
    r, rd, full = s.r_min, sd.r_min, s.full
    pats = Counter()
    for a in range(1 << s.n):
        c = full & ~a
        pats[_exp(x=2 * (r[full] - r[a]), y=2 * (rd[full] - rd[c]), a=2 * s.width[a], b=2 * sd.width[c])] += 1
    return _sum_terms(pats, {"x": -1})


def krushkal_rank_form(d: DeltaMatroid, data: SubsetData | None = None, dual_data: SubsetData | None = None) -> LaurentPoly:
    """K(D; x, y, a, b) with every exponent written through rank functions
    (rho and the lower matroids of D and D*)."""
    s = data or SubsetData(d)
    sd = dual_data or SubsetData(dual(d))
    r, rd, full = s.r_min, sd.r_min, s.full

    def null(rank, mask):
        return popcount(mask) - rank[mask]

    pats = Counter()
    for a in range(1 << s.n):
        c = full & ~a
        kx = r[full] - r[a]
        ky = rd[full] - rd[c]
        ka = s.rho[a] - r[a] - null(r, full) + null(r, a)
        kb = sd.rho[c] - rd[c] - null(rd, full) + null(rd, c)
        pats[_exp(x=2 * kx, y=2 * ky, a=2 * ka, b=2 * kb)] += 1
    return _sum_terms(pats, {"x": -1})


POLYNOMIALS = {
    "tutte": tutte,
    "lv": las_vergnas,
    "br": bollobas_riordan,
    "br2": br_two_var,
    "krushkal": krushkal,
}


def polynomial(d: DeltaMatroid, which: str) -> LaurentPoly:
    try:
        fn = POLYNOMIALS[which]
    except KeyError:
        raise ValueError(f"unknown polynomial {which!r}; choose from {sorted(POLYNOMIALS)}") from None
    return fn(d)
