"""Delta-matroids stored as families of bitmasks over an ordered ground set."""

from __future__ import annotations

import enum
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .elements import ElementMap, as_label_sequence, bits, popcount
from .errors import (
    EmptyFeasibleFamily,
    EmptyToggle,
    GroundOverlap,
    NotADeltaMatroid,
    NotAMatroid,
    OverlappingMinorSets,
)

MAX_ELEMENTS = 24


class DeltaMatroid:
    """A set system ``(E, F)`` with ``F`` non-empty.

    Feasible sets are kept as bitmasks relative to :attr:`elements`.  The
    exchange axiom is only verified when ``check=True``; results of the
    operations in this module are delta-matroids whenever their inputs are.
    """

    __slots__ = ("elements", "feasible", "__dict__")

    def __init__(self, ground: Iterable, feasible: Iterable[Iterable], check: bool = False):
        self.elements = ElementMap(as_label_sequence(ground))
        if len(self.elements) > MAX_ELEMENTS:
            raise ValueError(f"at most {MAX_ELEMENTS} elements are supported")
        self.feasible = frozenset(self.elements.to_mask(as_label_sequence(f)) for f in feasible)
        if not self.feasible:
            raise EmptyFeasibleFamily("a delta-matroid needs at least one feasible set")
        if check:
            res = check_symmetric_exchange(self)
            if not res.ok:
                raise NotADeltaMatroid(f"exchange axiom fails at {res.witness}")

    @classmethod
    def _from_masks(cls, elements: ElementMap, masks: Iterable[int]) -> "DeltaMatroid":
        obj = cls.__new__(cls)
        obj.elements = elements
        obj.feasible = frozenset(masks)
        if not obj.feasible:
            raise EmptyFeasibleFamily("a delta-matroid needs at least one feasible set")
        return obj

    @property
    def ground(self) -> tuple[str, ...]:
        return self.elements.labels

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return self.elements.full

    def mask(self, items) -> int:
        if isinstance(items, int) and not isinstance(items, bool):
            if items & ~self.full:
                raise ValueError(f"mask {items:#x} has bits outside the ground set")
            return items
        return self.elements.to_mask(as_label_sequence(items))

    def feasible_sets(self) -> list[frozenset[str]]:
        """Feasible sets sorted by size, then lexicographically."""
        return [self.elements.to_set(m) for m in self._sorted_masks()]

    def _sorted_masks(self) -> list[int]:
        els = self.elements
        return sorted(self.feasible, key=lambda m: (popcount(m), [els.index(x) for x in els.to_sorted(m)]))

    def is_feasible(self, items) -> bool:
        return self.mask(items) in self.feasible

    def __eq__(self, other) -> bool:
        if not isinstance(other, DeltaMatroid):
            return NotImplemented
        return self.elements == other.elements and self.feasible == other.feasible

    def __hash__(self) -> int:
        return hash((self.elements, self.feasible))

    def __repr__(self) -> str:
        fs = ", ".join("{" + ",".join(self.elements.to_sorted(m)) + "}" for m in self._sorted_masks())
        return f"DeltaMatroid(ground={list(self.ground)}, feasible=[{fs}])"

    @cached_property
    def sizes(self) -> tuple[int, int]:
        """(smallest, largest) feasible-set size."""
        s = [popcount(m) for m in self.feasible]
        return min(s), max(s)


def set_system(ground, feasible) -> DeltaMatroid:
    """Alias that makes intent explicit: a set system with no axiom check."""
    return DeltaMatroid(ground, feasible)


def trivial() -> DeltaMatroid:
    return DeltaMatroid((), [()])


# -- axiom ----------------------------------------------------------------------


class ExchangeResult(NamedTuple):
    ok: bool
    witness: tuple[frozenset[str], frozenset[str], str] | None

    def __bool__(self) -> bool:
        return self.ok


def _exchange_failure(elements: ElementMap, family: frozenset[int]):
    n = len(elements)
    fam = family
    for x in sorted(fam):
        # ok[u] = mask of v with x ^ {u, v} feasible
        ok = [0] * n
        for u in range(n):
            bu = 1 << u
            c = 0
            xu = x ^ bu
            for v in range(n):
                if (xu ^ (1 << v) if v != u else xu) in fam:
                    c |= 1 << v
            ok[u] = c
        for y in sorted(fam):
            d = x ^ y
            for u in bits(d):
                if not d & ok[u]:
                    return x, y, u
    return None


def _exchange_failure_np(n: int, family: frozenset[int]):
    """Vectorised form of :func:`_exchange_failure` (same first witness)."""
    size = 1 << n
    inf = np.zeros(size, dtype=bool)
    fam = np.fromiter(sorted(family), dtype=np.int64, count=len(family))
    inf[fam] = True
    allx = np.arange(size, dtype=np.int64)
    # ok[:, u] = mask of v with X ^ {u, v} feasible, for every X
    ok = np.zeros((size, n), dtype=np.int64)
    for u in range(n):
        xu = allx ^ (1 << u)
        for v in range(n):
            hit = inf[xu if v == u else xu ^ (1 << v)]
            ok[:, u] |= hit.astype(np.int64) << v
    okf = ok[fam]
    d = fam[:, None] ^ fam[None, :]
    first = None
    for u in range(n):
        bad = ((d >> u) & 1).astype(bool) & ((d & okf[:, u][:, None]) == 0)
        if bad.any():
            i, j = np.argwhere(bad)[0]
            cand = (int(i), int(j), u)
            if first is None or cand < first:
                first = cand
    if first is None:
        return None
    i, j, u = first
    return int(fam[i]), int(fam[j]), u


def _find_failure(elements: ElementMap, family: frozenset[int]):
    # numpy pays off once the family is more than a handful of sets
    if len(family) > 24:
        return _exchange_failure_np(len(elements), family)
    return _exchange_failure(elements, family)


def check_symmetric_exchange(system, ground=None) -> ExchangeResult:
    """Check the symmetric exchange axiom.

    ``system`` is a :class:`DeltaMatroid` (possibly built without checks)
    or, with ``ground`` given, an iterable of feasible sets or masks.
    """
    if isinstance(system, DeltaMatroid):
        elements, fam = system.elements, system.feasible
    else:
        elements = ElementMap(as_label_sequence(ground))
        fam = frozenset(m if isinstance(m, int) else elements.to_mask(as_label_sequence(m)) for m in system)
    if not fam:
        raise EmptyFeasibleFamily("the exchange axiom is only defined for proper set systems")
    bad = _find_failure(elements, fam)
    if bad is None:
        return ExchangeResult(True, None)
    x, y, u = bad
    return ExchangeResult(False, (elements.to_set(x), elements.to_set(y), elements.labels[u]))


def masks_exchange_ok(elements: ElementMap, masks) -> bool:
    """Boolean form of the axiom on raw masks (empty families fail)."""
    fam = frozenset(masks)
    return bool(fam) and _find_failure(elements, fam) is None


# -- twists and minors -----------------------------------------------------------


def twist(d: DeltaMatroid, items) -> DeltaMatroid:
    a = d.mask(items)
    if a == 0:
        return d
    return DeltaMatroid._from_masks(d.elements, (f ^ a for f in d.feasible))


def dual(d: DeltaMatroid) -> DeltaMatroid:
    return twist(d, d.full)


def is_loop(d: DeltaMatroid, e) -> bool:
    b = d.elements.bit(e)
    return all(not f & b for f in d.feasible)


def is_coloop(d: DeltaMatroid, e) -> bool:
    b = d.elements.bit(e)
    return all(f & b for f in d.feasible)


def _drop_element(elements: ElementMap, idx: int, masks) -> DeltaMatroid:
    """Remove bit ``idx`` (which must be clear in every mask) and reindex."""
    low = (1 << idx) - 1
    new = ElementMap(lab for i, lab in enumerate(elements.labels) if i != idx)
    return DeltaMatroid._from_masks(new, ((m & low) | ((m >> 1) & ~low) for m in masks))


def delete(d: DeltaMatroid, e) -> DeltaMatroid:
    """D\\e; a coloop is contracted instead."""
    idx = d.elements.index(e)
    b = 1 << idx
    if is_coloop(d, e):
        return _drop_element(d.elements, idx, (f ^ b for f in d.feasible))
    return _drop_element(d.elements, idx, (f for f in d.feasible if not f & b))


def contract(d: DeltaMatroid, e) -> DeltaMatroid:
    """D/e; a loop is deleted instead."""
    idx = d.elements.index(e)
    b = 1 << idx
    if is_loop(d, e):
        return _drop_element(d.elements, idx, d.feasible)
    return _drop_element(d.elements, idx, (f ^ b for f in d.feasible if f & b))


def minor(d: DeltaMatroid, delete_set=(), contract_set=()) -> DeltaMatroid:
    """D\\X/Y: delete X one element at a time, then contract Y."""
    xs = as_label_sequence(delete_set)
    ys = as_label_sequence(contract_set)
    for lab in list(xs) + list(ys):
        d.elements.index(lab)
    if set(xs) & set(ys):
        raise OverlappingMinorSets(f"elements {sorted(set(xs) & set(ys))} both deleted and contracted")
    for lab in xs:
        d = delete(d, lab)
    for lab in ys:
        d = contract(d, lab)
    return d


def restrict(d: DeltaMatroid, items) -> DeltaMatroid:
    """D|A := D \\ (E - A)."""
    a = d.mask(items)
    return minor(d, d.elements.to_sorted(d.full & ~a))


def restriction_masks(d: DeltaMatroid, a: int) -> frozenset[int]:
    """Feasible masks of D|A, kept in the bit positions of ``d``.

    Take any feasible F0 meeting E - A in as few elements as possible and
    let Y = F0 - A.  The feasible sets of D|A are the F - Y with F feasible
    and F - A = Y.
    """
    out = d.full & ~a
    f0 = min(d.feasible, key=lambda f: popcount(f & out))
    y = f0 & out
    return frozenset(f ^ y for f in d.feasible if f & out == y)


# -- rank-type parameters --------------------------------------------------------


def rho(d: DeltaMatroid, items) -> int:
    a = d.mask(items)
    return d.size - min(popcount(a ^ f) for f in d.feasible)


def rho_table(d: DeltaMatroid) -> list[int]:
    """rho(A) for every mask A, computed in one numpy pass."""
    fam = np.fromiter(d.feasible, dtype=np.int64, count=len(d.feasible))
    masks = np.arange(1 << d.size, dtype=np.int64)
    dist = np.bitwise_count(masks[:, None] ^ fam[None, :]).min(axis=1)
    return (d.size - dist).astype(int).tolist()


def lower_matroid(d: DeltaMatroid) -> DeltaMatroid:
    lo = d.sizes[0]
    return DeltaMatroid._from_masks(d.elements, (f for f in d.feasible if popcount(f) == lo))


def upper_matroid(d: DeltaMatroid) -> DeltaMatroid:
    hi = d.sizes[1]
    return DeltaMatroid._from_masks(d.elements, (f for f in d.feasible if popcount(f) == hi))


def width(d: DeltaMatroid) -> int:
    lo, hi = d.sizes
    return hi - lo


def is_even(d: DeltaMatroid) -> bool:
    parity = {popcount(f) & 1 for f in d.feasible}
    return len(parity) == 1


def is_matroid(d: DeltaMatroid) -> bool:
    lo, hi = d.sizes
    return lo == hi


def matroid_rank(m: DeltaMatroid, items=None) -> int:
    """r_M(A) = max |A ∩ B| over bases B; ``items=None`` gives r(M)."""
    if not is_matroid(m):
        raise NotAMatroid("rank is only defined here for matroids")
    a = m.full if items is None else m.mask(items)
    return max(popcount(a & b) for b in m.feasible)


def matroid_nullity(m: DeltaMatroid, items=None) -> int:
    a = m.full if items is None else m.mask(items)
    return popcount(a) - matroid_rank(m, a)


# -- loops and coloops -----------------------------------------------------------


class ElementClass(str, enum.Enum):
    COLOOP = "coloop"
    LOOP = "loop"
    # a trivial orientable ribbon loop lies in no feasible set, so it is a loop
    RIBBON_LOOP_ORIENTABLE_TRIVIAL = "loop"
    RIBBON_LOOP_ORIENTABLE_NONTRIVIAL = "ribbon-loop-orientable-nontrivial"
    RIBBON_LOOP_NONORIENTABLE_TRIVIAL = "ribbon-loop-nonorientable-trivial"
    RIBBON_LOOP_NONORIENTABLE_NONTRIVIAL = "ribbon-loop-nonorientable-nontrivial"
    ORDINARY = "ordinary"

    def __str__(self) -> str:
        return self.value


def is_ribbon_loop(d: DeltaMatroid, e) -> bool:
    return is_loop(lower_matroid(d), e)


def element_class(d: DeltaMatroid, e) -> ElementClass:
    b = d.elements.bit(e)
    if is_coloop(d, e):
        return ElementClass.COLOOP
    if not is_ribbon_loop(d, e):
        return ElementClass.ORDINARY
    if is_ribbon_loop(twist(d, b), e):
        if all(f ^ b in d.feasible for f in d.feasible):
            return ElementClass.RIBBON_LOOP_NONORIENTABLE_TRIVIAL
        return ElementClass.RIBBON_LOOP_NONORIENTABLE_NONTRIVIAL
    if is_loop(d, e):
        return ElementClass.LOOP
    return ElementClass.RIBBON_LOOP_ORIENTABLE_NONTRIVIAL


# -- spreads, toggles and sums ----------------------------------------------------


def spread_masks(d: DeltaMatroid, n: int) -> frozenset[int]:
    if n < 0:
        raise ValueError("n must be non-negative")
    layer = set(d.feasible)
    seen = set(layer)
    for _ in range(n):
        nxt = set()
        for f in layer:
            for i in range(d.size):
                g = f ^ (1 << i)
                if g not in seen:
                    nxt.add(g)
        seen |= nxt
        layer = nxt
        if not layer:
            break
    return frozenset(seen)


def spread(d: DeltaMatroid, n: int) -> DeltaMatroid:
    """The n-spread: all F △ A with F feasible and |A| <= n."""
    return DeltaMatroid._from_masks(d.elements, spread_masks(d, n))


def toggle_masks(d: DeltaMatroid, n: int) -> frozenset[int]:
    if n == 0:
        return d.feasible
    return spread_masks(d, n) - spread_masks(d, n - 1)


def toggle(d: DeltaMatroid, n: int) -> DeltaMatroid:
    """The n-toggle: the n-spread minus the (n-1)-spread."""
    fam = toggle_masks(d, n)
    if not fam:
        raise EmptyToggle(f"the {n}-toggle has no feasible sets")
    return DeltaMatroid._from_masks(d.elements, fam)


def dm_sum(d1: DeltaMatroid, d2: DeltaMatroid) -> DeltaMatroid:
    """Pairwise symmetric differences of feasible sets (same ground set)."""
    if d1.elements != d2.elements:
        raise ValueError("summands must share their ground set")
    return DeltaMatroid._from_masks(d1.elements, {f ^ g for f in d1.feasible for g in d2.feasible})


def direct_sum(d1: DeltaMatroid, d2: DeltaMatroid) -> DeltaMatroid:
    common = set(d1.ground) & set(d2.ground)
    if common:
        raise GroundOverlap(f"ground sets share {sorted(common)}")
    els = ElementMap(d1.ground + d2.ground)
    p = [els.to_mask(d1.elements.to_sorted(f)) for f in d1.feasible]
    q = [els.to_mask(d2.elements.to_sorted(f)) for f in d2.feasible]
    return DeltaMatroid._from_masks(els, {a | b for a in p for b in q})


def uniform(r: int, m: int, labels=None) -> DeltaMatroid:
    """U_{r,m} on elements ``1..m`` (or the given labels)."""
    if not 0 <= r <= m:
        raise ValueError("need 0 <= r <= m")
    labels = [str(i + 1) for i in range(m)] if labels is None else list(labels)
    els = ElementMap(labels)
    return DeltaMatroid._from_masks(els, (x for x in range(1 << m) if popcount(x) == r))


def plus(d: DeltaMatroid, items) -> DeltaMatroid:
    """D + A: F is feasible when an odd number of feasible F' satisfy
    F - A ⊆ F' ⊆ F.  No vf-safety check is made."""
    a = d.mask(items)
    # parity of the subset sums over the coordinates in A
    ind = np.zeros(1 << d.size, dtype=np.uint8)
    ind[list(d.feasible)] = 1
    masks = np.arange(1 << d.size)
    for i in bits(a):
        has = (masks >> i & 1).astype(bool)
        ind[has] ^= ind[masks[has] ^ (1 << i)]
    out = np.flatnonzero(ind).tolist()
    if not out:
        raise EmptyFeasibleFamily("D + A has no feasible sets")
    return DeltaMatroid._from_masks(d.elements, out)


# -- connectivity -----------------------------------------------------------------


def _split_masks(d: DeltaMatroid):
    n = d.size
    fam = d.feasible
    full = d.full
    for side in range(1, 1 << max(n - 1, 0)):
        # bit n-1 always on the second side so each bipartition is seen once
        e1 = side
        e2 = full & ~e1
        if not e2:
            continue
        p1 = {f & e1 for f in fam}
        p2 = {f & e2 for f in fam}
        if len(p1) * len(p2) == len(fam):
            return e1, e2
    return None


def split(d: DeltaMatroid):
    """A factorisation (D|E1, D|E2) witnessing disconnection, or ``None``."""
    res = _split_masks(d)
    if res is None:
        return None
    e1, e2 = res
    return restrict(d, e1), restrict(d, e2)


def is_connected(d: DeltaMatroid) -> bool:
    return _split_masks(d) is None


def is_separable(d: DeltaMatroid) -> bool:
    return not is_connected(lower_matroid(d))
