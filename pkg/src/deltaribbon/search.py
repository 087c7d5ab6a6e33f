"""Isomorphism, minor containment and twist-of-matroid recognition."""

from __future__ import annotations

import itertools
from collections import Counter
from typing import NamedTuple

from .dm import DeltaMatroid, is_matroid, lower_matroid, minor, twist
from .elements import bits, popcount


def _signatures(d: DeltaMatroid) -> list[tuple[int, ...]]:
    """Per element, how many feasible sets of each size contain it."""
    n = d.size
    table = [[0] * (n + 1) for _ in range(n)]
    for f in d.feasible:
        s = popcount(f)
        for i in bits(f):
            table[i][s] += 1
    return [tuple(row) for row in table]


def _size_profile(d: DeltaMatroid) -> Counter:
    return Counter(popcount(f) for f in d.feasible)


def find_isomorphism(d1: DeltaMatroid, d2: DeltaMatroid) -> dict[str, str] | None:
    """A ground-set bijection carrying F(d1) onto F(d2), or ``None``."""
    n = d1.size
    if n != d2.size or len(d1.feasible) != len(d2.feasible):
        return None
    if _size_profile(d1) != _size_profile(d2):
        return None
    s1, s2 = _signatures(d1), _signatures(d2)
    if sorted(s1) != sorted(s2):
        return None
    # place elements with rare signatures first
    freq = Counter(s1)
    order = sorted(range(n), key=lambda i: (freq[s1[i]], s1[i]))
    fam1 = list(d1.feasible)
    fam2 = list(d2.feasible)
    image = [-1] * n
    used = [False] * n

    def extend(depth: int, keys1: list[int], keys2_of) -> bool:
        if depth == n:
            return True
        i = order[depth]
        b1 = 1 << i
        nk1 = [(k << 1) | (1 if f & b1 else 0) for k, f in zip(keys1, fam1)]
        c1 = Counter(nk1)
        for j in range(n):
            if used[j] or s2[j] != s1[i]:
                continue
            b2 = 1 << j
            nk2 = [(k << 1) | (1 if f & b2 else 0) for k, f in zip(keys2_of, fam2)]
            if Counter(nk2) != c1:
                continue
            used[j] = True
            image[i] = j
            if extend(depth + 1, nk1, nk2):
                return True
            used[j] = False
        return False

    if not extend(0, [0] * len(fam1), [0] * len(fam2)):
        return None
    return {d1.ground[i]: d2.ground[image[i]] for i in range(n)}


def is_isomorphic(d1: DeltaMatroid, d2: DeltaMatroid) -> bool:
    return find_isomorphism(d1, d2) is not None


def canonical_form(d: DeltaMatroid) -> tuple[int, tuple[int, ...]]:
    """Isomorphism-invariant key: lexicographically least sorted mask tuple
    over all ground-set permutations.  Exponential; meant for |E| <= 6."""
    n = d.size
    fam = list(d.feasible)
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(sum(1 << perm[i] for i in bits(f)) for f in fam))
        if best is None or key < best:
            best = key
    return n, best


class MinorWitness(NamedTuple):
    deleted: tuple[str, ...]
    contracted: tuple[str, ...]
    mapping: dict[str, str]


def find_minor(d: DeltaMatroid, target: DeltaMatroid) -> MinorWitness | None:
    """Search all disjoint (X, Y) of the right size for D\\X/Y ≅ target."""
    n, m = d.size, target.size
    if m > n:
        return None
    labels = d.ground
    for removed in itertools.combinations(range(n), n - m):
        for pick in range(1 << len(removed)):
            xs = tuple(labels[r] for k, r in enumerate(removed) if not pick >> k & 1)
            ys = tuple(labels[r] for k, r in enumerate(removed) if pick >> k & 1)
            mapping = find_isomorphism(minor(d, xs, ys), target)
            if mapping is not None:
                return MinorWitness(xs, ys, mapping)
    return None


def has_minor(d: DeltaMatroid, target: DeltaMatroid) -> bool:
    return find_minor(d, target) is not None


# -- twists of matroids ----------------------------------------------------------


def matroid_twists(d: DeltaMatroid) -> list[int]:
    """All masks A with D*A a matroid (direct search)."""
    out = []
    fam = list(d.feasible)
    for a in range(1 << d.size):
        size = popcount(fam[0] ^ a)
        if all(popcount(f ^ a) == size for f in fam):
            out.append(a)
    return out


def _is_separating(m: DeltaMatroid, a: int) -> bool:
    """Whether the bases of the matroid ``m`` split over (A, E - A)."""
    other = m.full & ~a
    p1 = {f & a for f in m.feasible}
    p2 = {f & other for f in m.feasible}
    return len(p1) * len(p2) == len(m.feasible)


def twist_is_matroid_structural(d: DeltaMatroid, a: int) -> bool:
    """Decide whether D*A is a matroid without forming the twist, for a
    non-empty proper A: A separates D_min and D\\A, D\\A^c are matroids."""
    if a == 0 or a == d.full:
        raise ValueError("A must be a non-empty proper subset")
    if not _is_separating(lower_matroid(d), a):
        return False
    inside = d.elements.to_sorted(a)
    outside = d.elements.to_sorted(d.full & ~a)
    return is_matroid(minor(d, inside)) and is_matroid(minor(d, outside))


def is_twist_of_matroid(d: DeltaMatroid, method: str = "search") -> bool:
    """Whether some twist of D is a matroid.

    ``method="search"`` tries every A; ``method="structure"`` tests A = ∅
    and A = E directly and every other A through the separation criterion.
    """
    if method == "search":
        return bool(matroid_twists(d))
    if method == "structure":
        if is_matroid(d) or is_matroid(twist(d, d.full)):
            return True
        return any(twist_is_matroid_structural(d, a) for a in range(1, d.full))
    raise ValueError(f"unknown method {method!r}")


# -- isomorphism classes ---------------------------------------------------------


def invariant_key(d: DeltaMatroid) -> tuple:
    """A cheap isomorphism invariant (equal for isomorphic delta-matroids)."""
    return d.size, tuple(sorted(_size_profile(d).items())), tuple(sorted(_signatures(d)))


class IsoClasses:
    """Collects delta-matroids, keeping one representative per
    isomorphism class."""

    def __init__(self):
        self._buckets: dict[tuple, list[DeltaMatroid]] = {}
        self.representatives: list[DeltaMatroid] = []

    def add(self, d: DeltaMatroid) -> bool:
        """Record ``d``; True when it starts a new class."""
        bucket = self._buckets.setdefault(invariant_key(d), [])
        for other in bucket:
            if other.feasible == d.feasible and other.elements == d.elements:
                return False
            if find_isomorphism(other, d) is not None:
                return False
        bucket.append(d)
        self.representatives.append(d)
        return True

    def __len__(self) -> int:
        return len(self.representatives)
