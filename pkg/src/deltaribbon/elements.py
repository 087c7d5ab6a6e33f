"""Labels, bit indices and small bitmask helpers."""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import UnknownElement

_DIGITS = re.compile(r"(\d+)")


@lru_cache(maxsize=1 << 16)
def natural_key(label: str):
    """Sort key that orders ``e2`` before ``e10``."""
    parts = _DIGITS.split(str(label))
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in parts if p != "")


def sort_labels(labels: Iterable) -> tuple[str, ...]:
    return tuple(sorted({str(x) for x in labels}, key=natural_key))


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class ElementMap:
    """Bijection between element labels and bit positions.

    Labels are stored as strings in natural order, so two maps built from
    the same label set always agree on bit positions.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable):
        self.labels: tuple[str, ...] = sort_labels(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label) -> bool:
        return str(label) in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, ElementMap) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"ElementMap({list(self.labels)!r})"

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownElement(f"unknown element {label!r}") from None

    def bit(self, label) -> int:
        return 1 << self.index(label)

    def to_mask(self, labels: Iterable) -> int:
        if isinstance(labels, (str, int)):
            labels = [labels]
        mask = 0
        for lab in labels:
            mask |= self.bit(lab)
        return mask

    def to_set(self, mask: int) -> frozenset[str]:
        return frozenset(self.labels[i] for i in bits(mask))

    def to_sorted(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(mask))


def as_label_sequence(items) -> Sequence[str]:
    """Accept ``"a,b"``, a single label, or any iterable of labels."""
    if items is None:
        return ()
    if isinstance(items, str):
        return tuple(s for s in (p.strip() for p in items.split(",")) if s)
    if isinstance(items, int):
        return (str(items),)
    return tuple(str(x) for x in items)
