"""Binary (GF(2)) representations of delta-matroids."""

from __future__ import annotations

from functools import cached_property
from typing import NamedTuple, Sequence

from .dm import DeltaMatroid, twist
from .elements import ElementMap, as_label_sequence, bits
from .errors import GroundTooLarge, NonSymmetric, NotOneVertex, ParseError
from .ribbon import RibbonGraph, build, delta_matroid, single_vertex

MAX_BINARY_ELEMENTS = 12


class Gf2Matrix:
    """A symmetric square matrix over GF(2) indexed by element labels.

    Row ``i`` is stored as an integer whose bit ``j`` is the entry (i, j).
    """

    __slots__ = ("elements", "rows")

    def __init__(self, entries: Sequence[Sequence[int]] | Sequence[str], labels=None):
        rows = [[int(c) for c in row] for row in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise NonSymmetric("matrix must be square")
        if any(c not in (0, 1) for r in rows for c in r):
            raise ValueError("entries must be 0 or 1")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise NonSymmetric(f"entries ({i}, {j}) and ({j}, {i}) differ")
        labels = [str(i + 1) for i in range(n)] if labels is None else [str(x) for x in labels]
        if len(labels) != n:
            raise ValueError("need one label per row")
        # store rows in the natural order of the labels
        self.elements = ElementMap(labels)
        perm = [labels.index(lab) for lab in self.elements.labels]
        self.rows = tuple(sum(rows[pi][pj] << j for j, pj in enumerate(perm)) for pi in perm)

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.elements.labels

    def entry(self, e, f) -> int:
        return self.rows[self.elements.index(e)] >> self.elements.index(f) & 1

    def to_lists(self) -> list[list[int]]:
        n = self.size
        return [[r >> j & 1 for j in range(n)] for r in self.rows]

    def __eq__(self, other) -> bool:
        return isinstance(other, Gf2Matrix) and self.elements == other.elements and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.elements, self.rows))

    def __repr__(self) -> str:
        body = "/".join("".join(map(str, r)) for r in self.to_lists())
        return f"Gf2Matrix({body}, labels={list(self.labels)})"

    def to_text(self) -> str:
        lines = [str(self.size)] + ["".join(map(str, r)) for r in self.to_lists()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, labels=None) -> "Gf2Matrix":
        lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
        lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise ParseError("empty matrix file")
        lineno, head = lines[0]
        try:
            n = int(head)
        except ValueError:
            raise ParseError(f"expected the matrix size, got {head!r}", lineno, 1) from None
        body = lines[1:]
        if len(body) != n:
            raise ParseError(f"expected {n} rows, found {len(body)}", lineno, 1)
        rows = []
        for i, row in body:
            if len(row) != n:
                raise ParseError(f"row has {len(row)} entries, expected {n}", i, 1)
            for col, ch in enumerate(row, 1):
                if ch not in "01":
                    raise ParseError(f"unexpected character {ch!r}", i, col)
            rows.append([int(c) for c in row])
        return cls(rows, labels)


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank over GF(2) of the rows given as bitmasks."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return len(basis)


def _principal_rows(c: Gf2Matrix, mask: int) -> list[int]:
    return [c.rows[i] & mask for i in bits(mask)]


def gf2_nonsingular(c: Gf2Matrix, items=()) -> bool:
    """Whether the principal submatrix C[A] is non-singular (C[∅] is)."""
    if isinstance(items, int) and not isinstance(items, bool):
        mask = items
    else:
        mask = c.elements.to_mask(as_label_sequence(items))
    rows = _principal_rows(c, mask)
    return gf2_rank(rows) == len(rows)


def dm_from_matrix(c: Gf2Matrix | Sequence[Sequence[int]], labels=None) -> DeltaMatroid:
    """D(C): the subsets A with C[A] non-singular."""
    if not isinstance(c, Gf2Matrix):
        c = Gf2Matrix(c, labels)
    feasible = [m for m in range(1 << c.size) if gf2_nonsingular(c, m)]
    return DeltaMatroid._from_masks(c.elements, feasible)


def interlacement_matrix(g: RibbonGraph) -> Gf2Matrix:
    """Matrix of a one-vertex ribbon graph: a 1 on the diagonal marks a
    twisted loop, an off-diagonal 1 marks an interlaced pair of loops."""
    if g.v != 1:
        raise NotOneVertex(f"expected one vertex, found {g.v}")
    rot = g.vertices[0][1]
    pos = {h: i for i, h in enumerate(rot)}
    labels = list(g.edge_labels)
    chords = {}
    for lab, a, b, s in g.edges:
        chords[lab] = tuple(sorted((pos[a], pos[b])))
    n = len(labels)
    m = [[0] * n for _ in range(n)]
    for i, e in enumerate(labels):
        m[i][i] = 1 if g.edge(e)[3] < 0 else 0
        lo, hi = chords[e]
        for j, f in enumerate(labels):
            if i == j:
                continue
            x, y = chords[f]
            m[i][j] = 1 if (lo < x < hi) != (lo < y < hi) else 0
    return Gf2Matrix(m, labels)


class BinaryResult(NamedTuple):
    ok: bool
    twist_set: frozenset[str] | None
    matrix: Gf2Matrix | None

    def __bool__(self) -> bool:
        return self.ok


def candidate_matrix(d: DeltaMatroid) -> Gf2Matrix:
    """The only symmetric C that could give D(C) = D, read off the feasible
    sets of size at most two (D must have ∅ feasible)."""
    n = d.size
    fam = d.feasible
    diag = [1 if (1 << i) in fam else 0 for i in range(n)]
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = diag[i]
        for j in range(i + 1, n):
            pair = 1 if ((1 << i) | (1 << j)) in fam else 0
            m[i][j] = m[j][i] = pair ^ (diag[i] & diag[j])
    return Gf2Matrix(m, d.ground)


def is_binary(d: DeltaMatroid) -> BinaryResult:
    """Try every feasible F: D is binary iff D*F = D(C) for the candidate
    matrix C of D*F, for some F."""
    if d.size > MAX_BINARY_ELEMENTS:
        raise GroundTooLarge(f"binary testing is limited to {MAX_BINARY_ELEMENTS} elements")
    for f in sorted(d.feasible):
        t = twist(d, f)
        c = candidate_matrix(t)
        if dm_from_matrix(c) == t:
            return BinaryResult(True, d.elements.to_set(f), c)
    return BinaryResult(False, None, None)


# -- catalog -----------------------------------------------------------------------

S1 = DeltaMatroid("1,2,3", [(), (1, 2), (1, 3), (2, 3), (1, 2, 3)])
S2 = DeltaMatroid("1,2,3", [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3)])
S3 = DeltaMatroid("1,2,3", [(), (2,), (3,), (1, 2), (1, 3), (1, 2, 3)])
S4 = DeltaMatroid("1,2,3,4", [(), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
S5 = DeltaMatroid("1,2,3,4", [(), (1, 2), (1, 4), (2, 3), (3, 4), (1, 2, 3, 4)])
X0 = DeltaMatroid("a", [(), ("a",)])

S_CATALOG = {"S1": S1, "S2": S2, "S3": S3, "S4": S4, "S5": S5}

# a single twisted loop
G0 = single_vertex("aa", {"a": -1})
# two vertices joined by a, b, c in the same cyclic order at both ends
G1 = build({"1": ["a1", "b1", "c1"], "2": ["a2", "b2", "c2"]},
           {"a": ("a1", "a2", 1), "b": ("b1", "b2", 1), "c": ("c1", "c2", 1)})
# one vertex with rotation abcabc
G2 = single_vertex("abcabc")

CATALOG = {
    **S_CATALOG,
    "X0": X0,
    "DG0": delta_matroid(G0),
    "DG1": delta_matroid(G1),
    "DG2": delta_matroid(G2),
}


def catalog_entry(name: str) -> DeltaMatroid:
    try:
        return CATALOG[name.upper()]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; choose from {sorted(CATALOG)}") from None
