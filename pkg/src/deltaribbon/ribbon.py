"""Ribbon graphs as signed rotation systems.

A ribbon graph is stored as a list of vertices, each carrying the cyclic
(clockwise) order of the half-edges attached to it, and a list of edges,
each pairing two half-edges and carrying a sign.  A sign of ``-1`` marks a
half-twisted edge.

Internally every edge is expanded into four *flags*, the corners of the
edge rectangle.  Half-edge ``h`` (index ``2*i`` or ``2*i + 1`` for edge
``i``) owns the flags ``2*h`` (its left corner, facing the previous
half-edge in the rotation) and ``2*h + 1`` (its right corner).  Three
fixed-point-free involutions act on the flags:

* the *end* pairing joins the two corners of a half-edge end,
* the *side* pairing joins corners along the long sides of an edge,
* the *vertex* pairing joins the right corner of a half-edge to the left
  corner of the next half-edge around the vertex.

Vertices are orbits of (end, vertex), edges are orbits of (end, side) and
boundary components are orbits of (side, vertex).  Partial duality with
respect to ``A`` swaps the end and side pairings on the flags of ``A``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence

import numba
import numpy as np

from .dm import DeltaMatroid, is_connected
from .elements import ElementMap, as_label_sequence, bits, natural_key, popcount
from .errors import DanglingHalfEdge, MalformedRotation, UnknownEdge, UnknownVertex


class SubParams(NamedTuple):
    """Standard parameters of a spanning ribbon subgraph ``(V, A)``."""

    f: int
    k: int
    r: int
    n: int
    gamma: int
    t: int


def _parse_sign(sign) -> int:
    if sign in (1, "+", "+1"):
        return 1
    if sign in (-1, "-", "-1"):
        return -1
    raise MalformedRotation(f"edge sign must be +1 or -1, got {sign!r}")


@dataclass(frozen=True)
class RibbonGraph:
    """An immutable signed rotation system.

    Use :func:`build` to construct one; the constructor itself expects the
    already-canonical tuples and performs no validation.
    """

    vertices: tuple[tuple[str, tuple[str, ...]], ...]
    edges: tuple[tuple[str, str, str, int], ...]

    # -- derived lookup tables -------------------------------------------------

    @cached_property
    def elements(self) -> ElementMap:
        return _element_map(tuple(e[0] for e in self.edges))

    @cached_property
    def _tables(self):
        """Integer tables used by every traversal.

        Half-edge ``2*i`` is the first listed end of edge ``i`` and
        ``2*i + 1`` its second end.
        """
        hindex = {}
        signs = []
        for i, (_, a, b, s) in enumerate(self.edges):
            hindex[a] = 2 * i
            hindex[b] = 2 * i + 1
            signs.append(s)
        rots = [tuple(hindex[h] for h in rot) for _, rot in self.vertices]
        hvert = [0] * (2 * len(self.edges))
        for vi, rot in enumerate(rots):
            for h in rot:
                hvert[h] = vi
        return rots, hvert, signs

    @cached_property
    def _vertex_index(self) -> dict[str, int]:
        return {vid: i for i, (vid, _) in enumerate(self.vertices)}

    # -- basic counts ------------------------------------------------------------

    @property
    def v(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def edge_labels(self) -> tuple[str, ...]:
        return self.elements.labels

    @property
    def full_mask(self) -> int:
        return self.elements.full

    @cached_property
    def _params(self) -> SubParams:
        full = self.full_mask
        if "face_table" in self.__dict__:
            f = self.face_table[full]
        else:
            f = self._faces(full)
        k, t = self._kt
        r = self.v - k
        return SubParams(f=f, k=k, r=r, n=self.e - r, gamma=2 * k - self.v + self.e - f, t=t)

    @cached_property
    def _kt(self) -> tuple[int, int]:
        return self._components(self.full_mask)

    @property
    def k(self) -> int:
        return self._kt[0]

    @property
    def f(self) -> int:
        return self._params.f

    @property
    def gamma(self) -> int:
        return self._params.gamma

    @property
    def t(self) -> int:
        return self._kt[1]

    @property
    def r(self) -> int:
        return self._params.r

    @property
    def n(self) -> int:
        return self._params.n

    @property
    def is_orientable(self) -> bool:
        return self.t == 0

    def mask(self, edges) -> int:
        """Bitmask of an edge subset given as labels (or an int mask)."""
        if isinstance(edges, int) and not isinstance(edges, bool):
            if edges & ~self.full_mask:
                raise UnknownEdge(f"mask {edges:#x} has bits outside the edge set")
            return edges
        try:
            return self.elements.to_mask(as_label_sequence(edges))
        except KeyError as exc:
            raise UnknownEdge(str(exc)) from None

    def edge(self, label) -> tuple[str, str, str, int]:
        i = self.elements.index(label) if label in self.elements else None
        if i is None:
            raise UnknownEdge(f"unknown edge {label!r}")
        return self._edge_by_label[str(label)]

    @cached_property
    def _edge_by_label(self) -> dict[str, tuple[str, str, str, int]]:
        return {e[0]: e for e in self.edges}

    def edge_ends(self, label) -> tuple[str, str]:
        """Vertex ids at the two ends of an edge."""
        _, a, b, _ = self.edge(label)
        return self._hvertex_id[a], self._hvertex_id[b]

    @cached_property
    def _hvertex_id(self) -> dict[str, str]:
        return {h: vid for vid, rot in self.vertices for h in rot}

    def is_loop(self, label) -> bool:
        u, w = self.edge_ends(label)
        return u == w

    # -- spanning subgraph parameters -----------------------------------------

    def _edge_bit(self, h: int) -> int:
        return 1 << self.elements.index(self.edges[h >> 1][0])

    @cached_property
    def _edge_bits(self) -> tuple[int, ...]:
        # bit (in the natural label order) of edge i in storage order
        return tuple(1 << self.elements.index(lab) for lab, *_ in self.edges)

    def boundary_components(self, edges=None) -> int:
        """f(A): number of boundary components of the spanning subgraph (V, A)."""
        return self._faces(self.full_mask if edges is None else self.mask(edges))

    def _faces(self, mask: int) -> int:
        rots, _, signs = self._tables
        ebits = self._edge_bits
        nxt = {}
        prv = {}
        count = 0
        for rot in rots:
            act = [h for h in rot if ebits[h >> 1] & mask]
            if not act:
                count += 1
                continue
            last = act[-1]
            for h in act:
                nxt[last] = h
                prv[h] = last
                last = h
        seen = set()
        for h in nxt:
            for start in (2 * h, 2 * h + 1):
                if start in seen:
                    continue
                count += 1
                x = start
                while True:
                    seen.add(x)
                    # side pairing
                    hh = x >> 1
                    p = hh ^ 1
                    if signs[hh >> 1] > 0:
                        y = 2 * p + (1 - (x & 1))
                    else:
                        y = 2 * p + (x & 1)
                    seen.add(y)
                    # vertex pairing
                    if y & 1:
                        x = 2 * nxt[y >> 1]
                    else:
                        x = 2 * prv[y >> 1] + 1
                    if x == start:
                        break
        return count

    def _components(self, mask: int) -> tuple[int, int]:
        """(k(A), t(A)) by union-find with a parity label per vertex."""
        rots, hvert, signs = self._tables
        ebits = self._edge_bits
        parent = list(range(len(rots)))
        parity = [0] * len(rots)

        def find(x):
            par = 0
            root = x
            while parent[root] != root:
                par ^= parity[root]
                root = parent[root]
            # path compression keeping parities relative to the root
            result = par
            while parent[x] != root:
                nxt_, px = parent[x], parity[x]
                parent[x] = root
                parity[x] = par
                par ^= px
                x = nxt_
            return root, result

        k = len(rots)
        twisted = 0
        for i, s in enumerate(signs):
            if not ebits[i] & mask:
                continue
            u, w = hvert[2 * i], hvert[2 * i + 1]
            odd = 1 if s < 0 else 0
            ru, pu = find(u)
            rw, pw = find(w)
            if ru == rw:
                if pu ^ pw ^ odd:
                    twisted = 1
            else:
                parent[ru] = rw
                parity[ru] = pu ^ pw ^ odd
                k -= 1
        return k, twisted

    def sub_params_mask(self, mask: int) -> SubParams:
        f = self._faces(mask)
        k, t = self._components(mask)
        size = popcount(mask)
        r = self.v - k
        return SubParams(f=f, k=k, r=r, n=size - r, gamma=2 * k - self.v + size - f, t=t)

    def sub_params(self, edges=()) -> SubParams:
        """(f, k, r, n, gamma, t) of the spanning subgraph (V, A)."""
        return self.sub_params_mask(self.mask(edges))

    @cached_property
    def face_table(self) -> tuple[int, ...]:
        """f(A) for every edge subset, indexed by bitmask.

        For a subset X, let tau act on a flag as the side pairing when its
        edge is in X and as the end pairing otherwise.  The boundary
        components of (V, X) are then the orbits of <tau, vertex pairing>;
        vertices without half-edges are counted separately.
        """
        return tuple(int(c) for c in face_tables([self])[0])

    # -- feasible families -------------------------------------------------------

    def quasi_tree_masks(self) -> frozenset[int]:
        k = self.k
        return frozenset(m for m, f in enumerate(self.face_table) if f == k)

    def spanning_quasi_trees(self) -> list[frozenset[str]]:
        """Edge sets of all spanning quasi-trees, sorted by size then labels."""
        els = self.elements
        masks = sorted(self.quasi_tree_masks(), key=lambda m: (popcount(m), els.to_sorted(m)))
        return [els.to_set(m) for m in masks]

    def feasible_families_n(self, n: int) -> tuple[frozenset[frozenset[str]], frozenset[frozenset[str]]]:
        """(F_{<=n}(G), F_n(G)) as families of edge-label sets."""
        if n < 0:
            raise ValueError("n must be non-negative")
        k = self.k
        els = self.elements
        upto = frozenset(els.to_set(m) for m, f in enumerate(self.face_table) if f <= k + n)
        exact = frozenset(els.to_set(m) for m, f in enumerate(self.face_table) if f == k + n)
        return upto, exact

    def family_masks(self, n: int, exact: bool = False) -> frozenset[int]:
        k = self.k
        if exact:
            return frozenset(m for m, f in enumerate(self.face_table) if f == k + n)
        return frozenset(m for m, f in enumerate(self.face_table) if f <= k + n)

    # -- flag model --------------------------------------------------------------

    def _flag_involutions(self):
        """(end, side, vertex) pairings as fresh lists indexed by flag."""
        return tuple(list(p) for p in self._flags)

    @cached_property
    def _flags(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        rots, _, signs = self._tables
        nflags = 4 * len(self.edges)
        end = [x ^ 1 for x in range(nflags)]
        side = [0] * nflags
        for x in range(nflags):
            hh = x >> 1
            p = hh ^ 1
            side[x] = 2 * p + (1 - (x & 1)) if signs[hh >> 1] > 0 else 2 * p + (x & 1)
        vert = [0] * nflags
        for rot in rots:
            if not rot:
                continue
            last = rot[-1]
            for h in rot:
                vert[2 * last + 1] = 2 * h
                vert[2 * h] = 2 * last + 1
                last = h
        return tuple(end), tuple(side), tuple(vert)

    # -- constructions -----------------------------------------------------------

    def partial_dual(self, edges) -> "RibbonGraph":
        """The partial dual G^A."""
        mask = self.mask(edges)
        if mask == 0:
            return self
        ebits = self._edge_bits
        end0, side0, vert = self._flags
        end = list(end0)
        side = list(side0)
        for i, b in enumerate(ebits):
            if b & mask:
                for x in range(4 * i, 4 * i + 4):
                    end[x], side[x] = side0[x], end0[x]
        return _from_flags(self.edges, end, side, vert, self._isolated_vertices())

    def dual(self) -> "RibbonGraph":
        return self.partial_dual(self.full_mask)

    def _isolated_vertices(self) -> list[str]:
        return [vid for vid, rot in self.vertices if not rot]

    def partial_petrial(self, edges) -> "RibbonGraph":
        """G + A: add a half-twist to every edge of A."""
        mask = self.mask(edges)
        els = self.elements
        new_edges = tuple(
            (lab, a, b, -s if els.bit(lab) & mask else s) for lab, a, b, s in self.edges
        )
        return RibbonGraph(self.vertices, new_edges)

    def delete_edges(self, edges) -> "RibbonGraph":
        mask = self.mask(edges)
        gone = set()
        kept = []
        for lab, a, b, s in self.edges:
            if self.elements.bit(lab) & mask:
                gone.update((a, b))
            else:
                kept.append((lab, a, b, s))
        verts = tuple((vid, tuple(h for h in rot if h not in gone)) for vid, rot in self.vertices)
        return RibbonGraph(verts, tuple(kept))

    def delete_edge(self, label) -> "RibbonGraph":
        self.edge(label)
        return self.delete_edges([label])

    def contract_edge(self, label) -> "RibbonGraph":
        """G/e, computed as the partial dual G^{e} with e then deleted."""
        self.edge(label)
        return self.partial_dual([label]).delete_edges([label])

    def delete_vertex(self, vid) -> "RibbonGraph":
        vid = str(vid)
        if vid not in self._vertex_index:
            raise UnknownVertex(f"unknown vertex {vid!r}")
        hv = self._hvertex_id
        incident = [lab for lab, a, b, _ in self.edges if hv[a] == vid or hv[b] == vid]
        g = self.delete_edges(incident)
        verts = tuple(x for x in g.vertices if x[0] != vid)
        return RibbonGraph(verts, g.edges)

    def restrict(self, edges) -> "RibbonGraph":
        """The spanning subgraph (V, A)."""
        return self.delete_edges(self.full_mask & ~self.mask(edges))

    def mirror(self) -> "RibbonGraph":
        """Reverse every rotation (the mirror image)."""
        verts = tuple((vid, tuple(reversed(rot))) for vid, rot in self.vertices)
        return RibbonGraph(verts, self.edges)

    def flip_vertex(self, vid) -> "RibbonGraph":
        """Reverse the rotation at one vertex and toggle the signs of its
        non-loop edges.  The result is an equivalent ribbon graph."""
        vid = str(vid)
        if vid not in self._vertex_index:
            raise UnknownVertex(f"unknown vertex {vid!r}")
        hv = self._hvertex_id
        verts = tuple((v, tuple(reversed(rot)) if v == vid else rot) for v, rot in self.vertices)
        edges = tuple(
            (lab, a, b, -s if (hv[a] == vid) != (hv[b] == vid) else s)
            for lab, a, b, s in self.edges
        )
        return RibbonGraph(verts, edges)

    def relabel(self, prefix: str = "", edge_prefix: str | None = None) -> "RibbonGraph":
        """Prefix all vertex ids and half-edge ids (and edge labels when
        ``edge_prefix`` is given)."""
        ep = prefix if edge_prefix is None else edge_prefix
        verts = tuple((prefix + vid, tuple(prefix + h for h in rot)) for vid, rot in self.vertices)
        edges = tuple((ep + lab, prefix + a, prefix + b, s) for lab, a, b, s in self.edges)
        return _canonical(verts, edges)

    def rename_edges(self, mapping: Mapping[str, str]) -> "RibbonGraph":
        edges = tuple((str(mapping.get(lab, lab)), a, b, s) for lab, a, b, s in self.edges)
        return _canonical(self.vertices, edges)

    def vertex_rotation(self, vid) -> tuple[str, ...]:
        vid = str(vid)
        try:
            return self.vertices[self._vertex_index[vid]][1]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {vid!r}") from None

    def __repr__(self) -> str:
        vs = "; ".join(f"{vid}: {' '.join(rot)}" for vid, rot in self.vertices)
        es = "; ".join(f"{lab}: {a} {b} {'+' if s > 0 else '-'}" for lab, a, b, s in self.edges)
        return f"RibbonGraph(vertices=[{vs}], edges=[{es}])"


@lru_cache(maxsize=4096)
def _element_map(labels: tuple[str, ...]) -> ElementMap:
    return ElementMap(labels)


def _canonical(vertices, edges) -> RibbonGraph:
    verts = tuple(sorted(((str(v), tuple(r)) for v, r in vertices), key=lambda x: natural_key(x[0])))
    eds = tuple(sorted(edges, key=lambda x: natural_key(x[0])))
    return RibbonGraph(verts, eds)


def build(rotations, edges) -> RibbonGraph:
    """Validate a signed rotation system and return the ribbon graph.

    ``rotations`` maps vertex ids to the clockwise sequence of half-edge
    ids (a mapping or a sequence of pairs).  ``edges`` maps edge labels to
    ``(half_edge_a, half_edge_b, sign)`` (a mapping or a sequence of
    4-tuples ``(label, a, b, sign)``).
    """
    rot_items = list(rotations.items()) if isinstance(rotations, Mapping) else list(rotations)
    if isinstance(edges, Mapping):
        edge_items = [(lab, *spec) for lab, spec in edges.items()]
    else:
        edge_items = [tuple(e) for e in edges]

    owner: dict[str, str] = {}
    verts = []
    seen_vertices = set()
    for vid, rot in rot_items:
        vid = str(vid)
        if vid in seen_vertices:
            raise MalformedRotation(f"vertex {vid!r} listed twice")
        seen_vertices.add(vid)
        rot = tuple(str(h) for h in rot)
        for h in rot:
            if h in owner:
                raise MalformedRotation(f"half-edge {h!r} appears more than once in the rotations")
            owner[h] = vid
        verts.append((vid, rot))

    used = set()
    eds = []
    labels = set()
    for item in edge_items:
        if len(item) != 4:
            raise MalformedRotation(f"edge specification {item!r} must be (label, a, b, sign)")
        lab, a, b, s = item
        lab, a, b = str(lab), str(a), str(b)
        if lab in labels:
            raise MalformedRotation(f"edge label {lab!r} used twice")
        labels.add(lab)
        if a == b:
            raise MalformedRotation(f"edge {lab!r} uses half-edge {a!r} twice")
        for h in (a, b):
            if h in used:
                raise MalformedRotation(f"half-edge {h!r} belongs to more than one edge")
            if h not in owner:
                raise DanglingHalfEdge(f"half-edge {h!r} of edge {lab!r} is not in any rotation")
            used.add(h)
        eds.append((lab, a, b, _parse_sign(s)))
    loose = sorted(set(owner) - used)
    if loose:
        raise DanglingHalfEdge(f"half-edges {loose} are not attached to any edge")
    return _canonical(verts, eds)


def _from_flags(edge_specs, end, side, vert, isolated: Sequence[str]) -> RibbonGraph:
    """Read a signed rotation system off three flag involutions."""
    nflags = len(end)
    seen = [False] * nflags
    rotations = []
    # each end pairing {x, end[x]} becomes a half-edge named <edge>.<k>;
    # left[name], right[name] are its two flags
    left: dict[str, int] = {}
    right: dict[str, int] = {}
    used = [0] * len(edge_specs)
    for start in range(nflags):
        if seen[start]:
            continue
        rot = []
        x = start
        while True:
            y = end[x]
            seen[x] = seen[y] = True
            ei = x >> 2
            used[ei] += 1
            name = f"{edge_specs[ei][0]}.{used[ei]}"
            left[name] = x
            right[name] = y
            rot.append(name)
            x = vert[y]
            if x == start:
                break
        rotations.append(rot)

    verts = [(f"v{i + 1}", tuple(rot)) for i, rot in enumerate(rotations)]
    if isolated:
        taken = {v for v, _ in verts}
        for vid in isolated:
            new = vid
            while new in taken:
                new = new + "'"
            taken.add(new)
            verts.append((new, ()))

    eds = []
    for spec in edge_specs:
        lab = spec[0]
        h1, h2 = f"{lab}.1", f"{lab}.2"
        sign = 1 if side[right[h1]] == left[h2] else -1
        eds.append((lab, h1, h2, sign))
    return _canonical(verts, eds)


# -- convenience constructors --------------------------------------------------


def face_tables(graphs: Sequence[RibbonGraph]) -> np.ndarray:
    """Face tables of several ribbon graphs with the same number of edges,
    computed in one batch: row i holds f(A) of ``graphs[i]`` for every mask
    A (bits follow each graph's own edge order).

    For a subset X, let tau act on a flag as the side pairing when its edge
    is in X and as the end pairing otherwise.  The boundary components of
    (V, X) are the orbits of <tau, vertex pairing>; vertices without
    half-edges are counted separately.  The orbit count runs as a
    compiled numba kernel.
    """
    graphs = list(graphs)
    if not graphs:
        return np.zeros((0, 1), dtype=np.int64)
    m = graphs[0].e
    if any(g.e != m for g in graphs):
        raise ValueError("face_tables needs graphs with the same number of edges")
    bare = np.asarray([sum(1 for _, rot in g.vertices if not rot) for g in graphs], dtype=np.int64)
    if m == 0:
        return bare[:, None]
    flags = np.asarray([g._flags for g in graphs], dtype=np.int64)
    fbit = np.asarray([[bits[x >> 2] for x in range(4 * m)] for bits in (g._edge_bits for g in graphs)], dtype=np.int64)
    return _orbit_counts(flags[:, 0], flags[:, 1], flags[:, 2], fbit, 1 << m, bare)


@numba.njit(cache=True)
def _orbit_counts(end, side, vert, fbit, nmasks, bare):
    rows, nf = end.shape
    out = np.empty((rows, nmasks), np.int64)
    seen = np.zeros(nf, np.bool_)
    for r in range(rows):
        for mask in range(nmasks):
            seen[:] = False
            c = 0
            for start in range(nf):
                if seen[start]:
                    continue
                c += 1
                # the orbit alternates tau and vert and closes at its start
                x = start
                while True:
                    seen[x] = True
                    y = side[r, x] if fbit[r, x] & mask else end[r, x]
                    seen[y] = True
                    x = vert[r, y]
                    if x == start:
                        break
            out[r, mask] = c + bare[r]
    return out


def prime_face_tables(graphs: Sequence[RibbonGraph]) -> None:
    """Fill the cached face tables of many graphs with one batched pass."""
    groups: dict[int, list[RibbonGraph]] = {}
    for g in graphs:
        if "face_table" not in g.__dict__:
            groups.setdefault(g.e, []).append(g)
    for group in groups.values():
        for g, row in zip(group, face_tables(group)):
            g.__dict__["face_table"] = tuple(row.tolist())


def single_vertex(loops: str, signs: Mapping[str, int] | None = None) -> RibbonGraph:
    """One vertex whose rotation is the word ``loops``.

    Every loop label must occur exactly twice in the word, e.g. ``"abab"``
    gives two interlaced loops.  ``signs`` marks twisted loops with ``-1``.
    """
    signs = signs or {}
    word = list(loops)
    count: dict[str, int] = {}
    rot = []
    for ch in word:
        count[ch] = count.get(ch, 0) + 1
        rot.append(f"{ch}{count[ch]}")
    if any(c != 2 for c in count.values()):
        raise MalformedRotation("every loop label must occur exactly twice")
    edges = {ch: (f"{ch}1", f"{ch}2", signs.get(ch, 1)) for ch in count}
    return build({"v": rot}, edges)


def disjoint_union(g1: RibbonGraph, g2: RibbonGraph) -> RibbonGraph:
    """Disjoint union; vertex, half-edge and edge identifiers must not clash."""
    verts = list(g1.vertices) + list(g2.vertices)
    eds = list(g1.edges) + list(g2.edges)
    return build(verts, eds)


def join(g1: RibbonGraph, v1, g2: RibbonGraph, v2, at1: int = 0, at2: int = 0) -> RibbonGraph:
    """One-point join of ``g1`` and ``g2`` at vertices ``v1`` and ``v2``.

    The rotation of ``v2`` (read from position ``at2``) is inserted as one
    contiguous block into the rotation of ``v1`` just before position
    ``at1``, so no cycle of one side is interlaced with a cycle of the
    other.  Identifiers must not clash; the merged vertex keeps id ``v1``.
    """
    r1 = list(g1.vertex_rotation(v1))
    r2 = list(g2.vertex_rotation(v2))
    if r2:
        at2 %= len(r2)
        r2 = r2[at2:] + r2[:at2]
    at1 = at1 % len(r1) if r1 else 0
    merged = r1[:at1] + r2 + r1[at1:]
    verts = [(vid, tuple(merged) if vid == str(v1) else rot) for vid, rot in g1.vertices]
    verts += [(vid, rot) for vid, rot in g2.vertices if vid != str(v2)]
    return build(verts, list(g1.edges) + list(g2.edges))


# -- delta-matroids of ribbon graphs ------------------------------------------


def delta_matroid(g: RibbonGraph, n: int = 0) -> DeltaMatroid:
    """D_{<=n}(G); for ``n == 0`` this is D(G), the quasi-tree delta-matroid."""
    return DeltaMatroid._from_masks(g.elements, g.family_masks(n))


def toggle_family(g: RibbonGraph, n: int) -> frozenset[int]:
    """Bitmasks of F_n(G) (may be empty and need not be a delta-matroid)."""
    return g.family_masks(n, exact=True)


def cycle_matroid(g: RibbonGraph) -> DeltaMatroid:
    """M(G): bases are the maximal spanning forests of the underlying graph."""
    r = g.v - g.k
    bases = [m for m in range(1 << g.e) if popcount(m) == r and g._components(m)[0] == g.k]
    return DeltaMatroid._from_masks(g.elements, bases)


def is_2_connected(g: RibbonGraph) -> bool:
    """A connected ribbon graph that is not the join of two non-trivial
    ribbon graphs (checked through connectivity of D(G))."""
    return g.v > 0 and g.k == 1 and is_connected(delta_matroid(g))


# -- graph-side structure (independent of delta-matroids) ---------------------


def is_bridge(g: RibbonGraph, label) -> bool:
    g.edge(label)
    return g._components(g.full_mask & ~g.mask([label]))[0] > g.k


def _cycle_chords(g: RibbonGraph, vid: str, mask: int) -> list[tuple[int, int]]:
    """Pairs of rotation positions at ``vid`` that are the two ends at
    ``vid`` of some cycle of (V, mask) meeting ``vid`` only there."""
    rot = g.vertex_rotation(vid)
    hv = g._hvertex_id
    ebits = g._edge_bits
    rots, hvert, _ = g._tables
    vix = g._vertex_index[vid]
    # connectivity of the graph with vid removed, restricted to mask
    parent = list(range(len(rots)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(g.edges)):
        if not ebits[i] & mask:
            continue
        u, w = hvert[2 * i], hvert[2 * i + 1]
        if u == vix or w == vix:
            continue
        parent[find(u)] = find(w)

    hrec = {}
    for i, (lab, a, b, _) in enumerate(g.edges):
        if ebits[i] & mask:
            hrec[a] = (i, b)
            hrec[b] = (i, a)
    ends = []
    for pos, h in enumerate(rot):
        if h not in hrec:
            continue
        ei, other = hrec[h]
        ends.append((pos, ei, other))
    chords = []
    for (p1, e1, o1), (p2, e2, o2) in itertools.combinations(ends, 2):
        if e1 == e2:
            chords.append((p1, p2))  # a loop at vid
            continue
        u1, u2 = hv[o1], hv[o2]
        if u1 == vid or u2 == vid:
            continue
        if find(g._vertex_index[u1]) == find(g._vertex_index[u2]):
            chords.append((p1, p2))
    return chords


def _alternate(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    a, b = sorted(c1)
    x, y = c2
    return (a < x < b) != (a < y < b)


def is_trivial_loop(g: RibbonGraph, label) -> bool:
    """A loop is trivial when no cycle is interlaced with it."""
    lab, a, b, _ = g.edge(label)
    vid = g._hvertex_id[a]
    if g._hvertex_id[b] != vid:
        raise ValueError(f"edge {label!r} is not a loop")
    rot = g.vertex_rotation(vid)
    loop_chord = (rot.index(a), rot.index(b))
    others = g.full_mask & ~g.mask([lab])
    return not any(_alternate(loop_chord, c) for c in _cycle_chords(g, vid, others))


def graph_edge_class(g: RibbonGraph, label) -> str:
    """Classify an edge by looking at the ribbon graph only.

    Returns the same vocabulary as :func:`deltaribbon.dm.element_class`.
    """
    lab, a, b, s = g.edge(label)
    if not g.is_loop(lab):
        return "coloop" if is_bridge(g, lab) else "ordinary"
    trivial = is_trivial_loop(g, lab)
    if s > 0:
        return "loop" if trivial else "ribbon-loop-orientable-nontrivial"
    return "ribbon-loop-nonorientable-trivial" if trivial else "ribbon-loop-nonorientable-nontrivial"


def is_union_or_join(g: RibbonGraph) -> bool:
    """Whether G is a disjoint union or a one-point join of two ribbon
    graphs that each have at least one edge.

    Brute force over edge bipartitions: the two sides may share at most one
    vertex, and at a shared vertex no cycle of one side may be interlaced
    with a cycle of the other.
    """
    m = g.e
    if m < 2:
        return False
    hv = g._hvertex_id
    full = g.full_mask
    touch = []
    for lab, a, b, _ in g.edges:
        touch.append((g.elements.bit(lab), {hv[a], hv[b]}))
    for side in range(1, 1 << (m - 1)):
        # element 0 (highest bit kept out) always lies in the complement
        s1 = side << 1
        s2 = full & ~s1
        if s2 == 0:
            continue
        v1 = set().union(*(vs for bit, vs in touch if bit & s1))
        v2 = set().union(*(vs for bit, vs in touch if bit & s2))
        shared = v1 & v2
        if not shared:
            return True
        if len(shared) > 1:
            continue
        (vid,) = shared
        c1 = _cycle_chords(g, vid, s1)
        c2 = _cycle_chords(g, vid, s2)
        if not any(_alternate(x, y) for x in c1 for y in c2):
            return True
    return False
