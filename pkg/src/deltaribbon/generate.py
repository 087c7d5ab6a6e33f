"""Random and exhaustive instance generators."""

from __future__ import annotations

import json
import os
import random
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .dm import DeltaMatroid, masks_exchange_ok, twist, direct_sum, dm_sum, spread, uniform
from .elements import ElementMap
from .ribbon import RibbonGraph, build, delta_matroid

# -- ribbon graphs ---------------------------------------------------------------


def random_ribbon_graph(rng: random.Random, max_edges: int, max_vertices: int = 4,
                        min_edges: int = 0) -> RibbonGraph:
    """Uniform vertex count, uniform edge count, random rotations and a fair
    coin for every sign.  Vertices may end up isolated."""
    nv = rng.randint(1, max_vertices)
    ne = rng.randint(min_edges, max_edges)
    halves = [f"h{i}" for i in range(2 * ne)]
    rng.shuffle(halves)
    rotations = {f"v{i}": [] for i in range(nv)}
    for h in halves:
        rotations[f"v{rng.randrange(nv)}"].append(h)
    pool = halves[:]
    rng.shuffle(pool)
    edges = {}
    for i in range(ne):
        edges[f"e{i + 1}"] = (pool[2 * i], pool[2 * i + 1], rng.choice((1, -1)))
    return build(rotations, edges)


def _canonical_code(rots: list[list[int]], partner: list[int], sign: list[int]) -> tuple:
    """Code of a connected signed rotation system that is invariant under
    relabelling and under flipping vertices.

    ``rots`` lists half-edge ids per vertex, ``partner`` pairs half-edges and
    ``sign[h]`` is the sign of the edge containing half-edge h.  The code is
    the least, over all roots and directions, of a breadth-first reading.
    """
    if not partner:
        return ((0,),)
    nh = len(partner)
    nv = len(rots)
    vtx = [0] * nh
    pos = [0] * nh
    for vi, rot in enumerate(rots):
        for p, h in enumerate(rot):
            vtx[h] = vi
            pos[h] = p
    key = [min(h, partner[h]) for h in range(nh)]
    # every code opens with the root degree, so only minimum-degree roots matter
    low = min(len(r) for r in rots if r)
    roots = [h for r in rots if len(r) == low for h in r]
    best = None
    for h0 in roots:
        for d0 in (1, -1):
            odir = [0] * nv
            ostart = [0] * nv
            vi0 = vtx[h0]
            odir[vi0] = d0
            ostart[vi0] = h0
            queue = [vi0]
            edge_id = [-1] * nh
            order = []
            nid = 0
            code = []
            # 0: tied with best so far, -1: already smaller, 1: abandoned
            state = 0 if best is not None else -1
            qi = 0
            while qi < len(queue):
                vi = queue[qi]
                qi += 1
                o = odir[vi]
                rot = rots[vi]
                n = len(rot)
                p0 = pos[ostart[vi]]
                block = [n]
                for step in range(n):
                    h = rot[(p0 + o * step) % n]
                    k = key[h]
                    if edge_id[k] < 0:
                        edge_id[k] = nid
                        order.append(k)
                        nid += 1
                        ow = partner[h]
                        wv = vtx[ow]
                        if not odir[wv]:
                            odir[wv] = o * sign[h]
                            ostart[wv] = ow
                            queue.append(wv)
                    block.append(edge_id[k])
                block = tuple(block)
                if state == 0:
                    other = best[0][len(code)]
                    if block > other:
                        state = 1
                        break
                    if block < other:
                        state = -1
                code.append(block)
            if state == 1:
                continue
            # effective signs after the flips
            signs = tuple(sign[k] * odir[vtx[k]] * odir[vtx[partner[k]]] for k in order)
            full = (tuple(code), signs)
            if best is None or full < best:
                best = full
    return best


def _to_graph(rots: list[list[int]], partner: list[int], sign: list[int]) -> RibbonGraph:
    rotations = {f"v{i + 1}": [f"h{h}" for h in rot] for i, rot in enumerate(rots)}
    edges = {}
    k = 0
    for h in range(len(partner)):
        if h < partner[h]:
            k += 1
            edges[f"e{k}"] = (f"h{h}", f"h{partner[h]}", sign[h])
    return build(rotations, edges)


def _cache_file(max_edges: int) -> Path | None:
    root = os.environ.get("DELTARIBBON_CACHE")
    if root == "":
        return None
    base = Path(root) if root else Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "deltaribbon"
    return base / f"connected-{max_edges}.json"


@lru_cache(maxsize=None)
def _connected_layers(max_edges: int) -> tuple[tuple[tuple, ...], ...]:
    """Layers 0..max_edges of the connected tier.  Large tiers are cached on
    disk (set DELTARIBBON_CACHE to a directory, or to "" to disable)."""
    path = _cache_file(max_edges) if max_edges >= 5 else None
    if path is not None:
        for bigger in range(max_edges, max_edges + 3):
            cached = _cache_file(bigger)
            if not cached.exists():
                continue
            try:
                data = json.loads(cached.read_text())
            except (OSError, ValueError):
                continue
            return tuple(tuple(tuple(item) for item in layer) for layer in data[: max_edges + 1])
    layers = _build_layers(max_edges)
    if path is not None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps(layers, separators=(",", ":")))
            tmp.replace(path)
        except OSError:
            pass
    return layers


def _build_layers(max_edges: int) -> tuple[tuple[tuple, ...], ...]:
    layers = []
    layer = {_canonical_code([[]], [], []): ([[]], [], [])}
    layers.append(tuple(layer.values()))
    for _ in range(max_edges):
        nxt = {}
        for rots, partner, sign in layer.values():
            h1, h2 = len(partner), len(partner) + 1

            def add(new_rots):
                np_ = list(partner) + [h2, h1]
                for s in ((1,) if len(new_rots) > len(rots) else (1, -1)):
                    ns = list(sign) + [s, s]
                    code = _canonical_code(new_rots, np_, ns)
                    if code not in nxt:
                        nxt[code] = (new_rots, np_, ns)

            for vi, rot in enumerate(rots):
                d = len(rot)
                # pendant edge to a new vertex
                for p in range(max(d, 1)):
                    nr = [list(r) for r in rots]
                    nr[vi] = rot[:p] + [h1] + rot[p:]
                    nr.append([h2])
                    add(nr)
                # loop at vi
                for p in range(max(d, 1)):
                    r1 = rot[:p] + [h1] + rot[p:]
                    for q in range(d + 1):
                        nr = [list(r) for r in rots]
                        nr[vi] = r1[:q + 1] + [h2] + r1[q + 1:]
                        add(nr)
                # edge to a later vertex
                for wi in range(vi + 1, len(rots)):
                    rw = rots[wi]
                    for p in range(max(d, 1)):
                        for q in range(max(len(rw), 1)):
                            nr = [list(r) for r in rots]
                            nr[vi] = rot[:p] + [h1] + rot[p:]
                            nr[wi] = rw[:q] + [h2] + rw[q:]
                            add(nr)
        layer = nxt
        layers.append(tuple(layer.values()))
    return tuple(layers)


def connected_ribbon_graphs(max_edges: int) -> Iterator[RibbonGraph]:
    """Every connected ribbon graph with at most ``max_edges`` edges, once
    per class under relabelling and vertex flips."""
    for layer in _connected_layers(max_edges):
        for rots, partner, sign in layer:
            yield _to_graph(rots, partner, sign)


def count_connected(max_edges: int) -> list[int]:
    return [len(layer) for layer in _connected_layers(max_edges)]


def one_vertex_graphs(max_loops: int) -> Iterator[RibbonGraph]:
    for layer in _connected_layers(max_loops):
        for rots, partner, sign in layer:
            if len(rots) == 1:
                yield _to_graph(rots, partner, sign)


# -- delta-matroids ----------------------------------------------------------------


def random_family(rng: random.Random, n: int, density: float = 0.3) -> frozenset[int]:
    fam = {m for m in range(1 << n) if rng.random() < density}
    if not fam:
        fam.add(rng.randrange(1 << n))
    return frozenset(fam)


def random_symmetric_matrix(rng: random.Random, n: int) -> list[list[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = rng.randint(0, 1)
        for j in range(i + 1, n):
            c[i][j] = c[j][i] = rng.randint(0, 1)
    return c


def random_delta_matroid(rng: random.Random, max_elements: int, min_elements: int = 1) -> DeltaMatroid:
    """A mixture of ribbon-graphic, binary, filtered random and composite
    delta-matroids, each randomly twisted."""
    from .rep import dm_from_matrix
    from .rep import S_CATALOG as SI

    n = rng.randint(min_elements, max_elements)
    labels = [str(i + 1) for i in range(n)]
    kind = rng.randrange(6)
    if kind == 0:
        for _ in range(50):
            g = random_ribbon_graph(rng, n, min_edges=n)
            d = delta_matroid(g)
            d = d.__class__(labels, [[labels[int(lab[1:]) - 1] for lab in s] for s in d.feasible_sets()])
            break
    elif kind == 1:
        d = dm_from_matrix(random_symmetric_matrix(rng, n), labels)
    elif kind == 2 and n <= 4:
        els = ElementMap(labels)
        while True:
            fam = random_family(rng, n, rng.choice((0.15, 0.3, 0.5)))
            if masks_exchange_ok(els, fam):
                d = DeltaMatroid._from_masks(els, fam)
                break
    elif kind == 3:
        # direct sum of a catalog piece and something ribbon-graphic
        piece = rng.choice(list(SI.values()))
        if piece.size > n:
            return random_delta_matroid(rng, max_elements, min_elements)
        rest = n - piece.size
        p = DeltaMatroid(labels[: piece.size], [[labels[piece.ground.index(x)] for x in s] for s in piece.feasible_sets()])
        if rest:
            g = random_ribbon_graph(rng, rest, min_edges=rest)
            q = delta_matroid(g)
            q = DeltaMatroid(labels[piece.size:], [[labels[piece.size + int(lab[1:]) - 1] for lab in s] for s in q.feasible_sets()])
            d = direct_sum(p, q)
        else:
            d = p
    elif kind == 4:
        r = rng.randint(0, n)
        d = uniform(r, n, labels)
        if rng.random() < 0.5:
            d = spread(d, 1) if r % 2 == 0 and rng.random() < 0.5 else d
    else:
        d1 = dm_from_matrix(random_symmetric_matrix(rng, n), labels)
        g = random_ribbon_graph(rng, n, min_edges=n)
        q = delta_matroid(g)
        q = DeltaMatroid(labels, [[labels[int(lab[1:]) - 1] for lab in s] for s in q.feasible_sets()])
        cand = dm_sum(d1, q)
        d = cand if masks_exchange_ok(cand.elements, cand.feasible) else d1
    a = rng.randrange(1 << d.size) if d.size else 0
    return twist(d, a)


def all_delta_matroids(n: int) -> Iterator[DeltaMatroid]:
    """Every delta-matroid on ground set 1..n, once per isomorphism class.

    Enumerates all 2^(2^n) families, so only n <= 4 is practical.
    """
    from .search import canonical_form

    if n > 4:
        raise ValueError("exhaustive enumeration is limited to 4 elements")
    labels = [str(i + 1) for i in range(n)]
    els = ElementMap(labels)
    seen = set()
    total = 1 << n
    for code in range(1, 1 << total):
        fam = frozenset(m for m in range(total) if code >> m & 1)
        if not masks_exchange_ok(els, fam):
            continue
        d = DeltaMatroid._from_masks(els, fam)
        key = canonical_form(d)
        if key in seen:
            continue
        seen.add(key)
        yield d
