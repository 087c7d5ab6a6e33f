"""Text formats: ``.rg`` ribbon graphs and ``.dm`` delta-matroids.

``.rg``::

    # comment
    vertex v1: h1 h2 h3
    edge e: h1 h2 +

``.dm``::

    ground: a b c
    feasible:
    feasible: a b
"""

from __future__ import annotations

import re

from .dm import DeltaMatroid
from .elements import natural_key
from .errors import DeltaRibbonError, ParseError
from .ribbon import RibbonGraph, build

_TOKEN = re.compile(r"\S+")


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _tokens(text: str, start_col: int):
    """(token, 1-based column) pairs in ``text`` offset by ``start_col``."""
    return [(m.group(0), start_col + m.start() + 1) for m in _TOKEN.finditer(text)]


def _split_head(line: str, lineno: int, keywords: tuple[str, ...]):
    """Split ``keyword [name]: rest`` into its parts."""
    if ":" not in line:
        raise ParseError("missing ':'", lineno, len(line.rstrip()) + 1)
    colon = line.index(":")
    head = line[:colon].split()
    if not head:
        raise ParseError("missing keyword", lineno, 1)
    kw = head[0]
    if kw not in keywords:
        col = line.index(kw) + 1
        raise ParseError(f"unknown keyword {kw!r}; expected one of {', '.join(keywords)}", lineno, col)
    return kw, head[1:], colon


# -- ribbon graphs -------------------------------------------------------------------


def parse_rg(text: str) -> RibbonGraph:
    vertices = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        kw, names, colon = _split_head(line, lineno, ("vertex", "edge"))
        if len(names) != 1:
            raise ParseError(f"{kw} needs exactly one identifier before ':'", lineno, line.index(kw) + 1)
        toks = _tokens(line[colon + 1:], colon + 1)
        if kw == "vertex":
            vertices.append((names[0], [t for t, _ in toks]))
        else:
            if len(toks) != 3:
                col = toks[3][1] if len(toks) > 3 else len(line.rstrip()) + 1
                raise ParseError("edge needs two half-edges and a sign", lineno, col)
            (a, _), (b, _), (s, scol) = toks
            if s not in ("+", "-"):
                raise ParseError(f"sign must be '+' or '-', got {s!r}", lineno, scol)
            edges.append((names[0], a, b, 1 if s == "+" else -1))
    return build(vertices, edges)


def _rotation_from_least(rot: tuple[str, ...]) -> tuple[str, ...]:
    if not rot:
        return rot
    i = rot.index(min(rot))
    return rot[i:] + rot[:i]


def format_rg(g: RibbonGraph) -> str:
    """Canonical text: vertices and edges sorted by label, each rotation
    starting at its least half-edge identifier."""
    lines = []
    for vid, rot in sorted(g.vertices, key=lambda x: natural_key(x[0])):
        body = " ".join(_rotation_from_least(rot))
        lines.append(f"vertex {vid}: {body}".rstrip())
    for lab, a, b, s in sorted(g.edges, key=lambda x: natural_key(x[0])):
        lines.append(f"edge {lab}: {a} {b} {'+' if s > 0 else '-'}")
    return "\n".join(lines) + "\n"


def read_rg(path) -> RibbonGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_rg(fh.read())


# -- delta-matroids ------------------------------------------------------------------


def parse_dm(text: str) -> DeltaMatroid:
    ground = None
    feasible = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        kw, names, colon = _split_head(line, lineno, ("ground", "feasible"))
        if names:
            raise ParseError(f"unexpected text before ':' in {kw} line", lineno, line.index(names[0]) + 1)
        toks = _tokens(line[colon + 1:], colon + 1)
        if kw == "ground":
            if ground is not None:
                raise ParseError("ground set given twice", lineno, 1)
            labels = [t for t, _ in toks]
            seen = set()
            for t, col in toks:
                if t in seen:
                    raise ParseError(f"element {t!r} repeated", lineno, col)
                seen.add(t)
            ground = labels
        else:
            if ground is None:
                raise ParseError("'feasible' line before the 'ground' line", lineno, 1)
            members = set(ground)
            for t, col in toks:
                if t not in members:
                    raise ParseError(f"element {t!r} is not in the ground set", lineno, col)
            feasible.append([t for t, _ in toks])
    if ground is None:
        raise ParseError("missing 'ground' line")
    if not feasible:
        raise ParseError("no feasible sets given")
    try:
        return DeltaMatroid(ground, feasible)
    except DeltaRibbonError as exc:
        raise ParseError(str(exc)) from None


def format_dm(d: DeltaMatroid) -> str:
    """Canonical text: ground in natural order, feasible sets sorted
    lexicographically as sequences of ground positions."""
    els = d.elements
    lines = ["ground: " + " ".join(d.ground) if d.ground else "ground:"]
    rows = sorted(els.to_sorted(f) for f in d.feasible)
    rows.sort(key=lambda r: [els.index(x) for x in r])
    for r in rows:
        lines.append(("feasible: " + " ".join(r)) if r else "feasible:")
    return "\n".join(lines) + "\n"


def read_dm(path) -> DeltaMatroid:
    with open(path, encoding="utf-8") as fh:
        return parse_dm(fh.read())
