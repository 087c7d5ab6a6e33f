"""Property suites behind ``deltaribbon check``.

Every check is exact.  Instances come from three tiers:

* the graph tier: every connected ribbon graph with at most ``max_edges``
  edges (one per class under relabelling and vertex flips) followed by
  1000 random ribbon graphs with at most ``max_edges + 2`` edges;
* the delta-matroid classes of the graph tier (one representative per
  isomorphism class), for checks that only see D(G);
* random and exhaustive delta-matroids for the checks stated for all
  delta-matroids.

A check fails with the first counterexample in instance order, serialized
so that it can be fed back to the CLI.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import dm as dmod
from .dm import (
    DeltaMatroid,
    check_symmetric_exchange,
    contract,
    delete,
    dual,
    element_class,
    is_connected,
    is_even,
    is_matroid,
    lower_matroid,
    matroid_rank,
    minor,
    plus,
    restrict,
    rho_table,
    spread,
    twist,
    upper_matroid,
    width,
)
from .elements import popcount
from .fixtures import (
    bridge,
    doubled_triangle,
    interlaced_loops,
    nonorientable_loop,
    orientable_loop,
    two_cycle_with_twisted_loop,
)
from .formats import format_dm, format_rg
from .generate import (
    all_delta_matroids,
    connected_ribbon_graphs,
    random_delta_matroid,
    random_ribbon_graph,
)
from .laurent import LaurentPoly, clear_reciprocal, const, var
from .polynomials import (
    SubsetData,
    bollobas_riordan,
    br_two_var,
    krushkal,
    krushkal_rank_form,
    las_vergnas,
    tutte,
)
from .rep import CATALOG, S_CATALOG, X0, dm_from_matrix, interlacement_matrix, is_binary
from .ribbon import (
    RibbonGraph,
    cycle_matroid,
    delta_matroid,
    disjoint_union,
    graph_edge_class,
    is_2_connected,
    is_union_or_join,
    join,
    prime_face_tables,
    toggle_family,
)
from .search import IsoClasses, has_minor, is_twist_of_matroid

RANDOM_GRAPHS = 1000
RANDOM_DM_RANK = 1000
RANDOM_DM_POLY = 100
RANDOM_DM_MINOR = 1000
RANDOM_ONE_VERTEX = 1000
CONSTRUCTED_JOINS = 200

CRITERIA = {
    1: "axioms",
    2: "twist/partial-dual oracle",
    3: "structure",
    4: "rank",
    5: "polynomial fixtures",
    6: "polynomial identities",
    7: "representability",
    8: "connectivity/chain",
}

SUITES = {
    "axioms": (1, 3, 4),
    "duality": (2,),
    "polys": (5, 6),
    "rep": (7,),
    "chain": (8,),
    "all": (1, 2, 3, 4, 5, 6, 7, 8),
}


# -- reports ---------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    criterion: int
    count: int = 0
    passed: bool = True
    counterexample: str | None = None
    seconds: float = 0.0
    # instance index of the counterexample, used to merge parallel runs
    first_index: int | None = None

    def record(self, index: int, failure: str | None) -> None:
        self.count += 1
        if failure is None:
            return
        self.passed = False
        if self.first_index is None or index < self.first_index:
            self.first_index = index
            self.counterexample = failure

    def merge(self, other: "CheckResult") -> None:
        self.count += other.count
        self.seconds += other.seconds
        if not other.passed:
            self.passed = False
            if self.first_index is None or other.first_index < self.first_index:
                self.first_index = other.first_index
                self.counterexample = other.counterexample


@dataclass
class SuiteReport:
    suite: str
    max_edges: int
    seed: int
    checks: list[CheckResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def criterion_passed(self, criterion: int) -> bool:
        return all(c.passed for c in self.checks if c.criterion == criterion)

    def criteria(self) -> list[int]:
        return sorted({c.criterion for c in self.checks})

    def to_text(self, timings: bool = False) -> str:
        """One line per check, then one per criterion.  Wall times are left
        out unless asked for, so equal inputs give byte-identical reports."""
        lines = [f"suite {self.suite}: max-edges {self.max_edges}, seed {self.seed}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            when = f", {c.seconds:.2f}s" if timings else ""
            lines.append(f"{status} [{c.criterion}] {c.name}: {c.count} instances{when}")
            if c.counterexample:
                body = "\n".join("    " + ln for ln in c.counterexample.rstrip().splitlines())
                lines.append(body)
        for k in self.criteria():
            status = "PASS" if self.criterion_passed(k) else "FAIL"
            lines.append(f"criterion {k} ({CRITERIA[k]}): {status}")
        when = f" ({self.seconds:.1f}s)" if timings else ""
        lines.append(("PASS" if self.passed else "FAIL") + when)
        return "\n".join(lines) + "\n"

    def to_json(self, timings: bool = False) -> str:
        checks = []
        for c in self.checks:
            row = {"name": c.name, "criterion": c.criterion, "count": c.count,
                   "passed": c.passed, "counterexample": c.counterexample}
            if timings:
                row["seconds"] = round(c.seconds, 3)
            checks.append(row)
        data = {
            "suite": self.suite,
            "max_edges": self.max_edges,
            "seed": self.seed,
            "passed": self.passed,
            "criteria": {str(k): self.criterion_passed(k) for k in self.criteria()},
            "checks": checks,
        }
        if timings:
            data["seconds"] = round(self.seconds, 3)
        return json.dumps(data, indent=2) + "\n"


# -- helpers -----------------------------------------------------------------------


def _graph_text(g: RibbonGraph, note: str) -> str:
    return f"{note}\n{format_rg(g)}"


def _dm_text(d: DeltaMatroid, note: str) -> str:
    return f"{note}\n{format_dm(d)}"


def _set(els, mask: int) -> str:
    return "{" + ",".join(els.to_sorted(mask)) + "}"


def _dm_eq(a: DeltaMatroid, b: DeltaMatroid) -> bool:
    return a.elements == b.elements and a.feasible == b.feasible


class GraphCase:
    """A tier graph with the data several checks share."""

    def __init__(self, g: RibbonGraph, scope: str = "exhaustive"):
        self.g = g
        self.scope = scope
        self.d = delta_matroid(g)
        self._rho = None

    @property
    def rho(self) -> list[int]:
        if self._rho is None:
            self._rho = rho_table(self.d)
        return self._rho


# -- criterion 1: axioms ------------------------------------------------------------


def check_exchange(case: GraphCase) -> str | None:
    g = case.g
    for n in range(4):
        fam = g.family_masks(n)
        res = check_symmetric_exchange(DeltaMatroid._from_masks(g.elements, fam))
        if not res:
            return _graph_text(g, f"F_<={n}(G) fails exchange at {res.witness}")
    return None


def check_exchange_f1(case: GraphCase) -> str | None:
    g = case.g
    if not g.is_orientable or g.e == 0:
        return None
    fam = toggle_family(g, 1)
    if not fam:
        return _graph_text(g, "F_1(G) is empty")
    res = check_symmetric_exchange(DeltaMatroid._from_masks(g.elements, fam))
    if not res:
        return _graph_text(g, f"F_1(G) fails exchange at {res.witness}")
    return None


def fixed_counterexamples() -> Iterator[str | None]:
    for g, n in ((doubled_triangle(), 2), (two_cycle_with_twisted_loop(), 1)):
        fam = toggle_family(g, n)
        if not fam:
            yield _graph_text(g, f"F_{n}(G) is empty")
            continue
        res = check_symmetric_exchange(DeltaMatroid._from_masks(g.elements, fam))
        if res or res.witness is None:
            yield _graph_text(g, f"D_{n} was expected to fail the exchange axiom")
        else:
            yield None


# -- criterion 2: partial duals ---------------------------------------------------


def check_partial_duals(case: GraphCase) -> str | None:
    g, d = case.g, case.d
    els = g.elements
    duals = [g.partial_dual(els.to_sorted(a)) for a in range(1 << g.e)]
    prime_face_tables(duals)
    for a, h in enumerate(duals):
        if h.elements != els or delta_matroid(h).feasible != twist(d, a).feasible:
            return _graph_text(g, f"D(G^A) != D(G)*A for A = {_set(els, a)}")
    return None


def check_minors(case: GraphCase) -> str | None:
    g, d = case.g, case.d
    minors = []
    for e in g.edge_labels:
        minors.append((e, "deletion", g.delete_edge(e), delete(d, e)))
        minors.append((e, "contraction", g.contract_edge(e), contract(d, e)))
    prime_face_tables([m[2] for m in minors])
    for e, kind, h, expected in minors:
        if not _dm_eq(delta_matroid(h), expected):
            return _graph_text(g, f"{kind} of {e}: D(G minor) differs from the delta-matroid minor")
    return None


def check_dual(case: GraphCase) -> str | None:
    g, d = case.g, case.d
    if not _dm_eq(delta_matroid(g.dual()), dual(d)):
        return _graph_text(g, "D(G*) != D(G)*")
    return None


# -- criterion 3: structure -------------------------------------------------------


def check_parameters(case: GraphCase) -> str | None:
    g, d = case.g, case.d
    if width(d) != g.gamma:
        return _graph_text(g, f"width {width(d)} != Euler genus {g.gamma}")
    if is_even(d) != g.is_orientable:
        return _graph_text(g, "evenness does not match orientability")
    if matroid_rank(lower_matroid(d)) != g.v - g.k:
        return _graph_text(g, "r(D_min) != v - k")
    return None


def check_lower_upper(case: GraphCase) -> str | None:
    g, d = case.g, case.d
    if not _dm_eq(lower_matroid(d), cycle_matroid(g)):
        return _graph_text(g, "D(G)_min is not the cycle matroid")
    if not _dm_eq(upper_matroid(d), dual(cycle_matroid(g.dual()))):
        return _graph_text(g, "D(G)_max != M(G*)*")
    return None


def check_element_classes(case: GraphCase) -> str | None:
    g, d = case.g, case.d
    for e in g.edge_labels:
        got = element_class(d, e).value
        want = graph_edge_class(g, e)
        if got != want:
            return _graph_text(g, f"edge {e}: delta-matroid class {got}, graph class {want}")
    return None


# -- criterion 4: rank ------------------------------------------------------------


def check_rank(case: GraphCase) -> str | None:
    g = case.g
    table = g.face_table
    for a, r in enumerate(case.rho):
        if r != g.e - table[a] + g.k:
            return _graph_text(g, f"rho({_set(g.elements, a)}) = {r}, expected e - f + k = {g.e - table[a] + g.k}")
    return None


def dm_rank_identities(d: DeltaMatroid) -> str | None:
    """Duality, minor recurrences and restriction identities for rho."""
    n, full = d.size, d.full
    els = d.elements
    rho = rho_table(d)
    rho_dual = rho_table(dual(d))
    for a in range(1 << n):
        if rho_dual[a] != rho[full & ~a]:
            return _dm_text(d, f"rho_D*({_set(els, a)}) != rho_D(E - A)")
    for i, e in enumerate(d.ground):
        bit = 1 << i
        coloop, loop = dmod.is_coloop(d, e), dmod.is_loop(d, e)
        dd, dc = delete(d, e), contract(d, e)
        rd, rc = rho_table(dd), rho_table(dc)
        for x in range(1 << (n - 1)):
            # x is a mask of the minor; lift it back into D's bit positions
            low = x & (bit - 1)
            lifted = low | ((x ^ low) << 1)
            want_d = rho[lifted] if coloop else rho[lifted] - 1
            want_c = rho[lifted | bit] if loop else rho[lifted | bit] - 1
            if rd[x] != want_d:
                return _dm_text(d, f"rho(D\\{e}) recurrence fails at {_set(els, lifted)}")
            if rc[x] != want_c:
                return _dm_text(d, f"rho(D/{e}) recurrence fails at {_set(els, lifted)}")
    lower = lower_matroid(d)
    r_full = matroid_rank(lower)
    n_full = n - r_full
    for a in range(1 << n):
        r_a = matroid_rank(lower, els.to_sorted(a))
        da = restrict(d, els.to_sorted(a))
        if matroid_rank(lower_matroid(da)) != r_a:
            return _dm_text(d, f"r((D|A)_min) != r_Dmin(A) for A = {_set(els, a)}")
        n_a = popcount(a) - r_a
        if width(da) != rho[a] - r_a - n_full + n_a:
            return _dm_text(d, f"w(D|A) identity fails for A = {_set(els, a)}")
    return None


# -- criterion 5: polynomial fixtures ---------------------------------------------


def fixed_polynomials() -> Iterator[str | None]:
    cases = [
        ("T(D(B1))", lambda: tutte(delta_matroid(bridge())), "x"),
        ("T(D(Lo))", lambda: tutte(delta_matroid(orientable_loop())), "y"),
        ("R(D(G0))", lambda: bollobas_riordan(delta_matroid(nonorientable_loop())), "1 + y*z*w"),
        ("R(D(IL))", lambda: bollobas_riordan(delta_matroid(interlaced_loops())), "1 + 2*y + y^2*z^2"),
    ]
    for name, fn, want in cases:
        got = str(fn())
        yield None if got == want else f"{name} = {got}, expected {want}"


# -- criterion 6: polynomial identities --------------------------------------------


X, Y, Z, W, A, B = (var(v) for v in "xyzwab")
ONE = const(1)


def _half(name: str, doubled: int) -> LaurentPoly:
    return var(name, Fraction(doubled, 2))


def polynomial_identities(d: DeltaMatroid) -> str | None:
    """Every polynomial identity, checked symbolically.  Returns the name of
    the first identity that fails."""
    data = SubsetData(d)
    dd = dual(d)
    ddata = SubsetData(dd)
    n, full = d.size, d.full
    w = data.width[full]
    T = tutte(d, data)
    L = las_vergnas(d, data)
    R = bollobas_riordan(d, data)
    S = br_two_var(d, data)
    K = krushkal(d, data, ddata)
    Ld = las_vergnas(dd, ddata)
    Rd = bollobas_riordan(dd, ddata)
    Sd = br_two_var(dd, ddata)
    Kd = krushkal(dd, ddata, data)

    def fail(name: str) -> str:
        return _dm_text(d, f"{name} fails")

    # the two Krushkal routes
    if K != krushkal_rank_form(d, data, ddata):
        return fail("Krushkal definition vs rank-function form")

    # Las Vergnas specialisation (y-1)^w L(x, y, 1/(y-1)) = T(x, y)
    if clear_reciprocal(L, "z", Y - 1, w) != T:
        return fail("(y-1)^w L(D;x,y,1/(y-1)) = T(D;x,y)")

    # R~ against R: R~(x+1, y+1) = x^(w/2) R(x+1, y, 1/sqrt(xy), 1)
    inv_sqrt_xy = _half("x", -1) * _half("y", -1)
    rhs = _half("x", w) * R.substitute({"x": X + 1, "z": inv_sqrt_xy, "w": ONE})
    if S != rhs:
        return fail("R~(D;x+1,y+1) = x^(w/2) R(D;x+1,y,1/sqrt(xy),1)")

    # generating function: v^sigma u^(-w/2) R~(u/v+1, uv+1) = sum v^|A| u^(|E|-rho(A)), u = x, v = y
    lhs = _half("y", data.sigma2[full]) * _half("x", -w) * S.substitute({"x": X * Y ** -1, "y": X * Y})
    rho = data.rho
    terms: dict = {}
    for a in range(1 << n):
        key = (2 * (n - rho[a]), 2 * popcount(a), 0, 0, 0, 0)
        terms[key] = terms.get(key, 0) + 1
    if lhs != LaurentPoly(terms):
        return fail("generating-function identity for R~")

    # R~(D*; x, y) = R~(D; y, x)
    if Sd != S.substitute({"x": Y, "y": X}):
        return fail("R~(D*;x,y) = R~(D;y,x)")

    # evaluations; S(x, y) = R~(x + 1, y + 1).  The independent-set count
    # sits at (2, 1) and the spanning-set count at (1, 2), as for T.
    bases = len(d.feasible) if is_matroid(d) else 0
    if S.evaluate({"x": 0, "y": 0}) != bases:
        return fail("R~(D;1,1)")
    rmin = data.r_min
    independent = sum(1 for a in range(1 << n) if rmin[a] == popcount(a))
    if S.evaluate({"x": 1, "y": 0}) != independent:
        return fail("R~(D;2,1) = independent sets of D_min")
    rmax = data.r_max
    spanning = sum(1 for a in range(1 << n) if rmax[a] == rmax[full])
    if S.evaluate({"x": 0, "y": 1}) != spanning:
        return fail("R~(D;1,2) = spanning sets of D_max")
    if S.evaluate({"x": 1, "y": 1}) != 2 ** n:
        return fail("R~(D;2,2) = 2^|E|")

    # Krushkal specialisations
    if T.substitute({"y": Y + 1}) != _half("y", w) * K.substitute({"a": _half("y", 1), "b": _half("y", -1)}):
        return fail("T(D;x,y+1) = y^(w/2) K(D;x,y,y^(1/2),y^(-1/2))")
    if L != _half("z", w) * K.substitute({"y": Y - 1, "a": _half("z", -1), "b": _half("z", 1)}):
        return fail("L(D;x,y,z) = z^(w/2) K(D;x,y-1,z^(-1/2),z^(1/2))")
    r_w1 = R.substitute({"w": ONE})
    if r_w1 != _half("y", w) * K.substitute({"a": Z * _half("y", 1), "b": _half("y", -1)}):
        return fail("R(D;x,y,z,1) = y^(w/2) K(D;x,y,z y^(1/2),y^(-1/2))")

    # dualities
    if K.substitute({"y": Y - 1}) != Kd.substitute({"x": Y, "y": X - 1, "a": B, "b": A}):
        return fail("K(D;x,y-1,a,b) = K(D*;y,x-1,b,a)")
    wd = ddata.width[full]
    left = _half("x", w) * R.substitute({"x": X + 1, "z": inv_sqrt_xy, "w": ONE})
    right = _half("y", wd) * Rd.substitute({"x": Y + 1, "y": X, "z": inv_sqrt_xy, "w": ONE})
    if left != right:
        return fail("x^(w/2) R(D;x+1,y,1/sqrt(xy),1) = y^(w*/2) R(D*;y+1,x,1/sqrt(xy),1)")
    if L != _half("z", 2 * w) * Ld.substitute({"x": Y, "y": X, "z": Z ** -1}):
        return fail("L(D;x,y,z) = z^w L(D*;y,x,1/z)")

    # matroid special cases
    if is_matroid(d):
        if L != T:
            return fail("L = T for matroids")
        if S != T.substitute({"x": X + 1, "y": Y + 1}):
            return fail("R~ = T for matroids")
    return None


# -- criterion 7: representability ------------------------------------------------


def check_one_vertex(case: GraphCase) -> str | None:
    g = case.g
    if g.v != 1:
        return None
    if not _dm_eq(dm_from_matrix(interlacement_matrix(g)), case.d):
        return _graph_text(g, "D(C) of the interlacement matrix differs from D(G)")
    return None


def dm_binary(d: DeltaMatroid) -> str | None:
    return None if is_binary(d) else _dm_text(d, "ribbon-graphic delta-matroid reported non-binary")


def dm_odd_minor(d: DeltaMatroid) -> str | None:
    if has_minor(d, X0) == is_even(d):
        return _dm_text(d, f"has X0 minor: {has_minor(d, X0)}, even: {is_even(d)}")
    return None


EXCLUDED = ("DG0", "DG1", "DG2")


def dm_twist_of_matroid(d: DeltaMatroid) -> str | None:
    a = is_twist_of_matroid(d, "search")
    b = is_twist_of_matroid(d, "structure")
    if a != b:
        return _dm_text(d, f"twist-of-matroid methods disagree: search {a}, structure {b}")
    excluded = any(has_minor(d, CATALOG[name]) for name in EXCLUDED)
    if a == excluded:
        return _dm_text(d, f"twist of a matroid: {a}, but excluded minor present: {excluded}")
    return None


def fixed_catalog_nonbinary() -> Iterator[str | None]:
    for name, d in S_CATALOG.items():
        yield _dm_text(d, f"{name} reported binary") if is_binary(d) else None


# -- criterion 8: connectivity and chains --------------------------------------------


def check_union_join(case: GraphCase) -> str | None:
    g, d = case.g, case.d
    structural = is_union_or_join(g)
    if structural == is_connected(d) and g.e >= 2:
        return _graph_text(g, f"union or join: {structural}, D(G) connected: {is_connected(d)}")
    if g.e < 2 and structural:
        return _graph_text(g, "a graph with fewer than two edges reported as a union or join")
    return None


def check_chain(case: GraphCase) -> str | None:
    g = case.g
    if not is_2_connected(g):
        return None
    for e in g.edge_labels:
        parts = [g.delete_edge(e), g.contract_edge(e), g.partial_petrial([e]).contract_edge(e)]
        prime_face_tables(parts)
        good = sum(1 for h in parts if is_2_connected(h))
        if good < 2:
            return _graph_text(g, f"edge {e}: only {good} of G\\e, G/e, (G+e)/e are 2-connected")
    return None


def check_spread(case: GraphCase) -> str | None:
    g, d = case.g, case.d
    for n in (1, 2, 3):
        if spread(d, n).feasible != g.family_masks(n):
            return _graph_text(g, f"spread(D(G), {n}) != D_<={n}(G)")
    return None


def check_plus(case: GraphCase) -> str | None:
    g, d = case.g, case.d
    els = g.elements
    if case.scope == "random":
        subsets = list(range(1 << g.e))
    else:
        # exhaustive graphs: every single edge and the whole edge set
        subsets = sorted({1 << i for i in range(g.e)} | {g.full_mask})
    petrials = [g.partial_petrial(els.to_sorted(a)) for a in subsets]
    prime_face_tables(petrials)
    for a, h in zip(subsets, petrials):
        if plus(d, els.to_sorted(a)).feasible != delta_matroid(h).feasible:
            return _graph_text(g, f"plus(D(G), A) != D(G+A) for A = {_set(els, a)}")
    return None


def constructed_unions_and_joins(rng: random.Random) -> Iterator[tuple[RibbonGraph, str]]:
    """Disjoint unions and one-point joins of random graphs with edges."""
    for i in range(CONSTRUCTED_JOINS):
        g1 = random_ribbon_graph(rng, 4, max_vertices=3, min_edges=1).relabel("p", "p")
        g2 = random_ribbon_graph(rng, 4, max_vertices=3, min_edges=1).relabel("q", "q")
        if i % 2 == 0:
            yield disjoint_union(g1, g2), "disjoint union"
        else:
            v1 = rng.choice([v for v, _ in g1.vertices])
            v2 = rng.choice([v for v, _ in g2.vertices])
            r1 = len(g1.vertex_rotation(v1))
            r2 = len(g2.vertex_rotation(v2))
            yield join(g1, v1, g2, v2, rng.randrange(r1 + 1), rng.randrange(r2 + 1)), "join"


def check_constructed(rng: random.Random) -> Iterator[str | None]:
    for g, kind in constructed_unions_and_joins(rng):
        d = delta_matroid(g)
        if is_connected(d):
            yield _graph_text(g, f"{kind} with a connected delta-matroid")
        elif not is_union_or_join(g):
            yield _graph_text(g, f"{kind} not recognised by the structural test")
        else:
            yield None


# -- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class GraphCheck:
    name: str
    criterion: int
    fn: Callable[[GraphCase], str | None]
    # which part of the graph tier the check runs on
    scope: str = "tier"


GRAPH_CHECKS = [
    GraphCheck("exchange: F(G) and F_<=n(G), n <= 3", 1, check_exchange),
    GraphCheck("exchange: F_1(G) for orientable G", 1, check_exchange_f1),
    GraphCheck("D(G^A) = D(G)*A for every A", 2, check_partial_duals),
    GraphCheck("D(G\\e) = D(G)\\e and D(G/e) = D(G)/e", 2, check_minors),
    GraphCheck("D(G*) = D(G)*", 2, check_dual),
    GraphCheck("width, evenness and r(D_min)", 3, check_parameters),
    GraphCheck("D_min = M(G) and D_max = M(G*)*", 3, check_lower_upper),
    GraphCheck("element classes match the graph", 3, check_element_classes),
    GraphCheck("rho(A) = e - f(A) + k", 4, check_rank),
    GraphCheck("one-vertex interlacement oracle", 7, check_one_vertex),
    GraphCheck("D(G) disconnected iff union or join (random graphs)", 8, check_union_join, "random"),
    GraphCheck("chain theorem for 2-connected graphs", 8, check_chain),
    GraphCheck("spread(D(G), n) = D_<=n(G)", 8, check_spread),
    GraphCheck("plus(D(G), A) = D(G+A)", 8, check_plus),
]


@dataclass(frozen=True)
class DmCheck:
    name: str
    criterion: int
    fn: Callable[[DeltaMatroid], str | None]
    max_size: int = 16


CLASS_CHECKS = [
    DmCheck("polynomial identities on D(G) classes", 6, polynomial_identities),
    DmCheck("is_binary(D(G))", 7, dm_binary),
    DmCheck("X0 minor iff odd on D(G) classes", 7, dm_odd_minor),
    DmCheck("twist of matroid: two methods and excluded minors (D(G) classes)", 7, dm_twist_of_matroid, 6),
]


# -- instance streams -------------------------------------------------------------


def graph_tier(max_edges: int, seed: int) -> Iterator[tuple[RibbonGraph, str]]:
    """(graph, scope) pairs: the exhaustive part, then the random part."""
    yield from ((g, "exhaustive") for g in connected_ribbon_graphs(max_edges))
    rng = random.Random(f"graphs-{seed}")
    for _ in range(RANDOM_GRAPHS):
        yield random_ribbon_graph(rng, max_edges + 2), "random"


def _run_graph_stripe(args) -> tuple[list[CheckResult], list[tuple[int, DeltaMatroid]]]:
    criteria, max_edges, seed, stripe, stripes, want_classes = args
    checks = [c for c in GRAPH_CHECKS if c.criterion in criteria]
    results = [CheckResult(c.name, c.criterion) for c in checks]
    classes = IsoClasses()
    # (instance index, D) for the first member of each class in this stripe
    firsts: list[tuple[int, DeltaMatroid]] = []
    for index, (g, scope) in enumerate(graph_tier(max_edges, seed)):
        if index % stripes != stripe:
            continue
        case = GraphCase(g, scope)
        for c, res in zip(checks, results):
            if c.scope == "random" and scope != "random":
                continue
            t0 = time.perf_counter()
            try:
                failure = c.fn(case)
            except Exception as exc:  # a crash is a failed check, not a crashed suite
                failure = _graph_text(g, f"raised {type(exc).__name__}: {exc}")
            res.seconds += time.perf_counter() - t0
            res.record(index, None if failure is None else f"instance {index} ({scope}): {failure}")
        if want_classes and classes.add(case.d):
            firsts.append((index, case.d))
    return results, firsts


def _run_dm_stripe(args) -> list[CheckResult]:
    criteria, reps, stripe, stripes = args
    checks = [c for c in CLASS_CHECKS if c.criterion in criteria]
    results = [CheckResult(c.name, c.criterion) for c in checks]
    for index, d in enumerate(reps):
        if index % stripes != stripe:
            continue
        for c, res in zip(checks, results):
            if d.size > c.max_size:
                continue
            t0 = time.perf_counter()
            try:
                failure = c.fn(d)
            except Exception as exc:
                failure = _dm_text(d, f"raised {type(exc).__name__}: {exc}")
            res.seconds += time.perf_counter() - t0
            res.record(index, None if failure is None else f"class {index}: {failure}")
    return results


def _run_fixed(name: str, criterion: int, outcomes: Callable[[], Iterator[str | None]]) -> CheckResult:
    res = CheckResult(name, criterion)
    t0 = time.perf_counter()
    try:
        for i, failure in enumerate(outcomes()):
            res.record(i, failure)
    except Exception as exc:
        res.record(res.count, f"raised {type(exc).__name__}: {exc}")
    res.seconds = time.perf_counter() - t0
    return res


def _random_dms(tag: str, seed: int, count: int, max_elements: int, min_elements: int = 1):
    rng = random.Random(f"{tag}-{seed}")
    for _ in range(count):
        yield random_delta_matroid(rng, max_elements, min_elements)


def _dm_outcomes(fn, dms):
    def run():
        for i, d in enumerate(dms()):
            failure = fn(d)
            yield None if failure is None else f"instance {i}: {failure}"
    return run


def _fixed_checks(criteria, seed: int) -> list[CheckResult]:
    out = []
    if 1 in criteria:
        out.append(_run_fixed("known counterexamples fail the exchange axiom", 1, fixed_counterexamples))
    if 4 in criteria:
        out.append(_run_fixed(
            "rho duality, minor recurrences, restriction identities (random, |E| <= 7)", 4,
            _dm_outcomes(dm_rank_identities, lambda: _random_dms("rank", seed, RANDOM_DM_RANK, 7)),
        ))
    if 5 in criteria:
        out.append(_run_fixed("fixture polynomials", 5, fixed_polynomials))
    if 6 in criteria:
        out.append(_run_fixed(
            "polynomial identities (random, |E| <= 6)", 6,
            _dm_outcomes(polynomial_identities, lambda: _random_dms("poly", seed, RANDOM_DM_POLY, 6)),
        ))
    if 7 in criteria:
        out.append(_run_fixed("S1-S5 are not binary", 7, fixed_catalog_nonbinary))

        def one_vertex():
            rng = random.Random(f"one-vertex-{seed}")
            for i in range(RANDOM_ONE_VERTEX):
                g = random_ribbon_graph(rng, 7, max_vertices=1, min_edges=7)
                failure = check_one_vertex(GraphCase(g))
                yield None if failure is None else f"instance {i}: {failure}"

        out.append(_run_fixed("one-vertex interlacement oracle (random, 7 loops)", 7, one_vertex))

        def small_dms():
            for n in range(5):
                yield from all_delta_matroids(n)
            yield from _random_dms("minor", seed, RANDOM_DM_MINOR, 5, 5)

        out.append(_run_fixed("X0 minor iff odd (all |E| <= 4, random |E| = 5)", 7, _dm_outcomes(dm_odd_minor, small_dms)))

        def twist_dms():
            for n in range(5):
                yield from all_delta_matroids(n)
            yield from _random_dms("twist", seed, RANDOM_DM_POLY, 6)

        out.append(_run_fixed(
            "twist of matroid: two methods and excluded minors (all |E| <= 4, random |E| <= 6)", 7,
            _dm_outcomes(dm_twist_of_matroid, twist_dms),
        ))
    if 8 in criteria:
        out.append(_run_fixed(
            "constructed unions and joins have disconnected D(G)", 8,
            lambda: check_constructed(random.Random(f"joins-{seed}")),
        ))
    return out


def run_suite(suite: str = "all", max_edges: int = 6, seed: int = 7, jobs: int | None = None,
              criteria=None) -> SuiteReport:
    """Run a named suite (or an explicit set of criteria) and collect the report.

    ``jobs`` worker processes split the graph tier and the delta-matroid
    classes into stripes.  Reports depend only on the arguments: the first
    counterexample is always the one with the smallest instance index.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    if max_edges < 0:
        raise ValueError("max-edges must be non-negative")
    criteria = tuple(sorted(criteria if criteria is not None else SUITES[suite]))
    jobs = max(1, jobs if jobs is not None else (os.cpu_count() or 1))
    t0 = time.perf_counter()
    report = SuiteReport(suite, max_edges, seed)

    want_classes = any(c.criterion in criteria for c in CLASS_CHECKS)
    graph_results: list[CheckResult] = []
    reps: list[DeltaMatroid] = []
    if any(c.criterion in criteria for c in GRAPH_CHECKS) or want_classes:
        tasks = [(criteria, max_edges, seed, s, jobs, want_classes) for s in range(jobs)]
        parts = _map(_run_graph_stripe, tasks, jobs)
        graph_results = parts[0][0]
        for other, _ in parts[1:]:
            for a, b in zip(graph_results, other):
                a.merge(b)
        if want_classes:
            # re-adding in instance order gives the same representatives
            # for any number of stripes
            firsts = sorted((pair for _, stripe_firsts in parts for pair in stripe_firsts), key=lambda p: p[0])
            classes = IsoClasses()
            for _, d in firsts:
                classes.add(d)
            reps = classes.representatives

    class_results: list[CheckResult] = []
    if want_classes:
        tasks = [(criteria, reps, s, jobs) for s in range(jobs)]
        parts = _map(_run_dm_stripe, tasks, jobs)
        class_results = parts[0]
        for other in parts[1:]:
            for a, b in zip(class_results, other):
                a.merge(b)

    checks = graph_results + class_results + _fixed_checks(criteria, seed)
    report.checks = sorted(checks, key=lambda c: (c.criterion, c.name))
    report.seconds = time.perf_counter() - t0
    return report


def _map(fn, tasks, jobs: int):
    if jobs == 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))
