"""Small named ribbon graphs used throughout the tests and the CLI."""

from __future__ import annotations

import itertools

from .ribbon import RibbonGraph, build, single_vertex


def orientable_loop() -> RibbonGraph:
    """L_o: one vertex, one untwisted loop."""
    return build({"v": ["h1", "h2"]}, {"e": ("h1", "h2", 1)})


def nonorientable_loop() -> RibbonGraph:
    """G0: one vertex, one twisted loop (a Möbius band)."""
    return build({"v": ["h1", "h2"]}, {"e": ("h1", "h2", -1)})


def bridge() -> RibbonGraph:
    """B1: two vertices joined by one edge."""
    return build({"u": ["h1"], "w": ["h2"]}, {"e": ("h1", "h2", 1)})


def interlaced_loops() -> RibbonGraph:
    """IL: two interlaced untwisted loops on one vertex."""
    return single_vertex("abab")


def figure_one() -> RibbonGraph:
    """A 2-vertex, 4-edge ribbon graph whose families F_n(G) are exactly
    those of the running example (recovered by :func:`figure_one_candidates`).

    Edges 1 and 2 join the two vertices; 3 and 4 are untwisted loops, one at
    each vertex, each interlaced with the 2-cycle {1, 2}.
    """
    return build(
        {"v1": ["3a", "2a", "3b", "1a"], "v2": ["4a", "2b", "4b", "1b"]},
        {"1": ("1a", "1b", 1), "2": ("2a", "2b", 1), "3": ("3a", "3b", 1), "4": ("4a", "4b", 1)},
    )


FIGURE_ONE_FAMILIES = {
    0: [{"1"}, {"2"}, {"1", "2", "3"}, {"1", "2", "4"}],
    1: [set(), {"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"1", "2", "3", "4"}],
    2: [{"3"}, {"4"}, {"1", "3", "4"}, {"2", "3", "4"}],
    3: [{"3", "4"}],
}


def figure_one_candidates() -> list[RibbonGraph]:
    """Search every connected 2-vertex, 4-edge ribbon graph and every edge
    labelling for those whose quasi-trees match the running example."""
    from .generate import connected_ribbon_graphs

    target = {frozenset(s) for s in FIGURE_ONE_FAMILIES[0]}
    found = []
    for g in connected_ribbon_graphs(4):
        if g.e != 4 or g.v != 2:
            continue
        for perm in itertools.permutations("1234"):
            h = g.rename_edges({f"e{i + 1}": perm[i] for i in range(4)})
            if set(h.spanning_quasi_trees()) == target:
                found.append(h)
    return found


def doubled_triangle() -> RibbonGraph:
    """A plane triangle with one edge doubled: D_2 is not a delta-matroid."""
    return build(
        {"u": ["a1", "b1", "d2"], "v": ["c1", "b2", "a2"], "w": ["d1", "c2"]},
        {"a": ("a1", "a2", 1), "b": ("b1", "b2", 1), "c": ("c1", "c2", 1), "d": ("d1", "d2", 1)},
    )


def two_cycle_with_twisted_loop() -> RibbonGraph:
    """A plane 2-cycle plus a twisted loop interlaced with it (Euler
    genus 2): D_1 is not a delta-matroid."""
    return build(
        {"u": ["a1", "c1", "b1", "c2"], "v": ["b2", "a2"]},
        {"a": ("a1", "a2", 1), "b": ("b1", "b2", 1), "c": ("c1", "c2", -1)},
    )


def complete_graph_k5() -> RibbonGraph:
    """K5 with an arbitrary rotation (only its cycle matroid is used)."""
    verts = {str(i): [] for i in range(1, 6)}
    edges = {}
    for i, j in itertools.combinations(range(1, 6), 2):
        lab = f"{i}{j}"
        verts[str(i)].append(f"{lab}a")
        verts[str(j)].append(f"{lab}b")
        edges[lab] = (f"{lab}a", f"{lab}b", 1)
    return build(verts, edges)


NAMED_GRAPHS = {
    "Lo": orientable_loop,
    "G0": nonorientable_loop,
    "B1": bridge,
    "IL": interlaced_loops,
    "fig1": figure_one,
    "doubled-triangle": doubled_triangle,
    "two-cycle-twisted-loop": two_cycle_with_twisted_loop,
}
