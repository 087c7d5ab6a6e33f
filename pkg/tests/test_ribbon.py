import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from deltaribbon.dm import contract, delete, dual, plus, twist
from deltaribbon.errors import DanglingHalfEdge, MalformedRotation, UnknownEdge, UnknownVertex
from deltaribbon.fixtures import (
    FIGURE_ONE_FAMILIES,
    bridge,
    figure_one,
    interlaced_loops,
    nonorientable_loop,
    orientable_loop,
)
from deltaribbon.generate import connected_ribbon_graphs, count_connected, random_ribbon_graph
from deltaribbon.ribbon import (
    build,
    delta_matroid,
    disjoint_union,
    face_tables,
    is_2_connected,
    is_union_or_join,
    join,
    single_vertex,
)
from conftest import ribbon_graphs, seeded
import oracles


def sets(*items):
    return {frozenset(str(x) for x in s) for s in items}


# -- construction -----------------------------------------------------------------


def test_fixtures_build():
    assert (orientable_loop().v, orientable_loop().e) == (1, 1)
    assert nonorientable_loop().edges[0][3] == -1
    assert (bridge().v, bridge().e) == (2, 1)


def test_build_errors():
    with pytest.raises(MalformedRotation):
        build({"v": ["h1", "h1"]}, {"e": ("h1", "h1", 1)})
    with pytest.raises(DanglingHalfEdge):
        build({"v": ["h1"]}, {"e": ("h1", "h2", 1)})
    with pytest.raises(DanglingHalfEdge):
        build({"v": ["h1", "h2", "h3"]}, {"e": ("h1", "h2", 1)})
    with pytest.raises(MalformedRotation):
        build({"v": ["h1", "h2"], "w": ["h1"]}, {"e": ("h1", "h2", 1)})


# -- parameters -------------------------------------------------------------------


def test_sub_params_examples():
    p = orientable_loop().sub_params(["e"])
    assert (p.f, p.gamma, p.t) == (2, 0, 0)
    p = nonorientable_loop().sub_params(["e"])
    assert (p.f, p.gamma, p.t) == (1, 1, 1)
    p = bridge().sub_params([])
    assert (p.f, p.k, p.r) == (2, 2, 0)
    with pytest.raises(UnknownEdge):
        bridge().sub_params(["x"])


@given(ribbon_graphs(6))
def test_sub_params_against_face_tracing(g):
    labels = [e[0] for e in g.edges]
    for a in oracles.subsets(labels):
        p = g.sub_params(sorted(a))
        assert (p.f, p.k, p.gamma, p.t) == oracles.graph_params(g, a)
        assert p.r == len(g.vertices) - p.k and p.n == len(a) - p.r


def test_face_table_matches_tracer_and_batches():
    rng = seeded(3)
    graphs = [random_ribbon_graph(rng, 5, min_edges=5) for _ in range(40)]
    table = face_tables(graphs)
    for g, row in zip(graphs, table):
        for m in range(1 << g.e):
            assert row[m] == g._faces(m) == oracles.faces(g, g.elements.to_set(m))


@given(ribbon_graphs(7))
def test_orientability_against_double_cover(g):
    assert g.is_orientable == oracles.signed_double_cover_orientable(g, {e[0] for e in g.edges})


def test_euler_genus_is_nonnegative_and_even_when_orientable():
    for g in connected_ribbon_graphs(4):
        assert g.gamma >= 0
        if g.is_orientable:
            assert g.gamma % 2 == 0


# -- quasi-trees and D(G) ---------------------------------------------------------


def test_quasi_tree_examples():
    assert set(nonorientable_loop().spanning_quasi_trees()) == sets((), ("e",))
    assert set(bridge().spanning_quasi_trees()) == sets(("e",))
    assert set(interlaced_loops().spanning_quasi_trees()) == sets((), ("a", "b"))


@given(ribbon_graphs(6))
def test_quasi_trees_against_oracle(g):
    assert set(g.spanning_quasi_trees()) == oracles.quasi_trees(g)


def test_figure_one_families():
    g = figure_one()
    for n, family in FIGURE_ONE_FAMILIES.items():
        _, exact = g.feasible_families_n(n)
        assert exact == {frozenset(s) for s in family}
    assert g.feasible_families_n(4)[1] == frozenset()
    assert g.feasible_families_n(4)[0] == frozenset(frozenset(s) for s in oracles.subsets("1234"))


def test_figure_one_is_recovered_by_search():
    from deltaribbon.fixtures import figure_one_candidates

    found = figure_one_candidates()
    assert found
    target = figure_one()
    families = lambda h: [h.feasible_families_n(n)[1] for n in range(4)]
    assert any(families(h) == families(target) for h in found)


# -- operations -------------------------------------------------------------------


def test_partial_dual_examples():
    b = bridge().partial_dual(["e"])
    assert (b.v, b.e) == (1, 1) and b.edges[0][3] == 1
    assert set(b.spanning_quasi_trees()) == sets(())
    g = nonorientable_loop().partial_dual(["e"])
    assert (g.v, g.e, g.f) == (1, 1, 1) and not g.is_orientable
    g = interlaced_loops()
    assert g.partial_dual([]) is g
    with pytest.raises(UnknownEdge):
        g.partial_dual(["x"])


@given(ribbon_graphs(5), st.data())
def test_partial_dual_properties(g, data):
    labels = [e[0] for e in g.edges]
    a = data.draw(st.sets(st.sampled_from(labels))) if labels else set()
    b = data.draw(st.sets(st.sampled_from(labels))) if labels else set()
    h = g.partial_dual(sorted(a))
    assert oracles.feasible_sets(delta_matroid(h)) == oracles.twist_sets(oracles.quasi_trees(g), frozenset(a))
    assert h.is_orientable == g.is_orientable and h.k == g.k
    # (G^A)^B = G^(A delta B), compared through the oracle delta-matroid
    twice = h.partial_dual(sorted(b))
    assert oracles.quasi_trees(twice) == oracles.quasi_trees(g.partial_dual(sorted(a ^ b)))


def test_petrial_examples():
    assert nonorientable_loop() == orientable_loop().partial_petrial(["e"])
    assert orientable_loop() == nonorientable_loop().partial_petrial(["e"])
    d = delta_matroid(bridge())
    assert delta_matroid(bridge().partial_petrial(["e"])).feasible == plus(d, ["e"]).feasible


@given(ribbon_graphs(5), st.data())
def test_petrial_matches_plus(g, data):
    labels = [e[0] for e in g.edges]
    a = sorted(data.draw(st.sets(st.sampled_from(labels)))) if labels else []
    assert delta_matroid(g.partial_petrial(a)).feasible == plus(delta_matroid(g), a).feasible
    assert g.partial_petrial(a).partial_petrial(a) == g


def test_contraction_examples():
    for g in (bridge(), nonorientable_loop()):
        h = g.contract_edge("e")
        assert (h.v, h.e) == (1, 0)
    h = interlaced_loops().contract_edge("a")
    assert h.e == 1
    assert delta_matroid(h).feasible == contract(delta_matroid(interlaced_loops()), "a").feasible
    with pytest.raises(UnknownEdge):
        bridge().contract_edge("x")
    with pytest.raises(UnknownVertex):
        bridge().delete_vertex("nowhere")
    h = bridge().delete_vertex("u")
    assert (h.v, h.e) == (1, 0)


@given(ribbon_graphs(5, min_edges=1))
def test_minors_commute_with_delta_matroid(g):
    d = delta_matroid(g)
    for e in g.edge_labels:
        assert delta_matroid(g.delete_edge(e)).feasible == delete(d, e).feasible
        assert delta_matroid(g.contract_edge(e)).feasible == contract(d, e).feasible
    assert delta_matroid(g.dual()).feasible == dual(d).feasible


def test_vertex_flip_and_mirror_preserve_the_delta_matroid():
    rng = seeded(4)
    for _ in range(50):
        g = random_ribbon_graph(rng, 5)
        d = delta_matroid(g).feasible
        assert delta_matroid(g.mirror()).feasible == d
        for vid, _ in g.vertices:
            assert delta_matroid(g.flip_vertex(vid)).feasible == d


# -- connectivity -------------------------------------------------------------------


def test_two_connectivity_examples():
    assert is_2_connected(bridge())
    lo = orientable_loop()
    assert not is_2_connected(disjoint_union(lo, lo.relabel("p", "p")))
    assert not is_2_connected(single_vertex("aabb"))


def test_two_connectivity_is_not_union_nor_join():
    """Ribbon 2-connectivity: neither a disjoint union of non-empty ribbon
    graphs nor a join of two non-trivial ones (graph-side brute force)."""
    assert is_2_connected(interlaced_loops())
    for g in connected_ribbon_graphs(4):
        if g.e == 0:
            continue
        assert is_2_connected(g) == (not is_union_or_join(g)), g


def test_unions_and_joins():
    lo = orientable_loop()
    twin = lo.relabel("p", "p")
    assert is_union_or_join(disjoint_union(lo, twin))
    assert is_union_or_join(single_vertex("aabb"))
    assert not is_union_or_join(interlaced_loops())
    assert not is_union_or_join(bridge())
    j = join(interlaced_loops(), "v", interlaced_loops().relabel("p", "p"), "pv")
    assert is_union_or_join(j)


def test_exhaustive_counts():
    assert count_connected(3) == [1, 3, 11, 63]
    graphs = list(connected_ribbon_graphs(3))
    assert len(graphs) == 78
    assert all(nx.is_connected(_underlying(g)) for g in graphs)


def _underlying(g):
    owner = {h: v for v, rot in g.vertices for h in rot}
    nxg = nx.MultiGraph()
    nxg.add_nodes_from(v for v, _ in g.vertices)
    nxg.add_edges_from((owner[a], owner[b]) for _, a, b, _ in g.edges)
    return nxg
