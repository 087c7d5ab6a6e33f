import itertools

import pytest
from hypothesis import given

from deltaribbon.dm import DeltaMatroid, is_even, minor, twist, uniform
from deltaribbon.errors import NonSymmetric, NotOneVertex
from deltaribbon.fixtures import bridge, figure_one, interlaced_loops, nonorientable_loop, two_cycle_with_twisted_loop
from deltaribbon.generate import all_delta_matroids, random_symmetric_matrix
from deltaribbon.rep import (
    CATALOG,
    G1,
    S_CATALOG,
    X0,
    Gf2Matrix,
    dm_from_matrix,
    gf2_nonsingular,
    interlacement_matrix,
    is_binary,
)
from deltaribbon.ribbon import cycle_matroid, delta_matroid, single_vertex
from deltaribbon.search import (
    IsoClasses,
    canonical_form,
    find_isomorphism,
    find_minor,
    has_minor,
    is_twist_of_matroid,
    matroid_twists,
)
from conftest import delta_matroids, seeded
import oracles


def sets(*items):
    return {frozenset(str(x) for x in s) for s in items}


def det_gf2(rows):
    """Determinant over GF(2) by cofactor expansion (tiny matrices only)."""
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    for j in range(n):
        if rows[0][j]:
            sub = [r[:j] + r[j + 1:] for r in rows[1:]]
            total ^= det_gf2(sub)
    return total


# -- GF(2) ---------------------------------------------------------------------------


def test_matrix_examples():
    assert oracles.feasible_sets(dm_from_matrix([[1]], ["e"])) == sets((), ("e",))
    assert oracles.feasible_sets(dm_from_matrix([[0]], ["e"])) == sets(())
    assert oracles.feasible_sets(dm_from_matrix([[0, 1], [1, 0]], ["a", "b"])) == sets((), ("a", "b"))
    with pytest.raises(NonSymmetric):
        dm_from_matrix([[0, 1], [0, 0]])


def test_nonsingular_examples():
    assert gf2_nonsingular(Gf2Matrix([[1]], ["e"]), ["e"])
    assert not gf2_nonsingular(Gf2Matrix([[0]], ["e"]), ["e"])
    assert not gf2_nonsingular(Gf2Matrix([[0, 1], [1, 0]], ["a", "b"]), ["a"])


def test_dm_from_matrix_against_determinants():
    rng = seeded(8)
    for _ in range(60):
        n = rng.randint(1, 5)
        c = random_symmetric_matrix(rng, n)
        labels = [str(i) for i in range(n)]
        d = dm_from_matrix(c, labels)
        want = set()
        for k in range(n + 1):
            for idx in itertools.combinations(range(n), k):
                if det_gf2([[c[i][j] for j in idx] for i in idx]):
                    want.add(frozenset(labels[i] for i in idx))
        assert oracles.feasible_sets(d) == want


def test_interlacement_examples():
    assert interlacement_matrix(nonorientable_loop()).to_lists() == [[1]]
    assert interlacement_matrix(interlaced_loops()).to_lists() == [[0, 1], [1, 0]]
    flat = single_vertex("aabb")
    assert interlacement_matrix(flat).to_lists() == [[0, 0], [0, 0]]
    assert oracles.feasible_sets(delta_matroid(flat)) == sets(())
    with pytest.raises(NotOneVertex):
        interlacement_matrix(bridge())


def test_one_vertex_graphs_are_matrix_delta_matroids():
    rng = seeded(9)
    letters = "abcdefg"
    for _ in range(100):
        k = rng.randint(1, 7)
        word = list(letters[:k] * 2)
        rng.shuffle(word)
        signs = {c: rng.choice((1, -1)) for c in letters[:k]}
        g = single_vertex("".join(word), signs)
        assert dm_from_matrix(interlacement_matrix(g)).feasible == delta_matroid(g).feasible


def test_binary_examples():
    for name, s in S_CATALOG.items():
        assert not is_binary(s), name
    assert is_binary(cycle_matroid(figure_one()))
    assert is_binary(delta_matroid(figure_one()))
    res = is_binary(delta_matroid(interlaced_loops()))
    assert res.ok and res.matrix is not None


def test_binary_witness_is_valid():
    rng = seeded(10)
    from deltaribbon.generate import random_ribbon_graph

    for _ in range(50):
        d = delta_matroid(random_ribbon_graph(rng, 6))
        res = is_binary(d)
        assert res.ok
        assert dm_from_matrix(res.matrix) == twist(d, sorted(res.twist_set))


# -- isomorphism and minors ------------------------------------------------------------


@given(delta_matroids(5))
def test_isomorphism_finds_relabelings(d):
    rng = seeded(len(d.feasible))
    perm = list(d.ground)
    rng.shuffle(perm)
    mapping = dict(zip(d.ground, [f"z{p}" for p in perm]))
    image = DeltaMatroid(mapping.values(), [[mapping[x] for x in s] for s in oracles.feasible_sets(d)])
    found = find_isomorphism(d, image)
    assert found is not None
    assert {frozenset(found[x] for x in s) for s in oracles.feasible_sets(d)} == oracles.feasible_sets(image)
    assert canonical_form(d) == canonical_form(image)


def test_isomorphism_rejects_different_systems():
    assert find_isomorphism(uniform(1, 3), uniform(2, 3)) is None


def test_minor_examples():
    assert has_minor(X0, X0)
    assert not has_minor(uniform(1, 2), X0)
    assert not has_minor(delta_matroid(interlaced_loops()), X0)
    odd = delta_matroid(two_cycle_with_twisted_loop())
    w = find_minor(odd, X0)
    assert w is not None
    assert find_isomorphism(minor(odd, w.deleted, w.contracted), X0) is not None


def test_x0_minor_iff_odd_small():
    for n in range(4):
        for d in all_delta_matroids(n):
            assert has_minor(d, X0) == (not is_even(d))


def test_iso_classes():
    classes = IsoClasses()
    assert classes.add(uniform(1, 3))
    assert not classes.add(DeltaMatroid("p,q,r", [("p",), ("q",), ("r",)]))
    assert classes.add(uniform(2, 3))
    assert len(classes) == 2


# -- twists of matroids -----------------------------------------------------------------


def test_twist_of_matroid_examples():
    assert is_twist_of_matroid(uniform(2, 4))
    assert not is_twist_of_matroid(delta_matroid(G1))
    d = delta_matroid(figure_one())
    assert is_twist_of_matroid(d, "search") == is_twist_of_matroid(d, "structure")


@given(delta_matroids(5))
def test_twist_of_matroid_methods_agree(d):
    assert is_twist_of_matroid(d, "search") == is_twist_of_matroid(d, "structure")
    for a in matroid_twists(d):
        sizes = {len(f) for f in oracles.feasible_sets(twist(d, a))}
        assert len(sizes) == 1


def test_catalog_names():
    assert set(CATALOG) >= {"S1", "S2", "S3", "S4", "S5", "X0", "DG0", "DG1", "DG2"}
