import itertools

import pytest
from hypothesis import given, strategies as st

from deltaribbon import dm as dmod
from deltaribbon.dm import (
    DeltaMatroid,
    ElementClass,
    check_symmetric_exchange,
    contract,
    delete,
    direct_sum,
    dm_sum,
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
    rho,
    rho_table,
    split,
    spread,
    toggle,
    trivial,
    twist,
    uniform,
    upper_matroid,
    width,
)
from deltaribbon.elements import ElementMap
from deltaribbon.errors import (
    EmptyFeasibleFamily,
    EmptyToggle,
    GroundOverlap,
    NotAMatroid,
    OverlappingMinorSets,
    UnknownElement,
)
from deltaribbon.fixtures import bridge, interlaced_loops, nonorientable_loop, orientable_loop, two_cycle_with_twisted_loop
from deltaribbon.generate import random_family
from deltaribbon.rep import X0
from deltaribbon.ribbon import delta_matroid, toggle_family
from conftest import delta_matroids, seeded
import oracles

U12 = DeltaMatroid("1,2", [(1,), (2,)])


def fam(d):
    return oracles.feasible_sets(d)


def sets(*items):
    return {frozenset(str(x) for x in s) for s in items}


# -- exchange axiom ---------------------------------------------------------------


def test_exchange_examples():
    assert check_symmetric_exchange(U12).ok
    assert check_symmetric_exchange([(), (1, 2)], ground="1,2").ok
    bad = DeltaMatroid._from_masks(ElementMap("abc"), toggle_family(two_cycle_with_twisted_loop(), 1))
    res = check_symmetric_exchange(bad)
    assert not res.ok
    x, y, u = res.witness
    family = fam(bad)
    assert x in family and y in family and u in x ^ y
    assert not any((x ^ {u, v}) in family for v in x ^ y)


def test_exchange_empty_family():
    with pytest.raises(EmptyFeasibleFamily):
        check_symmetric_exchange([], ground="a")


def test_exchange_against_definition():
    rng = seeded(1)
    for _ in range(300):
        n = rng.randint(1, 5)
        els = ElementMap(str(i) for i in range(n))
        masks = random_family(rng, n, rng.choice([0.2, 0.5, 0.8]))
        if not masks:
            continue
        got = dmod.masks_exchange_ok(els, masks)
        want = oracles.exchange_ok(None, {els.to_set(m) for m in masks})
        assert got == want


def test_vectorized_exchange_matches_scalar():
    rng = seeded(2)
    for _ in range(200):
        n = rng.randint(3, 7)
        els = ElementMap(str(i) for i in range(n))
        masks = random_family(rng, n, rng.choice([0.3, 0.6, 0.9]))
        if not masks:
            continue
        assert dmod._exchange_failure_np(n, masks) == dmod._exchange_failure(els, masks)


# -- twist, dual, minors ----------------------------------------------------------


def test_twist_examples():
    assert fam(twist(U12, "1")) == sets((), (1, 2))
    assert twist(U12, ()) is U12
    with pytest.raises(UnknownElement):
        twist(U12, "9")


@given(delta_matroids(5), st.data())
def test_twist_is_an_involution(d, data):
    a = data.draw(st.integers(0, d.full))
    assert twist(twist(d, a), a).feasible == d.feasible
    assert fam(twist(d, a)) == oracles.twist_sets(fam(d), frozenset(d.elements.to_set(a)))
    assert dual(d).feasible == twist(d, d.full).feasible


def test_minor_examples():
    assert fam(delete(U12, "2")) == sets((1,))
    assert delete(U12, "2").ground == ("1",)
    c = contract(X0, "a")
    assert c.ground == () and fam(c) == {frozenset()}
    with pytest.raises(OverlappingMinorSets):
        minor(U12, "1", "1")
    with pytest.raises(UnknownElement):
        delete(U12, "x")


@given(delta_matroids(5))
def test_deletion_and_contraction_by_definition(d):
    for e in d.ground:
        family = fam(d)
        avoid = {f for f in family if e not in f}
        meet = {f - {e} for f in family if e in f}
        assert fam(delete(d, e)) == (avoid if avoid else meet)
        assert fam(contract(d, e)) == (meet if meet else avoid)
        # contraction is deletion in the twist
        assert contract(d, e).feasible == delete(twist(d, e), e).feasible


@given(delta_matroids(5))
def test_restrict_matches_least_meeting_sets(d):
    ground = frozenset(d.ground)
    for k in range(d.size + 1):
        for keep in itertools.combinations(d.ground, k):
            want = oracles.restriction_sets(ground, fam(d), frozenset(keep))
            assert fam(restrict(d, keep)) == want


# -- rank, width, parity ------------------------------------------------------------


def test_rho_examples():
    assert rho(delta_matroid(bridge()), ()) == 0
    assert rho(delta_matroid(nonorientable_loop()), ()) == 1


@given(delta_matroids(5))
def test_rho_by_definition(d):
    table = rho_table(d)
    for a in range(1 << d.size):
        dist = min(bin(a ^ f).count("1") for f in d.feasible)
        assert table[a] == d.size - dist
        assert rho(d, d.elements.to_sorted(a)) == table[a]


def test_width_and_matroid_rank():
    assert width(U12) == 0
    assert width(uniform(2, 4)) == 0
    assert matroid_rank(U12, ()) == 0
    assert matroid_rank(U12) == 1
    with pytest.raises(NotAMatroid):
        matroid_rank(X0)


@given(delta_matroids(5))
def test_lower_and_upper_matroids(d):
    sizes = [len(f) for f in fam(d)]
    assert {len(f) for f in fam(lower_matroid(d))} == {min(sizes)}
    assert {len(f) for f in fam(upper_matroid(d))} == {max(sizes)}
    assert width(d) == max(sizes) - min(sizes)
    assert is_even(d) == (len({s % 2 for s in sizes}) == 1)
    assert is_matroid(lower_matroid(d)) and is_matroid(upper_matroid(d))


# -- element classes -----------------------------------------------------------------


def test_element_class_examples():
    assert element_class(delta_matroid(bridge()), "e") == ElementClass.COLOOP
    assert element_class(delta_matroid(orientable_loop()), "e") == ElementClass.LOOP
    assert element_class(X0, "a") == ElementClass.RIBBON_LOOP_NONORIENTABLE_TRIVIAL
    il = delta_matroid(interlaced_loops())
    assert element_class(il, "a") == ElementClass.RIBBON_LOOP_ORIENTABLE_NONTRIVIAL
    assert element_class(U12, "1") == ElementClass.ORDINARY


def test_trivial_orientable_ribbon_loop_is_a_loop():
    assert ElementClass.RIBBON_LOOP_ORIENTABLE_TRIVIAL is ElementClass.LOOP


# -- spreads, toggles, sums -------------------------------------------------------


@given(delta_matroids(5), st.integers(0, 3))
def test_spread_is_a_union_of_balls(d, n):
    want = {m for m in range(1 << d.size) if any(bin(m ^ f).count("1") <= n for f in d.feasible)}
    assert spread(d, n).feasible == frozenset(want)


def test_toggle_errors():
    with pytest.raises(EmptyToggle):
        toggle(trivial(), 1)


@given(delta_matroids(4), delta_matroids(4))
def test_sums_close_under_exchange(d1, d2):
    if d1.elements == d2.elements:
        assert check_symmetric_exchange(dm_sum(d1, d2)).ok
    renamed = DeltaMatroid([f"q{x}" for x in d2.ground], [[f"q{x}" for x in s] for s in fam(d2)])
    s = direct_sum(d1, renamed)
    assert check_symmetric_exchange(s).ok
    assert not is_connected(s) or d1.size == 0 or renamed.size == 0
    with pytest.raises(GroundOverlap):
        direct_sum(d1, d1)


def test_connectivity_examples():
    x1 = DeltaMatroid("b", [(), ("b",)])
    assert not is_connected(direct_sum(X0, x1))
    assert is_connected(delta_matroid(interlaced_loops()))
    parts = split(direct_sum(X0, x1))
    assert parts is not None and {p.ground for p in parts} == {("a",), ("b",)}


@given(delta_matroids(5), st.data())
def test_plus_by_definition(d, data):
    a = frozenset(d.elements.to_set(data.draw(st.integers(0, d.full))))
    family = fam(d)
    want = set()
    for m in range(1 << d.size):
        f = frozenset(d.elements.to_set(m))
        count = sum(1 for g in family if (f - a) <= g <= f)
        if count % 2:
            want.add(f)
    if not want:
        with pytest.raises(EmptyFeasibleFamily):
            plus(d, sorted(a))
    else:
        assert fam(plus(d, sorted(a))) == want


def test_uniform():
    assert fam(uniform(1, 2)) == fam(U12)
    with pytest.raises(ValueError):
        uniform(3, 2)
