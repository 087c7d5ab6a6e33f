import pytest
import sympy as sp
from hypothesis import given

from deltaribbon.dm import DeltaMatroid, dual, is_matroid, lower_matroid, uniform, upper_matroid
from deltaribbon.errors import GroundTooLarge
from deltaribbon.fixtures import bridge, figure_one, interlaced_loops, nonorientable_loop, orientable_loop
from deltaribbon.generate import random_ribbon_graph
from deltaribbon.laurent import var
from deltaribbon.polynomials import (
    bollobas_riordan,
    br_two_var,
    krushkal,
    krushkal_rank_form,
    las_vergnas,
    polynomial,
    tutte,
)
from deltaribbon.ribbon import cycle_matroid, delta_matroid
from deltaribbon.suites import polynomial_identities
from conftest import delta_matroids, seeded
import oracles
from oracles import A, B, W, X, Y, Z


def D(g):
    return delta_matroid(g)


# -- fixtures, checked against the sympy subset expansion ------------------------------


@pytest.mark.parametrize(
    "graph, which, expected",
    [
        (bridge, "tutte", "x"),
        (orientable_loop, "tutte", "y"),
        (nonorientable_loop, "tutte", "y"),
        (nonorientable_loop, "br", "1 + y*z*w"),
        (orientable_loop, "br", "1 + y"),
        (interlaced_loops, "br", "1 + 2*y + y^2*z^2"),
    ],
)
def test_fixture_strings(graph, which, expected):
    g = graph()
    p = polynomial(D(g), which)
    assert str(p) == expected
    oracle = {"tutte": oracles.tutte_graph, "br": oracles.br_graph}[which](g)
    assert oracles.same(oracle, p)


def test_g0_two_variable_expansion():
    # sigma(empty) = 0 and sigma({e}) = 1/2, so R~(x, y) = (x-1)^(1/2) + (y-1)^(1/2)
    s = br_two_var(D(nonorientable_loop()))
    assert oracles.same(X ** sp.Rational(1, 2) + Y ** sp.Rational(1, 2), s)


@given(delta_matroids(4))
def test_matroids_have_no_z(d):
    m = lower_matroid(d)
    assert las_vergnas(m) == tutte(m)
    assert "z" not in las_vergnas(m).variables()


def test_figure_one_las_vergnas_against_graph_definition():
    g = figure_one()
    assert oracles.same(oracles.las_vergnas_graph(g), las_vergnas(D(g)))


def test_random_graphs_against_graph_definitions():
    rng = seeded(5)
    for _ in range(25):
        g = random_ribbon_graph(rng, 4)
        d = D(g)
        assert oracles.same(oracles.tutte_graph(g), tutte(d))
        assert oracles.same(oracles.br_graph(g), bollobas_riordan(d))
        assert oracles.same(oracles.krushkal_graph(g), krushkal(d))
        assert oracles.same(oracles.las_vergnas_graph(g), las_vergnas(d))
        labels = frozenset(e[0] for e in g.edges)
        assert oracles.same(oracles.shifted_two_variable(labels, oracles.quasi_trees(g)), br_two_var(d))


@given(delta_matroids(5))
def test_two_variable_polynomial_against_sigma_oracle(d):
    fam = oracles.feasible_sets(d)
    assert oracles.same(oracles.shifted_two_variable(frozenset(d.ground), fam), br_two_var(d))


@given(delta_matroids(5))
def test_krushkal_routes_agree(d):
    assert krushkal(d) == krushkal_rank_form(d)


def test_ground_too_large():
    big = uniform(1, 17)
    with pytest.raises(GroundTooLarge):
        tutte(big)


def test_unknown_polynomial():
    with pytest.raises(ValueError):
        polynomial(uniform(1, 2), "jones")


# -- identities -------------------------------------------------------------------


@given(delta_matroids(5))
def test_all_identities_hold(d):
    assert polynomial_identities(d) is None


def _width(d):
    sizes = [len(f) for f in oracles.feasible_sets(d)]
    return max(sizes) - min(sizes)


def test_identities_on_a_perfect_square_grid():
    """Numeric spot checks of the identities with half powers, straight
    from the sympy oracles, at points where every square root is rational."""
    rng = seeded(6)
    squares = [sp.Integer(k * k) for k in (2, 3)]
    for _ in range(8):
        g = random_ribbon_graph(rng, 4)
        d = D(g)
        w = _width(d)
        T, L, R, K = oracles.tutte_graph(g), oracles.las_vergnas_graph(g), oracles.br_graph(g), oracles.krushkal_graph(g)
        for xv in (2, 5):
            for yv in squares:
                # (y-1)^w L(x, y, 1/(y-1)) = T(x, y)
                assert (yv - 1) ** w * L.subs({X: xv, Y: yv, Z: 1 / (yv - 1)}) == T.subs({X: xv, Y: yv})
                # T(x, y+1) = y^(w/2) K(x, y, y^(1/2), y^(-1/2))
                r = sp.sqrt(yv)
                assert T.subs({X: xv, Y: yv + 1}) == r ** w * K.subs({X: xv, Y: yv, A: r, B: 1 / r})
                # R(x, y, z, 1) = y^(w/2) K(x, y, z y^(1/2), y^(-1/2)) at z = 3
                assert R.subs({X: xv, Y: yv, Z: 3, W: 1}) == r ** w * K.subs({X: xv, Y: yv, A: 3 * r, B: 1 / r})


def test_evaluations_as_printed_fail_on_a_single_loop():
    """The evaluations at (2, 1) and (1, 2) count independent sets of D_min
    and spanning sets of D_max respectively.  The swapped pairing fails
    already for a single loop ({e}, {{}}): it has one independent set and
    two spanning sets."""
    d = DeltaMatroid("e", [()])
    s = br_two_var(d)  # R~(x + 1, y + 1)
    at_21 = s.evaluate({"x": 1, "y": 0})
    at_12 = s.evaluate({"x": 0, "y": 1})
    independent_in_min = 1
    spanning_in_max = 2
    assert (at_21, at_12) == (independent_in_min, spanning_in_max)
    assert at_12 != independent_in_min


def test_tutte_duality_and_special_values():
    rng = seeded(7)
    for _ in range(40):
        d = D(random_ribbon_graph(rng, 5))
        t = tutte(d)
        m = lower_matroid(d)
        assert t.evaluate({"x": 1, "y": 1}) == len(m.feasible)
        if is_matroid(d):
            assert tutte(dual(d)) == t.substitute({"x": var("y"), "y": var("x")})


def test_cycle_matroid_of_figure_one():
    m = cycle_matroid(figure_one())
    assert oracles.feasible_sets(m) == {frozenset({"1"}), frozenset({"2"})}
    assert upper_matroid(D(figure_one())).size == 4
