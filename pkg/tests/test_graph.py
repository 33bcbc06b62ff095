import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corrupt import BROKEN
from trickle.dyadic import Dyadic
from trickle.families import (affine_quandle_graph, cactus, dual_cactus_s3,
                              fixture, gar3, FIXTURES)
from trickle.graph import GraphError, INFINITY, TrickleGraph, dual_graph, spot_check, validate
from trickle.thompson import TOP, f_graph


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_all_fixtures_validate(name):
    assert validate(fixture(name)).ok


@pytest.mark.parametrize("axiom", sorted(BROKEN))
def test_broken_fixtures_rejected(axiom, max_other=0):
    report = validate(BROKEN[axiom]())
    assert report.axioms_violated() == [axiom]


def test_identity_phi_passes_axioms():
    # forcing every star map to the identity never breaks (a)-(g)
    j3 = cactus(3)
    g = TrickleGraph.build(
        j3.vertices, {v: 2 for v in j3.vertices},
        [(x, y) for i, x in enumerate(j3.vertices) for y in j3.vertices[i + 1:]
         if j3.edge(x, y)],
        [(x, y) for x in j3.vertices for y in j3.vertices if j3.less(x, y)])
    assert validate(g).ok


def test_structural_error_reported_before_axioms():
    g = TrickleGraph.build(["x", "y", "z"], INFINITY,
                           edges=[("x", "y"), ("x", "z")],
                           phi={"x": {"y": "z", "z": "z"}})
    report = validate(g)
    assert "structure" in report.axioms_violated()


def test_less_cycle_rejected():
    with pytest.raises(GraphError, match="cycle"):
        TrickleGraph.build(["a", "b"], 2, [("a", "b")], [("a", "b"), ("b", "a")])


def test_transitive_closure_of_covering_pairs():
    g = TrickleGraph.build(["a", "b", "c"], 2,
                           [("a", "b"), ("b", "c"), ("a", "c")],
                           [("a", "b"), ("b", "c")])
    assert g.less("a", "c")


def test_ranking_extends_order():
    for name in FIXTURES:
        g = fixture(name)
        for x in g.vertices:
            for y in g.vertices:
                if g.less(x, y):
                    assert g.rank(x) < g.rank(y)


def test_ranking_override_must_extend_order():
    g = gar3()
    reranked = g.with_ranking(["z", "y", "x"])
    assert reranked.vertices == ("z", "y", "x")
    with pytest.raises(GraphError, match="linear extension"):
        g.with_ranking(["x", "y", "z"])
    with pytest.raises(GraphError, match="permutation"):
        g.with_ranking(["x", "y"])


# ----------------------------------------------------------------------
# phi powers


def test_phi_pow_examples():
    g = gar3()
    assert g.phi_pow("x", 2, "y") == "y"
    assert g.phi_pow("x", -1, "y") == "z"
    assert g.phi_pow("x", 0, "y") == "y"
    assert g.phi_pow("x", 7, "z") == "y"


def test_phi_pow_outside_star():
    j3 = cactus(3)
    with pytest.raises(GraphError):
        j3.phi("[1,2]", "[2,3]")


def test_phi_inv_undoes_phi_everywhere():
    for name in FIXTURES:
        g = fixture(name)
        for x in g.vertices:
            for y in g.star(x):
                assert g.phi_inv(x, g.phi(x, y)) == y


def test_phi_pow_exchange_identity_on_chains():
    # phi_x^a . phi_y^b = phi_{phi_x^a(y)}^b . phi_x^a below y, for all chains
    rng = random.Random(1)
    for name in ("J4", "GAR3", "CSTAR", "KJ3"):
        g = fixture(name)
        chains = [(z, y, x) for x in g.vertices for y in g.vertices for z in g.vertices
                  if g.leq(z, y) and g.leq(y, x)]
        for z, y, x in chains:
            for _ in range(4):
                a, b = rng.randint(-3, 3), rng.randint(-3, 3)
                lhs = g.phi_pow(x, a, g.phi_pow(y, b, z))
                rhs = g.phi_pow(g.phi_pow(x, a, y), b, g.phi_pow(x, a, z))
                assert lhs == rhs


# ----------------------------------------------------------------------
# dual graphs


def test_dual_involution():
    g = gar3()
    assert dual_graph(dual_graph(g)).same_structure(g)


def test_dual_of_involutive_maps_is_itself():
    j3 = cactus(3)
    assert dual_graph(j3).same_structure(j3)


def test_dual_cstar_inverts_the_cycle():
    d = dual_graph(dual_cactus_s3())
    assert d.phi("u", "x") == "z"
    assert d.phi("u", "z") == "y"
    assert d.phi("u", "y") == "x"
    assert validate(d).ok


# ----------------------------------------------------------------------
# spot checks on lazy graphs


def test_spot_check_thompson_chain():
    g = f_graph()
    report = spot_check(g, [(Dyadic(-1, 2), Dyadic(0), Dyadic(1)),
                            (Dyadic(-1, 2), Dyadic(0), TOP)])
    assert report.ok and report.checked == 2


def test_spot_check_quandle_chain():
    g = affine_quandle_graph()
    assert spot_check(g, [(Dyadic(0), Dyadic(1, 1), Dyadic(1))]).ok


def test_spot_check_vacuous():
    report = spot_check(f_graph(), [])
    assert report.ok
    assert report.describe() == "valid (vacuous)"


def test_validate_refuses_lazy():
    with pytest.raises(GraphError):
        validate(f_graph())


# ----------------------------------------------------------------------
# misc properties


@settings(max_examples=60, deadline=None)
@given(st.integers(-40, 40), st.integers(-40, 40))
def test_graph_product_phi_trivial(a, b):
    g = gar3()
    # phi_y and phi_z are identities; only phi_x acts
    assert g.phi_pow("y", a, "x") == "x"
    assert g.phi_pow("z", b, "x") == "x"


def test_star_contents():
    j3 = cactus(3)
    assert j3.star("[1,3]") == {"[1,2]", "[2,3]", "[1,3]"}
    assert j3.star("[1,2]") == {"[1,2]", "[1,3]"}


def test_phi_order():
    assert dual_cactus_s3().phi_order("u") == 3
    assert gar3().phi_order("x") == 2
    assert gar3().phi_order("y") == 1
