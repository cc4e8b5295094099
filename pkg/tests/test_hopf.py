from collections import Counter

import pytest
from hypothesis import given, strategies as st

from hopfinv.errors import DomainError, InvalidObjectError, ResourceError
from hopfinv.graphs import canonical_graph
from hopfinv.hopf import (LinCombo, antipode_check, antipode_graphs_hm, antipode_takeuchi,
                          coproduct_parts, global_decomposition, is_indecomposable,
                          iterated_coproduct, perm_to_poset, poset_to_graph, product,
                          project_to_classes, set_guards, zeta_21, zeta_A, zeta_edge,
                          zeta_gamma, zeta_one)
from hopfinv.objects import Graph, Permutation

from conftest import graphs, permutations_, posets

P = Permutation.parse


def test_permutation_product():
    assert product(P("31425"), P("2413")) == P("314257968")


def test_permutation_coproduct_components():
    beta = P("2413")
    expected = LinCombo({(P("1"), P(w)): 1 for w in ("312", "213", "132", "231")})
    assert coproduct_parts(beta, 1, 3) == expected
    # each unordered pair of patterns is counted once per value subset
    two = coproduct_parts(beta, 2, 2)
    assert two == LinCombo({(P("12"), P("12")): 2, (P("21"), P("21")): 2,
                            (P("12"), P("21")): 1, (P("21"), P("12")): 1})


def test_coproduct_rejects_bad_split():
    with pytest.raises(DomainError):
        coproduct_parts(P("12"), 1, 2)


def _compose_left(x, a, b, c):
    out = Counter()
    for (left, right), k in coproduct_parts(x, a + b, c).items():
        for (l1, l2), k2 in coproduct_parts(left, a, b).items():
            out[(l1, l2, right)] += k * k2
    return out


def _compose_right(x, a, b, c):
    out = Counter()
    for (left, right), k in coproduct_parts(x, a, b + c).items():
        for (r1, r2), k2 in coproduct_parts(right, b, c).items():
            out[(left, r1, r2)] += k * k2
    return out


@given(st.one_of(permutations_(min_n=1, max_n=5), graphs(min_n=1, max_n=5), posets(min_n=1, max_n=5)),
       st.data())
def test_coassociativity(x, data):
    a = data.draw(st.integers(0, x.n))
    b = data.draw(st.integers(0, x.n - a))
    c = x.n - a - b
    left, right = _compose_left(x, a, b, c), _compose_right(x, a, b, c)
    assert left == right
    if min(a, b, c) > 0:
        assert dict(left) == dict(iterated_coproduct(x, (a, b, c)).items())


@given(graphs(min_n=1, max_n=5), st.data())
def test_graph_coproduct_is_cocommutative(g, data):
    a = data.draw(st.integers(0, g.n))
    ab = coproduct_parts(g, a, g.n - a)
    ba = coproduct_parts(g, g.n - a, a)
    assert ab == ba.map_keys(lambda t: (t[1], t[0]))


@given(permutations_(max_n=4), permutations_(max_n=4))
def test_morphisms_respect_products(a, b):
    assert perm_to_poset(product(a, b)) == product(perm_to_poset(a), perm_to_poset(b))
    P1, P2 = perm_to_poset(a), perm_to_poset(b)
    assert poset_to_graph(product(P1, P2)) == product(poset_to_graph(P1), poset_to_graph(P2))


@given(permutations_(min_n=1, max_n=5), st.data())
def test_morphisms_respect_coproducts(w, data):
    a = data.draw(st.integers(0, w.n))
    lhs = coproduct_parts(w, a, w.n - a).map_keys(lambda t: (perm_to_poset(t[0]), perm_to_poset(t[1])))
    rhs = coproduct_parts(perm_to_poset(w), a, w.n - a)
    assert lhs == rhs
    to_g = lambda t: (poset_to_graph(t[0]), poset_to_graph(t[1]))
    P_ = perm_to_poset(w)
    assert coproduct_parts(P_, a, w.n - a).map_keys(to_g) == coproduct_parts(poset_to_graph(P_), a, w.n - a)


def test_global_decomposition():
    assert global_decomposition(P("21354")) == [P("21"), P("1"), P("21")]
    assert is_indecomposable(P("2413"))
    assert not is_indecomposable(P("12"))
    g = Graph.from_edges(5, [(1, 2), (4, 5)])
    assert global_decomposition(g) == [Graph.complete(2), Graph.empty(1), Graph.complete(2)]


def test_zeta_gamma_values():
    z = zeta_21()
    assert z(P("2143")) == 1
    assert z(P("21")) == 1
    assert z(P("3412")) == 0
    assert z(Permutation(())) == 1
    assert zeta_one(Permutation)(P("123")) == 1
    assert zeta_one(Permutation)(P("132")) == 0
    with pytest.raises(InvalidObjectError):
        zeta_gamma(P("12"))


def test_zeta_A_values():
    z = zeta_A([Graph.complete(2), Graph.path(3)])
    assert z(Graph.from_edges(5, [(1, 4), (2, 3), (3, 5)])) == 1
    assert z(Graph.complete(3)) == 0
    assert zeta_edge()(Graph.from_edges(4, [(1, 3), (2, 4)])) == 1
    with pytest.raises(InvalidObjectError):
        zeta_A([Graph.empty(2)])
    with pytest.raises(DomainError):
        zeta_edge()(P("21"))


@given(graphs(max_n=3), graphs(max_n=3))
def test_zeta_A_is_multiplicative(g, h):
    z = zeta_A([Graph.complete(1), Graph.complete(2), Graph.path(3)])
    assert z(product(g, h)) == z(g) * z(h)


def test_small_antipodes():
    assert antipode_takeuchi(P("12")) == LinCombo({P("12"): 1})
    assert antipode_takeuchi(P("1")) == LinCombo({P("1"): -1})
    k2 = Graph.complete(2)
    expected = LinCombo({canonical_graph(Graph.empty(2)): 2, canonical_graph(k2): -1})
    assert project_to_classes(antipode_takeuchi(k2)) == expected
    assert antipode_graphs_hm(k2) == expected


@given(st.one_of(permutations_(min_n=1, max_n=4), graphs(min_n=1, max_n=4), posets(min_n=1, max_n=4)))
def test_antipode_law(x):
    assert antipode_check(x)


@given(graphs(min_n=1, max_n=5))
def test_flat_sum_antipode_matches_takeuchi(g):
    assert project_to_classes(antipode_takeuchi(g)) == antipode_graphs_hm(g)


def test_antipode_guards():
    set_guards(takeuchi=3, hm=3)
    try:
        with pytest.raises(ResourceError):
            antipode_takeuchi(P("1234"))
        with pytest.raises(ResourceError):
            antipode_graphs_hm(Graph.path(4))
    finally:
        set_guards(takeuchi=7, hm=9)
