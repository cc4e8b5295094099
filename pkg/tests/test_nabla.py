import pytest
from hypothesis import given, strategies as st

from hopfinv.combinat import partition_list
from hopfinv.errors import DomainError, ResourceError
from hopfinv.graphs import graph_classes
from hopfinv.invariants import csf
from hopfinv.nabla import (c_alpha_q1, composition_order_independent, info_dlambda_checks,
                           nabla_q1, nabla_q1_e, nabla_q1_h_via_pf, nabla_q1_h_via_pf_composition,
                           nabla_q1_hook, pn_e_alternation_check, pn_identity_check, route_agreement,
                           sum_c_alpha_check)
from hopfinv.objects import Graph
from hopfinv.symfunc import SymFunc, e, h, positivity_report, s
from hopfinv.tpoly import TPoly

t = TPoly.t()


def test_hook_small():
    assert nabla_q1_hook(1, 3) == e(1, 1, 1) + e(2, 1) * (t * 2 + t * t) + e(3) * t ** 3
    with pytest.raises(DomainError):
        nabla_q1_hook(0, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_hook_formula_matches_multiplicative_route(n):
    for k in range(1, n + 1):
        assert nabla_q1_e(s(k, *([1] * (n - k)))) == nabla_q1_hook(k, n)


def test_nabla_of_h_small():
    assert nabla_q1_e(h(1)) == e(1)
    assert nabla_q1_e(h(2)) == e(2) * t * -1


def test_c_alpha():
    assert c_alpha_q1((2, 1)) == h(2, 1) * -1
    assert c_alpha_q1((1, 1, 1)) == h(1, 1, 1)


@given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(partition_list(n))),
       st.integers(1, 3).flatmap(lambda n: st.sampled_from(partition_list(n))))
def test_multiplicative(la, mu):
    assert nabla_q1_e(h(*la) * h(*mu)) == nabla_q1_e(h(*la)) * nabla_q1_e(h(*mu))


@pytest.mark.parametrize("n", range(1, 6))
def test_routes_agree(n):
    for la in partition_list(n):
        assert route_agreement(la)


def test_order_independence_small():
    assert composition_order_independent((2, 1))
    assert nabla_q1_h_via_pf_composition((1, 2)) == nabla_q1_h_via_pf((2, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_identities(n):
    assert sum_c_alpha_check(n)
    assert pn_identity_check(n)
    assert pn_e_alternation_check(n)


def test_nabla_of_csf_is_positive():
    for n in range(1, 6):
        for cls in graph_classes(n):
            res = nabla_q1(csf(cls.canonical))
            assert positivity_report(res.as_e(), "e").positive
            assert positivity_report(res.as_s(), "s").positive


def test_dlambda_checks_path():
    rep = info_dlambda_checks(Graph.path(3))
    assert rep.ok
    assert rep.acyclic == 4
    assert rep.column_found == t ** 3 * 3 + t * t * 3 + t * 7 + 4


def test_guards():
    with pytest.raises(ResourceError):
        nabla_q1_e(SymFunc.basis_element("h", (10,)))
    with pytest.raises(ResourceError):
        nabla_q1_h_via_pf_composition((9,))
