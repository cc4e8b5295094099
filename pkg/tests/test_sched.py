import pytest
from hypothesis import given, strategies as st

from hopfinv.errors import DomainError
from hopfinv.graphs import graph_classes
from hopfinv.hopf import zeta_A, zeta_edge, zeta_one
from hopfinv.invariants import psi
from hopfinv.objects import Graph
from hopfinv.qsym import M, sym_to_qsym
from hopfinv.sched import (And, Atom, FormulaSyntaxError, Not, Or, SchedFormula, build_S_g_A,
                           coloring_formula, parse, phi_truncated, solutions, to_text,
                           verify_phi_equals_psi)


def test_parse_and_print():
    S = parse("x1 != x2 & (x2 <= x3 | !x1 = x3)")
    assert S.n == 3
    assert isinstance(S.root, And)
    assert str(S) == "x1 != x2 & (x2 <= x3 | !(x1 = x3))"
    assert parse("x1 = x2", n=4).n == 4


def test_precedence():
    S = parse("x1 = x2 | x2 = x3 & x1 != x3")
    assert isinstance(S.root, Or)
    assert isinstance(S.root.children[1], And)


@pytest.mark.parametrize("text,token", [
    ("x1 ! x2", 2),
    ("x1 = ", 3),
    ("(x1 = x2", 5),
    ("x1 = x2 x3", 4),
    ("x0 = x1", 1),
    ("& x1 = x2", 1),
])
def test_syntax_errors(text, token):
    with pytest.raises(FormulaSyntaxError) as info:
        parse(text)
    assert info.value.token_index == token


def test_bad_character():
    with pytest.raises(FormulaSyntaxError):
        parse("x1 = y2")


def test_n_too_small():
    with pytest.raises(DomainError):
        parse("x1 = x3", n=2)


atoms = st.builds(Atom, st.integers(1, 3), st.sampled_from(["=", "!=", "<="]), st.integers(1, 3))
formulas = st.recursive(
    atoms,
    lambda kids: st.one_of(st.builds(Not, kids),
                           st.builds(lambda c: And(tuple(c)), st.lists(kids, min_size=2, max_size=3)),
                           st.builds(lambda c: Or(tuple(c)), st.lists(kids, min_size=2, max_size=3))),
    max_leaves=6)


@given(formulas)
def test_print_parse_round_trip_preserves_meaning(root):
    S = SchedFormula(root, 3)
    T = parse(str(S), n=3)
    assert list(solutions(S, 3)) == list(solutions(T, 3))
    assert str(T) == str(parse(str(T), n=3))


def test_phi_examples():
    assert phi_truncated(parse("x1 != x2"), 2) == M(1, 1) * 2
    assert phi_truncated(parse("x1 = x1"), 1) == M(1)
    assert phi_truncated(parse("x1 != x1"), 1).terms == {}
    assert phi_truncated(parse("x1 <= x2"), 2) == M(1, 1) + M(2)
    with pytest.raises(DomainError):
        phi_truncated(parse("x1 = x2"), 1)


def test_coloring_formula_gives_csf():
    for cls in graph_classes(4):
        g = cls.canonical
        if not g.edges:
            continue
        assert phi_truncated(coloring_formula(g), g.n) == sym_to_qsym(psi(zeta_one(Graph), g))


def test_build_for_path():
    assert str(build_S_g_A(Graph.path(4), zeta_edge())) == "x1 = x2 & x3 = x4 & x2 != x3"
    assert str(build_S_g_A(Graph.path(3), zeta_edge())) == "x1 != x1"
    assert phi_truncated(build_S_g_A(Graph.path(4), zeta_edge()), 4) == M(2, 2) * 2


def test_empty_connectives_print():
    assert to_text(And(())) == "x1 = x1"
    assert to_text(Or(())) == "x1 != x1"


def test_verify_small():
    for cls in graph_classes(4):
        assert verify_phi_equals_psi(cls.canonical, zeta_A([Graph.complete(2), Graph.path(3)])).equal
