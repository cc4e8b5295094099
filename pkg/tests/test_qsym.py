import pytest
from hypothesis import given, strategies as st

from hopfinv.combinat import compositions, partition_list
from hopfinv.errors import NotSymmetricError
from hopfinv.qsym import (F, M, expand_monomials, from_monomials, phi_t,
                          principal_specialization, qsym_product, qsym_to_sym, sym_to_qsym)
from hopfinv.symfunc import e, h, s
from hopfinv.tpoly import TPoly

from polyoracle import as_fractions, pmul


def test_quasi_shuffle_small():
    assert qsym_product(M(1), M(1)) == M(1, 1) * 2 + M(2)
    assert qsym_product(M(1), M(2)) == M(1, 2) + M(2, 1) + M(3)


@given(st.sampled_from([c for n in range(1, 4) for c in compositions(n)]),
       st.sampled_from([c for n in range(1, 4) for c in compositions(n)]))
def test_product_matches_polynomials(a, b):
    N = 4
    lhs = expand_monomials(qsym_product(M(*a), M(*b)), N)
    rhs = pmul(expand_monomials(M(*a), N), expand_monomials(M(*b), N))
    assert as_fractions(lhs) == as_fractions(rhs)


def test_fundamental_to_monomial():
    assert F(2).to("M") == M(2) + M(1, 1)
    assert F(1, 1).to("M") == M(1, 1)
    assert F(3).to("M") == M(3) + M(2, 1) + M(1, 2) + M(1, 1, 1)


@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(list(compositions(n)))))
def test_basis_change_round_trip(alpha):
    assert F(*alpha).to("M").to("F") == F(*alpha)


def test_sym_qsym_round_trip():
    for n in range(1, 6):
        for la in partition_list(n):
            f = s(*la)
            assert qsym_to_sym(sym_to_qsym(f)) == f


def test_not_symmetric():
    with pytest.raises(NotSymmetricError):
        qsym_to_sym(M(1, 2))
    with pytest.raises(NotSymmetricError):
        qsym_to_sym(M(1, 2) + M(2, 1) * 2)


def test_phi_t_is_principal_specialization():
    f = sym_to_qsym(e(2, 1) + h(3))
    poly = phi_t(f)
    for k in range(0, 6):
        assert poly(k) == principal_specialization(f, k)


def test_phi_t_of_monomials():
    t = TPoly.t()
    assert phi_t(M(1, 1)) == TPoly.binomial(2)
    assert phi_t(M(1, 1)) * 2 == t * (t - 1)
    assert phi_t(M(2, 1)) == TPoly.binomial(2)
    assert phi_t(M(3)) == t


def test_from_monomials_inverts_expansion():
    q = M(1, 2) * 3 + M(2, 1) - M(1, 1, 1)
    assert from_monomials(expand_monomials(q, 3), 3) == q
