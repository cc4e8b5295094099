from math import factorial, comb

import pytest
from hypothesis import given, strategies as st

from hopfinv.combinat import (DyckPath, ParkingFunction, catalan, compositions, conjugate,
                              count_parking_functions, descent_composition, dyck_paths,
                              dyck_paths_with_comp, f_lambda, kostka, multinomial,
                              ordered_set_compositions, parking_functions, partition_list,
                              prime_dyck_paths, refinements, refines, set_partitions,
                              standardize, syt_count)
from hopfinv.errors import InvalidObjectError

# number of partitions p(n), n = 0..10
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
BELL = [1, 1, 2, 5, 15, 52, 203, 877]


def test_partition_counts():
    assert [len(partition_list(n)) for n in range(11)] == PARTITION_COUNTS


def test_compositions_count():
    for n in range(1, 9):
        assert len(list(compositions(n))) == 2 ** (n - 1)


@given(st.integers(0, 9))
def test_conjugate_is_involution(n):
    for la in partition_list(n):
        assert conjugate(conjugate(la)) == la
        assert sum(conjugate(la)) == n


def test_hook_length_matches_tableau_count():
    for n in range(1, 8):
        for la in partition_list(n):
            assert f_lambda(la) == syt_count(la)
        assert sum(f_lambda(la) ** 2 for la in partition_list(n)) == factorial(n)


def test_kostka_row_sums():
    # sum_la K_{la,1^n} f^la = n!, and K_{la,la} = 1
    for n in range(1, 7):
        for la in partition_list(n):
            assert kostka(la, la) == 1
            assert kostka(la, (1,) * n) == f_lambda(la)


def test_refinements_and_refines():
    alpha = (2, 3)
    refs = list(refinements(alpha))
    assert len(refs) == 2 * 4
    assert all(refines(b, alpha) for b in refs)
    assert not refines((3, 2), alpha)


def test_descent_composition():
    assert descent_composition((1, 2, 3)) == (3,)
    assert descent_composition((3, 2, 1)) == (1, 1, 1)
    assert descent_composition((1, 3, 2, 4)) == (2, 2)


def test_set_compositions_and_partitions():
    assert len(list(ordered_set_compositions(5, (2, 3)))) == comb(5, 2)
    assert len(list(ordered_set_compositions(4, (1, 2, 1)))) == multinomial((1, 2, 1))
    for n, b in enumerate(BELL):
        assert len(list(set_partitions(range(1, n + 1)))) == b


def test_standardize():
    assert standardize((10, 3, 7)) == (3, 1, 2)


def test_dyck_counts():
    for n in range(8):
        assert len(list(dyck_paths(n))) == catalan(n)
    for n in range(1, 8):
        assert len(prime_dyck_paths(n)) == catalan(n - 1)


def test_dyck_path_validation():
    with pytest.raises(InvalidObjectError):
        DyckPath("ENNE")
    with pytest.raises(InvalidObjectError):
        DyckPath("NNE")


def test_dyck_statistics_small():
    d = DyckPath("NNENEE")
    assert d.area() == 2
    assert d.comp() == (3,)
    assert d.runs() == [2, 1]
    assert d.type() == (2, 1)
    assert DyckPath("NENENE").comp() == (1, 1, 1)


def test_paths_with_comp_multiply_catalans():
    alpha = (2, 1, 3)
    assert len(list(dyck_paths_with_comp(alpha))) == catalan(1) * catalan(0) * catalan(2)
    assert all(d.comp() == alpha for d in dyck_paths_with_comp(alpha))


def test_parking_function_counts():
    # (n+1)^(n-1) labelled parking functions
    for n in range(1, 7):
        assert count_parking_functions(n) == (n + 1) ** (n - 1)
        assert sum(1 for _ in parking_functions(n)) == (n + 1) ** (n - 1)


def test_parking_function_validation():
    with pytest.raises(InvalidObjectError):
        ParkingFunction(DyckPath("NNEE"), (2, 1))
    with pytest.raises(InvalidObjectError):
        ParkingFunction(DyckPath("NENE"), (1, 1))


def test_parking_functions_by_comp_partition_all():
    n = 4
    total = sum(sum(1 for _ in parking_functions(n, a)) for a in compositions(n))
    assert total == (n + 1) ** (n - 1)
