import pytest

from diagsets.bruteforce import (
    OracleGuardError,
    closed_walk_lengths_bf,
    diagonal_S_bf,
    diagonal_inf_bf,
    diagonal_n_bf,
    enumerate_graphs,
    exhaustive_sweep,
    walk_exists_bf,
    walk_from_exists_bf,
)
from diagsets.graph import make_graph

C3 = make_graph(3, [(0, 1), (1, 2), (2, 0)])
PATH3 = make_graph(3, [(0, 1), (1, 2)])
LOOP1 = make_graph(1, [(0, 0)])


def test_walk_exists_on_c3():
    assert walk_exists_bf(C3, 0, 0, 3)
    assert not walk_exists_bf(C3, 0, 0, 2)


def test_empty_walk_convention():
    assert walk_exists_bf(PATH3, 1, 1, 0)
    assert not walk_exists_bf(PATH3, 1, 2, 0)


def test_walk_from_exists():
    assert walk_from_exists_bf(PATH3, 0, 2)
    assert not walk_from_exists_bf(PATH3, 0, 3)


def test_guards_are_hard_errors():
    big = make_graph(9, [])
    with pytest.raises(OracleGuardError):
        walk_exists_bf(big, 0, 0, 1)
    with pytest.raises(OracleGuardError):
        walk_exists_bf(C3, 0, 0, 13)
    with pytest.raises(OracleGuardError):
        diagonal_n_bf(C3, 12)
    with pytest.raises(OracleGuardError):
        closed_walk_lengths_bf(C3, 0, 129)


def test_diagonal_n_bf_on_c3():
    assert diagonal_n_bf(C3, 2).to_list() == []
    assert diagonal_n_bf(C3, 1).to_list() == [0, 1, 2]
    with pytest.raises(ValueError):
        diagonal_n_bf(C3, 0)


def test_diagonal_inf_bf_on_acyclic_path():
    assert diagonal_inf_bf(PATH3).to_list() == [0, 1, 2]
    assert diagonal_inf_bf(C3).to_list() == []


def test_diagonal_S_bf_on_loop():
    assert diagonal_S_bf(LOOP1, [0, 4]).to_list() == []
    with pytest.raises(ValueError):
        diagonal_S_bf(LOOP1, [])


def test_closed_walk_lengths():
    assert closed_walk_lengths_bf(C3, 0, 10) == {3, 6, 9}
    assert closed_walk_lengths_bf(PATH3, 0, 10) == set()
    assert closed_walk_lengths_bf(LOOP1, 0, 5) == {1, 2, 3, 4, 5}


def test_enumerate_graphs_counts():
    assert len(list(enumerate_graphs(1))) == 2
    two = list(enumerate_graphs(2))
    assert len(two) == 16
    assert len(set(two)) == 16


def test_sweep_order_one():
    report = exhaustive_sweep(order_max=1)
    assert report.graphs_checked == 2
    assert report.per_order == {1: 2}
    assert report.ok()


def test_sweep_order_two():
    report = exhaustive_sweep(order_max=2)
    assert report.graphs_checked == 18
    assert report.per_order == {1: 2, 2: 16}
    assert report.total_failures() == 0
    assert all(p.first_counterexample is None for p in report.properties)


def test_sweep_rejects_bad_bounds():
    with pytest.raises(ValueError):
        exhaustive_sweep(order_max=0)
    with pytest.raises(ValueError):
        exhaustive_sweep(order_max=5)
    with pytest.raises(ValueError):
        exhaustive_sweep(order_max=4)  # needs the explicit opt-in flag
