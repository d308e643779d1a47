import warnings

import pytest

from pyLatticeWorks import linalg_util as la
from pyLatticeWorks.exceptions import EnumerationCapExceeded
from pyLatticeWorks.lattice import Lattice, make_U, make_rank_one, rescale, direct_sum
from pyLatticeWorks.mukai import algebraic_mukai_lattice
from pyLatticeWorks.represent import represent, brute_force_represent, isometry_search, automorphisms
from pyLatticeWorks.represent import has_complete_solver


def _coords(vectors):
    return [v.coords for v in vectors]


def test_represent_examples():
    assert _coords(represent(make_U(), -2)) == [(1, -1)]
    assert represent(rescale(make_U(), 2), -2) == []
    assert _coords(represent(Lattice([[2, 0], [0, -2]]), -10)) == [(2, -3), (2, 3)]
    assert _coords(represent(make_U(), 0)) == [(0, 1), (1, 0)]
    assert _coords(represent(Lattice([[2, 0], [0, -2]]), 0)) == [(1, -1), (1, 1)]


def test_represent_definite():
    A2 = Lattice([[2, 1], [1, 2]])
    assert _coords(represent(A2, 2)) == [(0, 1), (1, -1), (1, 0)]
    assert represent(A2, -2) == []
    assert _coords(represent(Lattice([[-2, -1], [-1, -2]]), -2)) == [(0, 1), (1, -1), (1, 0)]


@pytest.mark.parametrize("gram", [[[0, 1], [1, 0]], [[0, 2], [2, 0]], [[2, 0], [0, -2]]])
def test_represent_agrees_with_brute_force(gram):
    L = Lattice(gram)
    assert has_complete_solver(L)
    for n in range(-20, 21, 2):
        assert _coords(represent(L, n)) == _coords(brute_force_represent(L, n, 50))


def test_represent_warns_without_complete_solver():
    L = Lattice([[2, 1], [1, -2]])
    assert not has_complete_solver(L)
    with pytest.warns(UserWarning):
        solutions = represent(L, 2, bound=3)
    assert (1, 0) in _coords(solutions)


def test_represent_needs_rank_two():
    with pytest.raises(ValueError):
        represent(direct_sum(make_U(), make_rank_one(2)), 2)


def test_brute_force_cap():
    with pytest.raises(EnumerationCapExceeded):
        brute_force_represent(direct_sum(make_U(), make_U(), make_U()), 0, 10)


def test_isometry_search_finds_change_of_basis():
    L1 = Lattice([[0, -1], [-1, 2]])
    U = make_U()
    T = isometry_search(L1, U)
    assert T is not None
    assert T.T * L1.gram * T == U.gram
    assert abs(la.det(T)) == 1


def test_isometry_search_rejects_non_isometric():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert isometry_search(make_U(), rescale(make_U(), 2)) is None
        assert isometry_search(rescale(make_U(), 2), Lattice([[2, 0], [0, -2]])) is None


def test_isometry_search_rank_three():
    L1 = algebraic_mukai_lattice()
    L2 = direct_sum(make_U(), make_rank_one(2))
    T = isometry_search(L1, L2, bound=2)
    assert T is not None
    assert T.T * L1.gram * T == L2.gram


def test_automorphisms():
    assert len(automorphisms(make_U())) == 4
    assert len(automorphisms(Lattice([[2, 0], [0, -2]]))) == 4
    assert len(automorphisms(Lattice([[2, 1], [1, 2]]))) == 12
    with pytest.raises(ValueError):
        automorphisms(Lattice([[2, 1], [1, -2]]))
