import pytest

from pyLatticeWorks import linalg_util as la
from pyLatticeWorks.disc_form import Rank2_class
from pyLatticeWorks.exceptions import InvalidClass
from pyLatticeWorks.involution import CLASS_NUMBERS, class_involution, k3_two_lattice
from pyLatticeWorks.lattice import Lattice_vector
from pyLatticeWorks.walls import walls_and_chambers, wall_reflection, ns_isometries, extend_ns_action
from pyLatticeWorks.walls import extendable_ns_actions, verify_class, classification_table


@pytest.mark.parametrize("J,counts", [(1, (1, 0, 2)), (2, (0, 0, 1)), (3, (1, 2, 4)), (4, (1, 0, 2))])
def test_wall_counts(J, counts):
    assert walls_and_chambers(J).counts == counts


def test_class_one_chambers():
    data = walls_and_chambers(1)
    assert [w.coords for w in data.minus2_walls] == [(1, -1)]
    assert data.minus10_walls == []
    assert data.boundary == ((1, 0), (0, 1))
    assert data.rays == [(1, 1)]
    assert data.chambers == [((1, 0), (1, 1)), ((1, 1), (0, 1))]
    assert data.fundamental_witness() == (2, 1)
    assert data.chamber_of((2, 1)) == 0
    assert data.chamber_of((1, 2)) == 1
    assert data.chamber_of((1, 1)) is None
    assert data.chamber_of((-2, -1)) is None


def test_class_three_chambers():
    data = walls_and_chambers(3)
    assert [w.coords for w in data.minus2_walls] == [(0, 1)]
    assert [w.coords for w in data.minus10_walls] == [(2, -3), (2, 3)]
    assert data.boundary == ((1, -1), (1, 1))
    assert data.rays == [(3, -2), (1, 0), (3, 2)]
    assert data.chamber_count == 4
    export = data.export_json()
    assert export["chambers"] == 4
    assert all(w["divisibility"] == 2 for w in export["minus10_walls"])


def test_class_two_has_no_walls():
    data = walls_and_chambers(2)
    assert data.rays == []
    assert data.chamber_count == 1
    with pytest.raises(InvalidClass):
        wall_reflection(2)


def test_wall_reflection_class_one():
    Lam = k3_two_lattice()
    s = wall_reflection(1)
    assert Lattice_vector(Lam, la.mat_vec(s, Lam.e1.coords)) == Lam.f1
    assert Lattice_vector(Lam, la.mat_vec(s, Lam.e2.coords)) == Lam.e2


@pytest.mark.parametrize("J", [1, 3, 4])
def test_wall_reflection_is_an_isometry(J):
    Lam = k3_two_lattice()
    s = wall_reflection(J)
    assert s * s == la.identity(23)
    assert s.T * Lam.gram * s == Lam.gram
    assert class_involution(J).commutes_with(s)


def test_ns_isometries():
    assert len(ns_isometries(1)) == 4
    assert len(ns_isometries(3)) == 4


def test_class_two_swap_does_not_extend():
    swap = la.int_matrix([[0, 1], [1, 0]])
    assert swap in ns_isometries(2)
    data = walls_and_chambers(2)
    assert data.chamber_of(la.mat_vec(swap, data.fundamental_witness())) == 0
    assert extend_ns_action(2, swap, 1) is None
    assert extend_ns_action(2, swap, -1) is None


@pytest.mark.parametrize("J", CLASS_NUMBERS)
def test_extendable_actions(J):
    actions = extendable_ns_actions(J)
    assert [eps for _, eps in actions] == [1, -1]
    assert all(sigma == la.identity(2) for sigma, _ in actions)
    assert extend_ns_action(J, la.identity(2), -1) == class_involution(J).matrix


def test_verify_class():
    row = verify_class(3)
    assert row.invariant_name == Rank2_class.two_minus_two
    assert row.g_divisibility == 2
    assert row.fibre_size == 4
    assert str(row) == "3 | ⟨2⟩⊕⟨-2⟩ | div 2 | 4"
    with pytest.raises(InvalidClass):
        verify_class(7)


def test_classification_table():
    rows = classification_table()
    observed = [(r.number, r.invariant_name.value, r.g_divisibility, r.fibre_size) for r in rows]
    assert observed == [
        (1, "U", None, 2),
        (2, "U(2)", None, 1),
        (3, "⟨2⟩⊕⟨-2⟩", 2, 4),
        (4, "⟨2⟩⊕⟨-2⟩", 1, 2),
    ]
    assert str(rows[0]) == "1 | U | — | 2"
    assert rows[1].export_json()["walls"] == [0, 0, 1]
