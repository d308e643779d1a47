import pytest

from pyLatticeWorks.eichler import residue, eichler_invariant, eichler_equivalent, check_witness, is_hyperbolic_plane
from pyLatticeWorks.exceptions import NotPrimitive, WitnessInvalid, LatticeMismatch
from pyLatticeWorks.involution import k3_two_lattice
from pyLatticeWorks.lattice import Lattice, Sublattice, make_U, make_rank_one, direct_sum
from pyLatticeWorks.mukai import full_mukai_lattice


def _lambda_witness():
    Lam = k3_two_lattice()
    return [Sublattice(Lam, [Lam.e1, Lam.f1]), Sublattice(Lam, [Lam.e3, Lam.f3])]


def test_residue():
    U = make_U()
    assert residue(U.vector(1, 1)) == ()
    assert residue(make_rank_one(2).vector(1)) == (1,)

    Lam = k3_two_lattice()
    assert residue(Lam.delta) == (1,)
    assert residue(Lam.e2 - Lam.f2) == (0,)
    with pytest.raises(NotPrimitive):
        residue(2 * Lam.delta)


def test_eichler_invariant():
    Lam = k3_two_lattice()
    assert eichler_invariant(Lam.delta) == (-2, 2, (1,))
    assert eichler_invariant(Lam.e2 - Lam.f2) == (-2, 1, (0,))
    assert eichler_invariant(Lam.e1 + Lam.f1) == (2, 1, (0,))


def test_eichler_equivalent_in_u_plus_u():
    L = direct_sum(make_U(), make_U())
    witness = [Sublattice(L, [(1, 0, 0, 0), (0, 1, 0, 0)]), Sublattice(L, [(0, 0, 1, 0), (0, 0, 0, 1)])]
    assert eichler_equivalent(L.vector(1, 0, 0, 0), L.vector(0, 1, 0, 0), witness)
    assert eichler_equivalent(L.vector(1, 1, 0, 0), L.vector(0, 0, 1, 1), witness)
    assert not eichler_equivalent(L.vector(1, 1, 0, 0), L.vector(1, 0, 0, 0), witness)


def test_eichler_separates_minus_two_classes_in_lambda():
    Lam = k3_two_lattice()
    witness = _lambda_witness()
    assert eichler_equivalent(Lam.e1 + Lam.f1, Lam.e2 + Lam.f2, witness)
    assert eichler_equivalent(Lam.e1 - Lam.f1, Lam.e2 - Lam.f2, witness)
    assert not eichler_equivalent(Lam.delta, Lam.e2 - Lam.f2, witness)


def test_invalid_witness():
    Lam = k3_two_lattice()
    plane = Sublattice(Lam, [Lam.e1, Lam.f1])
    with pytest.raises(WitnessInvalid):
        check_witness([plane])
    with pytest.raises(WitnessInvalid):
        check_witness([plane, Sublattice(Lam, [Lam.e1 + Lam.e2, Lam.f2])])
    with pytest.raises(WitnessInvalid):
        check_witness([plane, Sublattice(Lam, [Lam.e2, Lam.f1 + Lam.f2])])
    with pytest.raises(WitnessInvalid):
        eichler_equivalent(Lam.delta, Lam.e2 - Lam.f2, [plane, Sublattice(Lam, [Lam.e1 + Lam.f1, Lam.delta])])


def test_witness_must_live_in_the_same_lattice():
    L = direct_sum(make_U(), make_U())
    witness = [Sublattice(L, [(1, 0, 0, 0), (0, 1, 0, 0)]), Sublattice(L, [(0, 0, 1, 0), (0, 0, 0, 1)])]
    Lam = k3_two_lattice()
    with pytest.raises(LatticeMismatch):
        eichler_equivalent(Lam.delta, Lam.e1 - Lam.f1, witness)


def _unit(rank, *entries):
    coords = [0] * rank
    for i, c in entries:
        coords[i] = c
    return tuple(coords)


def test_witness_accepts_any_hyperbolic_plane():
    M = full_mukai_lattice()
    n = M.rank
    u0 = Sublattice(M, [_unit(n, (0, 1)), _unit(n, (1, 1))])
    u1 = Sublattice(M, [_unit(n, (2, 1)), _unit(n, (3, 1))])
    assert u0.gram.tolist() == [[0, -1], [-1, 0]]
    check_witness([u0, u1])

    assert eichler_equivalent(M.vector(*_unit(n, (0, 1))), M.vector(*_unit(n, (2, 1))), [u0, u1])
    assert eichler_equivalent(M.vector(*_unit(n, (0, 1), (1, -1))), M.vector(*_unit(n, (2, 1), (3, 1))), [u0, u1])
    assert not eichler_equivalent(M.vector(*_unit(n, (0, 1), (1, -1))), M.vector(*_unit(n, (2, 1))), [u0, u1])

    L = direct_sum(make_U(), make_U())
    skewed = Sublattice(L, [(1, 0, 0, 0), (1, 1, 0, 0)])
    assert skewed.gram.tolist() == [[0, 1], [1, 2]]
    check_witness([skewed, Sublattice(L, [(0, 0, 1, 0), (0, 0, 0, 1)])])


def test_hyperbolic_plane_invariants():
    assert is_hyperbolic_plane(make_U().gram)
    assert is_hyperbolic_plane(Lattice([[0, -1], [-1, 0]]).gram)
    assert not is_hyperbolic_plane(Lattice([[0, 2], [2, 0]]).gram)
    assert not is_hyperbolic_plane(Lattice([[2, 0], [0, -2]]).gram)
    assert not is_hyperbolic_plane(Lattice([[2, 1], [1, 2]]).gram)
    assert not is_hyperbolic_plane(make_rank_one(2).gram)
