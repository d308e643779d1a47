import pytest

from pyLatticeWorks import linalg_util as la
from pyLatticeWorks.disc_form import Rank2_class
from pyLatticeWorks.exceptions import NotPrimitive, InvalidTrace
from pyLatticeWorks.involution import k3_two_lattice
from pyLatticeWorks.mukai import Mukai_vector, mukai_pairing, mukai_square, mukai_vector_of_sheaf
from pyLatticeWorks.mukai import algebraic_mukai_lattice, full_mukai_lattice, full_mukai_involution, embed_in_full
from pyLatticeWorks.mukai import hilbert_scheme_vector, hilbert_scheme_h2_lattice, hilbert_scheme_check
from pyLatticeWorks.mukai import moduli_dimension, ogrady_invariant_lattice
from pyLatticeWorks.mukai import beauville_invariants, trace_from_invariant_rank, impossibility_u2, impossibility_no4


def test_mukai_pairing():
    assert mukai_square(Mukai_vector(2, 1, 0)) == 2
    assert mukai_square(Mukai_vector(1, 0, -1)) == 2
    assert mukai_square(Mukai_vector(0, 1, 2)) == 2
    assert mukai_pairing(Mukai_vector(1, 0, 0), Mukai_vector(2, 1, 0)) == 0
    assert mukai_pairing(Mukai_vector(1, 0, 0), Mukai_vector(0, 0, 1)) == -1
    assert moduli_dimension(Mukai_vector(2, 1, 0)) == 4


def test_mukai_vector_basics():
    v = Mukai_vector(2, 1, 0)
    assert v.coords == (2, 0, 1)
    assert Mukai_vector.from_coords(v.coords) == v
    assert str(v) == "(2,1H,0)"
    assert v.export_json() == {"r": 2, "a": 1, "s": 0}
    assert not Mukai_vector(2, 0, -2).is_primitive
    assert algebraic_mukai_lattice().det == -2


def test_mukai_vector_of_sheaf():
    assert mukai_vector_of_sheaf(1, 0, -2) == Mukai_vector(1, 0, -1)
    assert mukai_vector_of_sheaf(2, 1, -2) == Mukai_vector(2, 1, 0)
    assert mukai_vector_of_sheaf(0, 1, 2) == Mukai_vector(0, 1, 2)


def test_hilbert_scheme():
    assert hilbert_scheme_vector(2) == Mukai_vector(1, 0, -1)
    assert mukai_square(hilbert_scheme_vector(3)) == 4
    assert hilbert_scheme_h2_lattice(2).gram == k3_two_lattice().gram
    assert abs(hilbert_scheme_h2_lattice(4).det) == 6
    with pytest.raises(ValueError):
        hilbert_scheme_vector(0)
    with pytest.raises(ValueError):
        hilbert_scheme_h2_lattice(1)

    check = hilbert_scheme_check(3)
    assert check["det"] == 4
    assert check["signature"] == [3, 20]
    assert check["moduli_dimension"] == 6


def test_full_mukai_lattice():
    L = full_mukai_lattice()
    assert L.rank == 24
    assert L.is_unimodular
    assert L.signature == (4, 20)
    phi = full_mukai_involution()
    v = embed_in_full(Mukai_vector(2, 1, 0))
    assert la.mat_vec(phi, v.coords) == v.coords
    assert v.norm == 2


@pytest.mark.parametrize("v,name", [
    (Mukai_vector(1, 0, -1), Rank2_class.two_minus_two),
    (Mukai_vector(2, 1, 0), Rank2_class.U),
    (Mukai_vector(0, 1, 2), Rank2_class.U),
])
def test_ogrady_invariant_lattice(v, name):
    result = ogrady_invariant_lattice(v)
    assert result.name == name
    assert result.invariant.rank == 2
    G1 = result.invariant.gram
    T = result.base_change
    assert T.T * G1 * T == result.full_gram
    assert result.export_json()["name"] == name.value


def test_ogrady_complement_of_hilbert_vector():
    result = ogrady_invariant_lattice(Mukai_vector(1, 0, -1))
    assert result.invariant.basis_coords == [(1, 1, 0), (0, 0, 1)]
    assert la.to_rows(result.invariant.gram) == [[-2, 0], [0, 2]]


def test_ogrady_errors():
    with pytest.raises(NotPrimitive):
        ogrady_invariant_lattice(Mukai_vector(2, 0, -2))
    with pytest.raises(ValueError):
        ogrady_invariant_lattice(Mukai_vector(1, 0, 0))


def test_beauville_invariants():
    assert beauville_invariants(-17).as_tuple() == (288, 37, 156, 19)
    assert beauville_invariants(-19).as_tuple() == (360, 46, 192, 20)
    assert beauville_invariants(21).as_tuple() == (440, 56, 232, 0)
    assert beauville_invariants(1).as_tuple() == (0, 1, 12, 10)
    assert beauville_invariants(-17).export_json()["k_squared"] == 288
    for t in (-18, 0, 23, -21):
        with pytest.raises(InvalidTrace):
            beauville_invariants(t)


def test_trace_from_invariant_rank():
    assert trace_from_invariant_rank(2) == -17
    assert trace_from_invariant_rank(1) == -19
    assert trace_from_invariant_rank(21) == 21
    with pytest.raises(ValueError):
        trace_from_invariant_rank(0)
    with pytest.raises(ValueError):
        trace_from_invariant_rank(22)


def test_impossibility_u2():
    report = impossibility_u2(4)
    assert report.passed
    assert report.data["counterexamples"] == []
    assert report.data["checked"] > 0
    assert len(report.data["isotropic_subgroups"]) == 3
    assert "U(2)" not in report.data["complement_classes"]


def test_impossibility_no4():
    report = impossibility_no4(4)
    assert report.passed
    assert report.data["qualifying"] > 0
    assert all(p["half_sum_integral"] for p in report.data["pairs"])
    assert any(p["v"] == Mukai_vector(1, 0, -1) for p in report.data["pairs"])


def test_impossibility_sweeps_at_default_bound():
    report = impossibility_u2(10)
    assert report.passed
    assert report.data["counterexamples"] == []

    report = impossibility_no4(10)
    assert report.passed
    assert report.data["failures"] == []
    assert report.data["qualifying"] > 0
