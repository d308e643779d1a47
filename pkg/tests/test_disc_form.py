import pytest

from sympy import Rational

from pyLatticeWorks.disc_form import Rank2_class, Isotropic_subgroup
from pyLatticeWorks.disc_form import discriminant_group, is_two_elementary, two_elementary_invariants, classify_rank2
from pyLatticeWorks.disc_form import isotropic_subgroups, overlattice, is_primitive_in, forms_isomorphic
from pyLatticeWorks.exceptions import EnumerationCapExceeded, NotIntegral, NotIsotropic
from pyLatticeWorks.involution import k3_two_lattice
from pyLatticeWorks.lattice import Lattice, Sublattice, make_U, make_E8, make_rank_one, rescale, direct_sum


def test_rank_one_forms():
    A = discriminant_group(make_rank_one(2))
    assert A.orders == [2]
    assert A.q((1,)) == Rational(1, 2)
    assert A.b((1,), (1,)) == Rational(1, 2)

    B = discriminant_group(make_rank_one(-2))
    assert B.q((1,)) == Rational(3, 2)


def test_unimodular_has_trivial_group():
    for L in (make_U(), make_E8()):
        A = discriminant_group(L)
        assert A.orders == []
        assert A.order == 1
        assert list(A.elements()) == [()]


def test_lambda_discriminant():
    A = discriminant_group(k3_two_lattice())
    assert A.orders == [2]
    assert A.q((1,)) == Rational(3, 2)
    Lam = k3_two_lattice()
    assert A.class_of([Rational(x, 2) for x in Lam.delta.coords]) == (1,)
    assert A.class_of(Lam.e1.coords) == (0,)


def test_u2_form():
    A = discriminant_group(rescale(make_U(), 2))
    assert A.orders == [2, 2]
    assert A.order == 4
    assert A.value_multiset() == [0, 0, 0, 1]
    assert sorted(A.b_matrix()[0] + A.b_matrix()[1]) == [0, 0, Rational(1, 2), Rational(1, 2)]
    assert A.export_json()["orders"] == [2, 2]


def test_class_of_requires_dual_vector():
    A = discriminant_group(make_U())
    with pytest.raises(NotIntegral):
        A.class_of([Rational(1, 2), 0])


def test_element_arithmetic():
    A = discriminant_group(make_rank_one(6))
    assert A.orders == [6]
    assert A.add((4,), (5,)) == (3,)
    assert A.scale(3, (2,)) == (0,)
    assert A.element_order((2,)) == 3
    assert A.element_order((3,)) == 2


def test_two_elementary_invariants():
    assert two_elementary_invariants(make_U()) == (2, 0, 0)
    assert two_elementary_invariants(rescale(make_U(), 2)) == (2, 2, 0)
    assert two_elementary_invariants(Lattice([[2, 0], [0, -2]])) == (2, 2, 1)
    assert two_elementary_invariants(k3_two_lattice()) == (23, 1, 1)
    assert not is_two_elementary(make_rank_one(4))
    with pytest.raises(ValueError):
        two_elementary_invariants(make_rank_one(4))


def test_classify_rank2():
    assert classify_rank2(make_U()) == Rank2_class.U
    assert classify_rank2(Lattice([[0, -1], [-1, 2]])) == Rank2_class.U
    assert classify_rank2(rescale(make_U(), 2)) == Rank2_class.U2
    assert classify_rank2(Lattice([[0, 2], [2, 4]])) == Rank2_class.U2
    assert classify_rank2(Lattice([[2, 0], [0, -2]])) == Rank2_class.two_minus_two
    assert classify_rank2(Lattice([[2, 1], [1, -2]])) == Rank2_class.other
    assert classify_rank2(Lattice([[0, 3], [3, 0]])) == Rank2_class.other
    assert classify_rank2(Lattice([[2, 0], [0, -8]])) == Rank2_class.other
    with pytest.raises(ValueError):
        classify_rank2(Lattice([[2, 1], [1, 2]]))
    with pytest.raises(ValueError):
        classify_rank2(make_E8())


def test_isotropic_subgroups_of_u2_plus_two():
    A = discriminant_group(direct_sum(rescale(make_U(), 2), make_rank_one(2)))
    subgroups = isotropic_subgroups(A)
    assert [H.order for H in subgroups] == [1, 2, 2]
    for H in subgroups:
        assert all(A.q(x) == 0 for x in H.elements)

    assert [H.order for H in isotropic_subgroups(discriminant_group(make_rank_one(2)))] == [1]

    with pytest.raises(EnumerationCapExceeded):
        isotropic_subgroups(A, max_size=4)


def test_isotropic_subgroup_validation():
    A = discriminant_group(make_rank_one(2))
    with pytest.raises(NotIsotropic):
        Isotropic_subgroup(A, [(0,), (1,)])
    with pytest.raises(NotIsotropic):
        Isotropic_subgroup(A, [(1,)])


def test_unimodular_overlattice_of_lambda_plus_two():
    L = direct_sum(k3_two_lattice(), make_rank_one(2))
    glues = [H for H in isotropic_subgroups(discriminant_group(L)) if H.order > 1]
    assert len(glues) == 1
    O = overlattice(L, glues[0])
    assert abs(O.lattice.det) == 1
    assert O.lattice.signature == (4, 20)
    # 原格的基向量在超格中的像保持配对
    assert O.embedding.T * O.lattice.gram * O.embedding == L.gram


def test_overlattice_breaks_u2_primitivity():
    L = direct_sum(rescale(make_U(), 2), make_rank_one(2))
    A = discriminant_group(L)
    for H in isotropic_subgroups(A):
        O = overlattice(L, H)
        assert abs(O.lattice.det) == abs(L.det) // H.order ** 2
        image = O.image_sublattice([(1, 0, 0), (0, 1, 0)])
        assert is_primitive_in(image) == (H.order == 1)


def test_trivial_overlattice_is_the_lattice():
    L = rescale(make_U(), 2)
    trivial = isotropic_subgroups(discriminant_group(L))[0]
    assert trivial.order == 1
    assert overlattice(L, trivial).lattice.gram == L.gram


def test_is_primitive_in():
    U = make_U()
    assert not is_primitive_in(Sublattice(U, [(2, 0)]))
    Lam = k3_two_lattice()
    assert is_primitive_in(Sublattice(Lam, [Lam.delta]))


def test_forms_isomorphic():
    U2 = discriminant_group(rescale(make_U(), 2))
    assert forms_isomorphic(U2, discriminant_group(Lattice([[0, 2], [2, 4]])))
    assert not forms_isomorphic(U2, discriminant_group(Lattice([[2, 0], [0, -2]])))
    assert not forms_isomorphic(U2, discriminant_group(make_rank_one(4)))
    assert forms_isomorphic(discriminant_group(k3_two_lattice()), discriminant_group(make_rank_one(-2)))
