"""本原向量的轨道不变量 (平方, 可除度, 剩余类) 与Eichler判别法"""

from typing import Sequence, Tuple

from sympy import Rational

from . import linalg_util as la
from .disc_form import Element, discriminant_group
from .exceptions import NotPrimitive, WitnessInvalid, LatticeMismatch
from .lattice import Lattice_vector, Sublattice, divisibility, is_primitive
from .linalg_util import Int_matrix

def residue(v: Lattice_vector) -> Element:
    """本原向量v的剩余类 v* = v/div(v) ∈ A_L, 以判别群生成元的系数表示

    Raises:
        `NotPrimitive`: v不是本原向量
    """
    if not is_primitive(v):
        raise NotPrimitive("residue needs a primitive vector, got %s" % (v.coords,))
    A = discriminant_group(v.lattice)
    d = divisibility(v)
    return A.class_of([Rational(x, d) for x in v.coords])

def eichler_invariant(v: Lattice_vector) -> Tuple[int, int, Element]:
    """(v², div(v), v*) 三元组, 在含U⊕U的格中决定本原向量的O(L)轨道"""
    return v.norm, divisibility(v), residue(v)

def is_hyperbolic_plane(gram: Int_matrix) -> bool:
    """秩二, 偶, 幺模且符号差为(1,1)的Gram矩阵, 即同构于U"""
    if gram.shape != (2, 2) or gram[0, 0] % 2 or gram[1, 1] % 2:
        return False
    if abs(la.det(gram)) != 1:
        return False
    return la.signature(gram) == (1, 1)

def check_witness(witness: Sequence[Sublattice]) -> None:
    """检查见证: 恰为两个同构于U且相互正交的子格

    Raises:
        `WitnessInvalid`: 见证不满足U⊕U的条件
    """
    if len(witness) != 2:
        raise WitnessInvalid("U⊕U hypothesis unverified: expected two hyperbolic planes, got %d" % len(witness))
    first, second = witness
    if first.ambient != second.ambient:
        raise WitnessInvalid("U⊕U hypothesis unverified: planes live in different lattices")
    for plane in witness:
        if not is_hyperbolic_plane(plane.gram):
            raise WitnessInvalid("U⊕U hypothesis unverified: Gram %s is not U" % plane.gram.tolist())
    L = first.ambient
    if any(L.pair(u, w) != 0 for u in first.basis_coords for w in second.basis_coords):
        raise WitnessInvalid("U⊕U hypothesis unverified: planes are not orthogonal")

def eichler_equivalent(v: Lattice_vector, w: Lattice_vector, witness: Sequence[Sublattice]) -> bool:
    """用Eichler判别法判断两个本原向量是否在同一O(L)轨道中

    Args:
        v, w (`Lattice_vector`): 同一格中的本原向量
        witness (`Sequence[Sublattice]`): 调用方给出的两个相互正交的双曲平面

    Raises:
        `WitnessInvalid`: 见证无效
        `NotPrimitive`: v或w不是本原向量
        `LatticeMismatch`: v与w或见证不在同一个格中
    """
    v._check_same(w)
    check_witness(witness)
    if witness[0].ambient != v.lattice:
        raise LatticeMismatch("Witness planes do not live in the lattice of the vectors")
    return eichler_invariant(v) == eichler_invariant(w)
