"""K3^[2]型格Λ = U³⊕E8²⊕⟨-2⟩, 四类非辛对合的显式整实现及其验证"""

import logging

from enum import Enum
from dataclasses import dataclass
from functools import lru_cache

from typing import Dict, List, Tuple, Optional, Any, Sequence

from sympy import ImmutableMatrix, totient

from . import linalg_util as la
from .disc_form import Rank2_class, classify_rank2, discriminant_group, forms_isomorphic
from .exceptions import InvalidClass, NotIntegral, NotPrimitive, DegenerateForm, VerificationFailed
from .lattice import Lattice, Lattice_vector, Sublattice
from .lattice import make_U, make_E8, make_rank_one, direct_sum, divisibility, orthogonal_complement
from .linalg_util import Int_matrix
from .represent import represent

logger = logging.getLogger(__name__)

E1, F1, E2, F2, E3, F3 = range(6)
"""三个双曲平面U₁, U₂, U₃的基向量下标"""
DELTA = 22
"""⟨-2⟩生成元δ的下标"""

class K3_two_lattice(Lattice):
    """K3^[2]型超Kähler流形的二阶上同调格Λ, 基的顺序为 U₁(e₁,f₁), U₂, U₃, E8, E8, δ"""

    def __init__(self):
        summands = [make_U(), make_U(), make_U(), make_E8(), make_E8(), make_rank_one(-2)]
        super().__init__(direct_sum(*summands).gram, "Λ")

    def named(self, **coefficients: int) -> Lattice_vector:
        """按名称组合基向量, 例如`named(e1=1, f1=1)`得到e₁+f₁"""
        indices = {"e1": E1, "f1": F1, "e2": E2, "f2": F2, "e3": E3, "f3": F3, "delta": DELTA}
        coords = [0] * self.rank
        for name, c in coefficients.items():
            coords[indices[name]] += c
        return Lattice_vector(self, coords)

    @property
    def e1(self) -> Lattice_vector:
        return self.basis_vector(E1)
    @property
    def f1(self) -> Lattice_vector:
        return self.basis_vector(F1)
    @property
    def e2(self) -> Lattice_vector:
        return self.basis_vector(E2)
    @property
    def f2(self) -> Lattice_vector:
        return self.basis_vector(F2)
    @property
    def e3(self) -> Lattice_vector:
        return self.basis_vector(E3)
    @property
    def f3(self) -> Lattice_vector:
        return self.basis_vector(F3)
    @property
    def delta(self) -> Lattice_vector:
        return self.basis_vector(DELTA)

@lru_cache(maxsize=None)
def k3_two_lattice() -> K3_two_lattice:
    """Λ的共享实例"""
    return K3_two_lattice()

@dataclass
class Class_meta:
    """一类对合的描述数据"""

    number: int
    """类编号 1..4"""
    basis: List[Dict[str, int]]
    """不变子格在Λ中的基, 以命名向量的组合给出"""
    invariant_name: Rank2_class
    """不变格的同构类"""
    g_divisibility: Optional[int]
    """不变格中(-2)生成元g在Λ中的可除度, 仅第3、4类有定义"""
    fibre_size: int
    """周期映射纤维的大小, 即正锥中的房间数"""
    reference: Dict[str, int]
    """确定正锥分支的参考向量"""
    swap_block: Tuple[int, int]
    """交换两个分支的等距所取反的双曲平面的下标"""

class Involution_class(Enum):
    """K3^[2]型流形上不变格秩为2的四类非辛对合"""

    no1 = Class_meta(1, [{"e1": 1}, {"f1": 1}], Rank2_class.U, None, 2,
                     {"e1": 1, "f1": 1}, (E2, F2))
    no2 = Class_meta(2, [{"e1": 1, "e2": 1}, {"f1": 1, "f2": 1}], Rank2_class.U2, None, 1,
                     {"e1": 1, "e2": 1, "f1": 1, "f2": 1}, (E3, F3))
    no3 = Class_meta(3, [{"e1": 1, "f1": 1}, {"delta": 1}], Rank2_class.two_minus_two, 2, 4,
                     {"e1": 1, "f1": 1}, (E3, F3))
    no4 = Class_meta(4, [{"e1": 1, "f1": 1}, {"e2": 1, "f2": -1}], Rank2_class.two_minus_two, 1, 2,
                     {"e1": 1, "f1": 1}, (E3, F3))

    @staticmethod
    def from_number(J: int) -> "Involution_class":
        """根据类编号获取对应的枚举值

        Raises:
            `InvalidClass`: J不在1..4中
        """
        for item in Involution_class:
            if item.value.number == J:
                return item
        raise InvalidClass("Invalid involution class: %r (expected 1..4)" % (J,))

CLASS_NUMBERS = [1, 2, 3, 4]

class Involution:
    """格上的整对合ι, 附带其不变与反不变子格"""

    lattice: Lattice
    """所作用的格"""
    matrix: Int_matrix
    """对合矩阵, 作用于坐标列向量"""
    invariant: Sublattice
    """不变子格 ker(ι − 1)"""
    anti_invariant: Sublattice
    """反不变子格 ker(ι + 1)"""
    class_tag: Optional[int]
    """已识别的类编号"""

    def __init__(self, lattice: Lattice, matrix: Int_matrix, class_tag: Optional[int] = None):
        """
        Raises:
            `ValueError`: 矩阵不是保持Gram矩阵的对合
        """
        matrix = la.int_matrix(matrix)
        n = lattice.rank
        identity = la.identity(n)
        if matrix * matrix != identity:
            raise ValueError("Matrix is not an involution")
        if matrix.T * lattice.gram * matrix != lattice.gram:
            raise ValueError("Matrix does not preserve the form")

        self.lattice = lattice
        self.matrix = matrix
        self.class_tag = class_tag
        self.invariant = Sublattice(lattice, la.kernel_basis(matrix - identity))
        self.anti_invariant = Sublattice(lattice, la.kernel_basis(matrix + identity))

        if self.invariant.rank + self.anti_invariant.rank != n:
            raise ValueError("Eigenlattice ranks do not add up to %d" % n)

    def apply(self, v: Lattice_vector) -> Lattice_vector:
        return Lattice_vector(self.lattice, la.mat_vec(self.matrix, v.coords))

    def commutes_with(self, M: Int_matrix) -> bool:
        return M * self.matrix == self.matrix * M

    def export_json(self) -> Dict[str, Any]:
        anti = self.anti_invariant.as_lattice()
        return {
            "class": self.class_tag,
            "invariant": self.invariant.export_json(),
            "anti_invariant": {"rank": anti.rank, "signature": list(anti.signature), "det": anti.det},
        }

def _named_sublattice(Lam: K3_two_lattice, basis: Sequence[Dict[str, int]]) -> Sublattice:
    return Sublattice(Lam, [Lam.named(**combo) for combo in basis])

def g_generator(M: Sublattice) -> Lattice_vector:
    """秩二不变格中的(-2)生成元g(在Λ中), 要求其在相差符号意义下唯一

    Raises:
        `VerificationFailed`: (-2)类不存在或不唯一
    """
    solutions = represent(M.as_lattice(), -2)
    if len(solutions) != 1:
        raise VerificationFailed("Expected a unique (-2)-class up to sign, found %d" % len(solutions))
    return M.embed(solutions[0].coords)

def class_embedding(J: int) -> Sublattice:
    """第J类对合的不变子格Λ^ι在Λ中的显式嵌入, 构造时即验证其格类型、本原性与g的可除度

    Raises:
        `InvalidClass`: J不在1..4中
        `VerificationFailed`: 嵌入不满足所述性质
    """
    meta = Involution_class.from_number(J).value
    Lam = k3_two_lattice()
    M = _named_sublattice(Lam, meta.basis)

    if not M.primitive:
        raise VerificationFailed("class %d: invariant sublattice is not primitive" % J)
    NS = M.as_lattice()
    if NS.signature != (1, 1):
        raise VerificationFailed("class %d: invariant sublattice is not hyperbolic" % J)
    name = classify_rank2(NS)
    if name != meta.invariant_name:
        raise VerificationFailed("class %d: invariant lattice is %s, expected %s"
                                 % (J, name.value, meta.invariant_name.value))
    if meta.g_divisibility is not None:
        div_g = divisibility(g_generator(M))
        if div_g != meta.g_divisibility:
            raise VerificationFailed("class %d: div(g) = %d, expected %d" % (J, div_g, meta.g_divisibility))
    return M

def reference_vector(J: int) -> Lattice_vector:
    """第J类中用于确定正锥分支的参考向量(位于Λ^ι中)"""
    meta = Involution_class.from_number(J).value
    return k3_two_lattice().named(**meta.reference)

def projection_matrix(M: Sublattice) -> ImmutableMatrix:
    """到M⊗Q的正交投影 B·(BᵀGB)⁻¹·BᵀG, 为有理矩阵

    Raises:
        `DegenerateForm`: M上的限制形式退化
    """
    L = M.ambient
    B = la.columns_matrix(M.basis_coords, L.rank)
    inner_gram = B.T * L.gram * B
    if la.det(inner_gram) == 0:
        raise DegenerateForm("degenerate form")
    return ImmutableMatrix(B * inner_gram.inv() * B.T * L.gram)

def involution_from_fixed_sublattice(M: Sublattice, class_tag: Optional[int] = None) -> Involution:
    """由本原非退化子格M构造在M上为+1、在M^⊥上为-1的对合 ι = 2·proj_M − id

    Raises:
        `NotPrimitive`: M不是本原的
        `DegenerateForm`: M退化
        `NotIntegral`: 有理矩阵不是整的, 即该作用不能整地延拓
    """
    if not M.primitive:
        raise NotPrimitive("Fixed sublattice must be primitive")
    n = M.ambient.rank
    rational = 2 * projection_matrix(M) - ImmutableMatrix.eye(n)
    if any(x.q != 1 for x in rational):
        raise NotIntegral("involution does not extend integrally")
    ret = Involution(M.ambient, la.int_matrix(rational), class_tag)

    if la.hermite_basis(ret.invariant.basis_coords) != la.hermite_basis(M.basis_coords):
        raise VerificationFailed("Invariant lattice of the constructed involution differs from the input")
    return ret

def class_involution(J: int) -> Involution:
    """第J类的显式对合"""
    return involution_from_fixed_sublattice(class_embedding(J), J)

def component_swap_isometry(J: int) -> Int_matrix:
    """与第J类对合交换、并交换周期域两个连通分支的等距β

    β在反不变部分的一个双曲平面上取-1, 其余为恒等.

    Raises:
        `InvalidClass`: J不在1..4中
        `VerificationFailed`: β不满足所述性质
    """
    meta = Involution_class.from_number(J).value
    Lam = k3_two_lattice()
    iota = class_involution(J)
    beta = la.int_matrix([[(-1 if i in meta.swap_block else 1) if i == j else 0 for j in range(Lam.rank)]
                          for i in range(Lam.rank)])

    if beta * beta != la.identity(Lam.rank) or beta.T * Lam.gram * beta != Lam.gram:
        raise VerificationFailed("class %d: beta is not an isometric involution" % J)
    if not iota.commutes_with(beta):
        raise VerificationFailed("class %d: beta does not commute with the involution" % J)
    if any(la.mat_vec(beta, v) != tuple(v) for v in iota.invariant.basis_coords):
        raise VerificationFailed("class %d: beta moves the invariant lattice" % J)

    x = Lam.basis_vector(meta.swap_block[0]) + Lam.basis_vector(meta.swap_block[1])
    if x.norm <= 0 or iota.apply(x) != -x or la.mat_vec(beta, x.coords) != (-x).coords:
        raise VerificationFailed("class %d: beta does not negate a positive anti-invariant vector" % J)
    return beta

def admissible_hodge_orders(transcendental_rank: int) -> List[int]:
    """φ(N)整除超越格秩数的全部阶N

    φ(N) ≥ √(N/2) 保证搜索 N ≤ 2·rank² + 2 已足够.

    Raises:
        `ValueError`: 秩小于1
    """
    if transcendental_rank < 1:
        raise ValueError("Rank must be positive, got %d" % transcendental_rank)
    limit = 2 * transcendental_rank ** 2 + 2
    return [N for N in range(1, limit + 1) if transcendental_rank % int(totient(N)) == 0]

def verify_g_complement(J: int) -> Dict[str, Any]:
    """检查第3、4类中g的正交补 (Zg)^⊥ ⊂ Λ 的不变量

    第3类中(Zg)^⊥为K3格(偶幺模, 符号差(3,19));
    第4类中|det| = 4, 判别型与⟨2⟩⊕U²⊕E8²⊕⟨-2⟩相同, 且h在其中的可除度为1.

    Raises:
        `InvalidClass`: J不是3或4
        `VerificationFailed`: 不变量不符
    """
    if J not in (3, 4):
        raise InvalidClass("g-complement check is defined for classes 3 and 4, got %r" % (J,))
    M = class_embedding(J)
    g = g_generator(M)
    h = M.embed((1, 0))
    complement = orthogonal_complement(k3_two_lattice(), [g])
    C = complement.as_lattice()

    if C.signature != (3, 19):
        raise VerificationFailed("class %d: (Zg)^⊥ has signature %s" % (J, C.signature))
    h_coords = complement.coordinates_of(h)
    assert h_coords is not None and all(c.q == 1 for c in h_coords)
    div_h = divisibility(C.vector(tuple(int(c) for c in h_coords)))
    A = discriminant_group(C)

    if J == 3:
        if abs(C.det) != 1:
            raise VerificationFailed("class 3: (Zg)^⊥ is not unimodular (|det| = %d)" % abs(C.det))
    else:
        reference = direct_sum(make_rank_one(2), make_U(), make_U(), make_E8(), make_E8(), make_rank_one(-2))
        if abs(C.det) != 4 or not forms_isomorphic(A, discriminant_group(reference)):
            raise VerificationFailed("class 4: (Zg)^⊥ does not match ⟨2⟩⊕U²⊕E8²⊕⟨-2⟩")
        if div_h != 1:
            raise VerificationFailed("class 4: div(h) in (Zg)^⊥ is %d, expected 1" % div_h)

    logger.info("class %d: (Zg)^⊥ has |det| %d and div(h) = %d", J, abs(C.det), div_h)
    return {
        "class": J,
        "g": g,
        "det": abs(C.det),
        "signature": list(C.signature),
        "discriminant": A,
        "div_h": div_h,
    }
