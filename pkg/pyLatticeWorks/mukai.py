"""Mukai向量与Mukai配对, 双六次曲面上O'Grady不变格的计算, Beauville不变量与不可能性检验

代数Mukai格 H⁰⊕ZH⊕H⁴ ≅ U⊕⟨2⟩ 中的坐标顺序为 (r, s, a), 对应Mukai向量 (r, aH, s).
"""

import itertools
import logging

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple, Any, Optional

from . import linalg_util as la
from . import util
from .disc_form import Rank2_class, classify_rank2, discriminant_group, isotropic_subgroups
from .disc_form import overlattice, is_primitive_in
from .exceptions import NotPrimitive, InvalidTrace, VerificationFailed
from .involution import k3_two_lattice
from .lattice import Lattice, Lattice_vector, Sublattice
from .lattice import make_U, make_E8, make_rank_one, rescale, direct_sum, orthogonal_complement
from .linalg_util import Int_matrix
from .report import Report
from .represent import represent, isometry_search

logger = logging.getLogger(__name__)

class Mukai_vector:
    """Mukai向量 (r, aH, s), 其中H² = 2"""

    r: int
    """秩"""
    a: int
    """c₁中H的系数"""
    s: int
    """r + ch₂"""

    def __init__(self, r: int, a: int, s: int):
        self.r, self.a, self.s = int(r), int(a), int(s)

    @property
    def coords(self) -> Tuple[int, int, int]:
        """在代数Mukai格中的坐标 (r, s, a)"""
        return self.r, self.s, self.a

    @classmethod
    def from_coords(cls, coords: Tuple[int, ...]) -> "Mukai_vector":
        r, s, a = coords
        return cls(r, a, s)

    def lattice_vector(self) -> Lattice_vector:
        return Lattice_vector(algebraic_mukai_lattice(), self.coords)

    @property
    def is_primitive(self) -> bool:
        return la.vector_gcd(self.coords) == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Mukai_vector) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def export_json(self) -> Dict[str, int]:
        return {"r": self.r, "a": self.a, "s": self.s}

    def __repr__(self) -> str:
        return "Mukai_vector(%d, %d, %d)" % (self.r, self.a, self.s)

    def __str__(self) -> str:
        return "(%d,%dH,%d)" % (self.r, self.a, self.s)

@lru_cache(maxsize=None)
def algebraic_mukai_lattice(two_d: int = 2) -> Lattice:
    """代数Mukai格 U⊕⟨2d⟩, 基为 (1,0,0), (0,0,1), (0,H,0), H² = 2d"""
    return Lattice([[0, -1, 0], [-1, 0, 0], [0, 0, two_d]], "U⊕⟨%d⟩" % two_d)

def mukai_pairing(v: Mukai_vector, w: Mukai_vector) -> int:
    """Mukai配对 2·a·a' − r·s' − r'·s"""
    return int(algebraic_mukai_lattice().pair(v.coords, w.coords))

def mukai_square(v: Mukai_vector) -> int:
    return mukai_pairing(v, v)

def mukai_vector_of_sheaf(rank: int, c1_coeff: int, ch2: int) -> Mukai_vector:
    """由层的陈特征计算Mukai向量 (rank, c₁, rank + ch₂)"""
    return Mukai_vector(rank, c1_coeff, rank + ch2)

def hilbert_scheme_vector(n: int) -> Mukai_vector:
    """n点Hilbert概形对应的Mukai向量 (1, 0, 1−n)

    Raises:
        `ValueError`: n < 1
    """
    if n < 1:
        raise ValueError("Hilbert scheme needs n >= 1, got %d" % n)
    return Mukai_vector(1, 0, 1 - n)

def hilbert_scheme_h2_lattice(n: int) -> Lattice:
    """S^[n]的二阶上同调格 U³⊕E8²⊕⟨−2(n−1)⟩

    Raises:
        `ValueError`: n < 2
    """
    if n < 2:
        raise ValueError("H² lattice of S^[n] is defined here for n >= 2, got %d" % n)
    return direct_sum(make_U(), make_U(), make_U(), make_E8(), make_E8(), make_rank_one(-2 * (n - 1)))

def moduli_dimension(v: Mukai_vector) -> int:
    """模空间M(v)的维数 v² + 2"""
    return mukai_square(v) + 2

MUKAI24_H = (2, 3)
"""全Mukai格中H = e₁ + f₁所在的下标"""

@lru_cache(maxsize=None)
def full_mukai_lattice() -> Lattice:
    """全Mukai格 U⁴⊕E8², 基顺序为 U₀(H⁰, H⁴), U₁, U₂, U₃, E8, E8"""
    U0 = Lattice([[0, -1], [-1, 0]], "U")
    return Lattice(direct_sum(U0, make_U(), make_U(), make_U(), make_E8(), make_E8()).gram, "Mukai24")

def full_mukai_involution() -> Int_matrix:
    """双覆盖对合在全Mukai格上的作用φ*: U₀上为+1, U₁上交换e₁与f₁, 其余为−1

    Raises:
        `VerificationFailed`: φ*不是保持形式的对合
    """
    n = full_mukai_lattice().rank
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = rows[1][1] = 1
    rows[2][3] = rows[3][2] = 1
    for i in range(4, n):
        rows[i][i] = -1
    phi = la.int_matrix(rows)

    L = full_mukai_lattice()
    if phi * phi != la.identity(n) or phi.T * L.gram * phi != L.gram:
        raise VerificationFailed("phi* is not an isometric involution")
    return phi

def embed_in_full(v: Mukai_vector) -> Lattice_vector:
    """Mukai向量在全Mukai格中的坐标"""
    coords = [0] * full_mukai_lattice().rank
    coords[0], coords[1] = v.r, v.s
    coords[MUKAI24_H[0]] = coords[MUKAI24_H[1]] = v.a
    return Lattice_vector(full_mukai_lattice(), coords)

class Ogrady_result:
    """v^⊥中φ不变部分的计算结果"""

    v: Mukai_vector
    """Mukai向量"""
    invariant: Sublattice
    """代数Mukai格中的 v^⊥"""
    name: Rank2_class
    """不变格的同构类"""
    full_gram: Int_matrix
    """全Mukai格中 ker(φ*−1) ∩ v^⊥ 的Gram矩阵"""
    base_change: Int_matrix
    """两种计算之间经验证的幺模基变换"""

    def __init__(self, v: Mukai_vector, invariant: Sublattice, name: Rank2_class,
                 full_gram: Int_matrix, base_change: Int_matrix):
        self.v = v
        self.invariant = invariant
        self.name = name
        self.full_gram = full_gram
        self.base_change = base_change

    def export_json(self) -> Dict[str, Any]:
        return {
            "v": self.v,
            "square": mukai_square(self.v),
            "invariant_basis": [Mukai_vector.from_coords(c) for c in self.invariant.basis_coords],
            "gram": la.to_rows(self.invariant.gram),
            "name": self.name.value,
            "full_lattice_gram": la.to_rows(self.full_gram),
            "base_change": la.to_rows(self.base_change),
        }

def ogrady_invariant_lattice(v: Mukai_vector) -> Ogrady_result:
    """H²(M(v), Z)的φ不变部分 (v^⊥)^φ, 并在秩24的全Mukai格中交叉验证

    Raises:
        `NotPrimitive`: v不是本原的
        `ValueError`: v² ≤ 0
        `VerificationFailed`: 两种计算不一致
    """
    if not v.is_primitive:
        raise NotPrimitive("Mukai vector %s is not primitive" % v)
    if mukai_square(v) <= 0:
        raise ValueError("Mukai vector %s has non-positive square %d" % (v, mukai_square(v)))

    invariant = orthogonal_complement(algebraic_mukai_lattice(), [v.lattice_vector()])
    name = classify_rank2(invariant.as_lattice())

    # 全Mukai格: φ*的不变格与v^⊥之交
    L = full_mukai_lattice()
    phi = full_mukai_involution()
    conditions = [list(row) for row in la.to_rows(phi - la.identity(L.rank))]
    conditions.append(list(L.gram_times(embed_in_full(v).coords)))
    full = Sublattice(L, la.kernel_basis(la.int_matrix(conditions)))
    if full.rank != 2:
        raise VerificationFailed("phi-invariant part of v^⊥ has rank %d in the full Mukai lattice" % full.rank)

    T = isometry_search(invariant.as_lattice(), full.as_lattice())
    if T is None:
        raise VerificationFailed("rank 3 and rank 24 computations disagree for %s" % v)
    return Ogrady_result(v, invariant, name, full.gram, T)

@dataclass
class Beauville_data:
    """不动曲面F的不变量, 由迹t决定"""

    trace: int
    """对合在H^{1,1}上的迹t"""
    k_squared: int
    """K_F² = t² − 1"""
    chi: int
    """χ(O_F) = (t² + 7) / 8"""
    euler: int
    """e(F) = (t² + 23) / 2"""
    moduli_dim: int
    """形变空间维数 (21 − t) / 2"""

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.k_squared, self.chi, self.euler, self.moduli_dim

    def export_json(self) -> Dict[str, int]:
        return util.export_attr_to_json(self, ["trace", "k_squared", "chi", "euler", "moduli_dim"])

TRACE_RANGE = (-19, 21)
"""非辛对合迹t的取值范围"""

def beauville_invariants(t: int) -> Beauville_data:
    """由迹t计算不动曲面的 K², χ, e 与模空间维数

    Raises:
        `InvalidTrace`: t为偶数或不在[-19, 21]中
    """
    if t % 2 == 0 or not TRACE_RANGE[0] <= t <= TRACE_RANGE[1]:
        raise InvalidTrace("not a non-symplectic-involution trace: %d" % t)
    return Beauville_data(t, t * t - 1, (t * t + 7) // 8, (t * t + 23) // 2, (21 - t) // 2)

def trace_from_invariant_rank(r: int) -> int:
    """不变格秩为r时的迹 t = 2r − 21

    Raises:
        `ValueError`: r不在1..21中
    """
    if not 1 <= r <= 21:
        raise ValueError("Invariant rank must lie in 1..21, got %d" % r)
    return 2 * r - 21

def _square_two_vectors(bound: int) -> List[Mukai_vector]:
    """|坐标| ≤ bound的全部本原平方为2的Mukai向量(按符号去重)"""
    L = algebraic_mukai_lattice()
    found = set()
    for coords in itertools.product(range(-bound, bound + 1), repeat=3):
        if la.vector_gcd(coords) == 1 and L.pair(coords, coords) == 2:
            found.add(la.normalize_sign(coords))
    return [Mukai_vector.from_coords(c) for c in sorted(found)]

def impossibility_u2(bound: Optional[int] = None) -> Report:
    """验证不存在v使 (v^⊥)^φ ≅ U(2)

    两部分: U(2)⊕⟨2⟩的非平凡迷向粘合都破坏U(2)的本原性; 以及有界穷举所有平方为2的本原v.
    """
    bound = util.enumeration_bound(bound)
    L = direct_sum(rescale(make_U(), 2), make_rank_one(2))
    A = discriminant_group(L)
    subgroups = isotropic_subgroups(A)
    gluings = []
    for H in subgroups:
        if H.order == 1:
            continue
        O = overlattice(L, H)
        primitive = is_primitive_in(O.image_sublattice([(1, 0, 0), (0, 1, 0)]))
        gluings.append({"subgroup": H, "overlattice_det": abs(O.lattice.det), "u2_primitive": primitive})
    gluing_ok = len(subgroups) == 3 and all(not g["u2_primitive"] for g in gluings)

    names: Dict[str, int] = {}
    counterexamples = []
    checked = _square_two_vectors(bound)
    for v in checked:
        name = classify_rank2(orthogonal_complement(algebraic_mukai_lattice(), [v.lattice_vector()]).as_lattice())
        names[name.value] = names.get(name.value, 0) + 1
        if name == Rank2_class.U2:
            counterexamples.append(v)
    logger.info("impossibility_u2: %d vectors checked within bound %d", len(checked), bound)

    return Report(
        "impossibility_u2",
        gluing_ok and len(counterexamples) == 0,
        {
            "bound": bound,
            "isotropic_subgroups": [H for H in subgroups],
            "gluings": gluings,
            "checked": len(checked),
            "complement_classes": names,
            "counterexamples": counterexamples,
        },
        ["the only nontrivial isotropic glues of U(2)⊕⟨2⟩ make U(2) non-primitive",
         "no primitive v with v² = 2 has invariant lattice U(2) (verified within bound)"],
    )

def impossibility_no4(bound: Optional[int] = None) -> Report:
    """验证当 (v^⊥)^φ ≅ ⟨2⟩⊕⟨−2⟩ 时(−2)生成元g总满足 (g+v)/2 为整, 从而不可能出现第4类"""
    bound = util.enumeration_bound(bound)
    pairs = []
    failures = []
    for v in _square_two_vectors(bound):
        complement = orthogonal_complement(algebraic_mukai_lattice(), [v.lattice_vector()])
        C = complement.as_lattice()
        if classify_rank2(C) != Rank2_class.two_minus_two:
            continue
        minus2 = represent(C, -2)
        if len(minus2) != 1:
            failures.append({"v": v, "reason": "(-2)-class is not unique"})
            continue
        g = Mukai_vector.from_coords(complement.embed(minus2[0].coords).coords)
        integral = all((x + y) % 2 == 0 for x, y in zip(g.coords, v.coords))
        pairs.append({"v": v, "g": g, "half_sum_integral": integral})
        if not integral:
            failures.append({"v": v, "g": g, "reason": "(g+v)/2 is not integral"})
    logger.info("impossibility_no4: %d qualifying pairs within bound %d", len(pairs), bound)

    return Report(
        "impossibility_no4",
        len(failures) == 0 and len(pairs) > 0,
        {"bound": bound, "qualifying": len(pairs), "pairs": pairs, "failures": failures},
        ["whenever the invariant lattice is ⟨2⟩⊕⟨-2⟩ the (-2)-generator g satisfies (g+v)/2 integral, so div(g) = 2"],
    )

def hilbert_scheme_check(n: int) -> Dict[str, Any]:
    """比较v^⊥ ⊂ 全Mukai格与 U³⊕E8²⊕⟨−2(n−1)⟩ 的不变量; n = 2时与Λ完全一致

    Raises:
        `VerificationFailed`: 不变量不符
    """
    v = hilbert_scheme_vector(n)
    complement = orthogonal_complement(full_mukai_lattice(), [embed_in_full(v)]).as_lattice()
    expected = hilbert_scheme_h2_lattice(n)
    if complement.signature != expected.signature or abs(complement.det) != abs(expected.det):
        raise VerificationFailed("v^⊥ for n = %d does not match U³⊕E8²⊕⟨-2(n-1)⟩" % n)
    if n == 2 and expected.gram != k3_two_lattice().gram:
        raise VerificationFailed("H² lattice of S^[2] differs from Λ")
    return {
        "n": n,
        "v": v,
        "square": mukai_square(v),
        "moduli_dimension": moduli_dimension(v),
        "det": abs(complement.det),
        "signature": list(complement.signature),
    }
