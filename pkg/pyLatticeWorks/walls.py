"""秩二Néron–Severi格中的墙与房间, 以及四类对合的分类表

墙为(-2)类与Λ中可除度为2的(-10)类的正交补. 在符号差(1,1)的平面中,
正锥的一个分支是由两条迷向射线围成的凸锥, 每面墙在其中切出一条射线,
把射线按叉积排序即得到全部房间.
"""

import logging

from functools import cmp_to_key
from typing import Dict, List, Tuple, Optional, Any

from sympy import ImmutableMatrix

from . import linalg_util as la
from .disc_form import Rank2_class, classify_rank2, discriminant_group, forms_isomorphic
from .exceptions import InvalidClass, VerificationFailed
from .involution import Involution_class, class_embedding, class_involution, reference_vector, projection_matrix
from .involution import k3_two_lattice, g_generator
from .lattice import Lattice, Lattice_vector, Sublattice, divisibility
from .lattice import make_U, make_E8, make_rank_one, rescale, direct_sum
from .linalg_util import Int_matrix
from .represent import represent, automorphisms

logger = logging.getLogger(__name__)

Ray = Tuple[int, int]

def _cross(r1: Ray, r2: Ray) -> int:
    return r1[0] * r2[1] - r1[1] * r2[0]

def _compare_rays(r1: Ray, r2: Ray) -> int:
    c = _cross(r1, r2)
    return -1 if c > 0 else (1 if c < 0 else 0)

class Wall_data:
    """第J类Néron–Severi格中的墙与房间(坐标均相对于不变子格的基)"""

    number: int
    """类编号"""
    ns: Sublattice
    """不变子格Λ^ι ⊂ Λ"""
    minus2_walls: List[Lattice_vector]
    """(-2)类, 按符号去重"""
    minus10_walls: List[Lattice_vector]
    """在Λ中可除度为2的(-10)类, 按符号去重"""
    boundary: Tuple[Ray, Ray]
    """正锥分支的两条迷向边界射线(按顺序)"""
    rays: List[Ray]
    """墙在正锥分支中切出的射线, 已排序"""
    reference: Tuple[int, ...]
    """参考向量在不变子格基下的坐标"""

    def __init__(self, J: int):
        self.number = J
        self.ns = class_embedding(J)
        NS = self.ns.as_lattice()
        self._NS = NS

        ref = self.ns.coordinates_of(reference_vector(J))
        assert ref is not None and all(c.q == 1 for c in ref)
        self.reference = tuple(int(c) for c in ref)

        self.minus2_walls = represent(NS, -2)
        self.minus10_walls = [w for w in represent(NS, -10) if divisibility(self.ns.embed(w.coords)) == 2]

        isotropic = [self._orient(v.coords) for v in represent(NS, 0)]
        rays = {self._orient(self._wall_ray(w)) for w in self.minus2_walls + self.minus10_walls}
        ordered = sorted(isotropic + sorted(rays), key=cmp_to_key(_compare_rays))
        self.boundary = (ordered[0], ordered[-1])
        self.rays = ordered[1:-1]

    def _wall_ray(self, w: Lattice_vector) -> Ray:
        """墙w^⊥的方向"""
        gw = self._NS.gram_times(w.coords)
        return gw[1], -gw[0]

    def _orient(self, r: Tuple[int, ...]) -> Ray:
        """化为本原向量, 并取与参考向量同一正锥分支的方向"""
        g = la.vector_gcd(r)
        r = (r[0] // g, r[1] // g)
        if self._NS.pair(r, self.reference) < 0:
            r = (-r[0], -r[1])
        return r

    @property
    def chamber_count(self) -> int:
        """房间数 = 不同墙射线数 + 1"""
        return len(self.rays) + 1

    @property
    def chambers(self) -> List[Tuple[Ray, Ray]]:
        """按顺序列出各房间的两条边界射线"""
        ordered = [self.boundary[0]] + self.rays + [self.boundary[1]]
        return list(zip(ordered, ordered[1:]))

    def fundamental_witness(self) -> Ray:
        """第一个房间的内点: 两条边界射线之和"""
        a, b = self.chambers[0]
        return a[0] + b[0], a[1] + b[1]

    def chamber_of(self, v: Tuple[int, ...]) -> Optional[int]:
        """正锥分支中向量v所在房间的序号, v落在墙上或不在该分支中时返回None"""
        if self._NS.pair(v, v) <= 0 or self._NS.pair(v, self.reference) <= 0:
            return None
        for index, (a, b) in enumerate(self.chambers):
            if _cross(a, v) > 0 and _cross(v, b) > 0:
                return index
        return None

    @property
    def counts(self) -> Tuple[int, int, int]:
        """(#(-2)墙, #(-10)墙, 房间数)"""
        return len(self.minus2_walls), len(self.minus10_walls), self.chamber_count

    def export_json(self) -> Dict[str, Any]:
        return {
            "class": self.number,
            "ns_gram": la.to_rows(self.ns.gram),
            "minus2_walls": [{"class": w, "divisibility": divisibility(self.ns.embed(w.coords))}
                             for w in self.minus2_walls],
            "minus10_walls": [{"class": w, "divisibility": 2} for w in self.minus10_walls],
            "boundary": [list(r) for r in self.boundary],
            "rays": [list(r) for r in self.rays],
            "chambers": self.chamber_count,
        }

def walls_and_chambers(J: int) -> Wall_data:
    """计算第J类的墙与房间

    Raises:
        `InvalidClass`: J不在1..4中
    """
    data = Wall_data(J)
    logger.debug("class %d: walls %s", J, data.counts)
    return data

def _minus2_wall(J: int) -> Tuple[Wall_data, Lattice_vector]:
    data = walls_and_chambers(J)
    if len(data.minus2_walls) != 1:
        raise InvalidClass("Class %d has %d (-2)-walls, a reflection needs exactly one" % (J, len(data.minus2_walls)))
    return data, data.ns.embed(data.minus2_walls[0].coords)

def wall_reflection(J: int) -> Int_matrix:
    """(-2)墙类w给出的反射 s(x) = x + (x, w)·w, 作为Λ的整等距

    验证s是与ι交换的对合, 保持Λ^ι, 且在房间之间没有不动的房间.

    Raises:
        `InvalidClass`: 第J类没有唯一的(-2)类(第2类)
        `VerificationFailed`: 反射不满足上述性质
    """
    data, w = _minus2_wall(J)
    Lam = k3_two_lattice()
    gw = Lam.gram_times(w.coords)
    s = la.int_matrix([[int(i == j) + w.coords[i] * gw[j] for j in range(Lam.rank)] for i in range(Lam.rank)])

    if s * s != la.identity(Lam.rank) or s.T * Lam.gram * s != Lam.gram:
        raise VerificationFailed("class %d: wall reflection is not an isometric involution" % J)
    if not class_involution(J).commutes_with(s):
        raise VerificationFailed("class %d: wall reflection does not commute with the involution" % J)

    images = []
    for index, (a, b) in enumerate(data.chambers):
        witness = (a[0] + b[0], a[1] + b[1])
        image = data.ns.coordinates_of(Lattice_vector(Lam, la.mat_vec(s, data.ns.embed(witness).coords)))
        if image is None or any(c.q != 1 for c in image):
            raise VerificationFailed("class %d: wall reflection does not preserve the invariant lattice" % J)
        target = data.chamber_of(tuple(int(c) for c in image))
        if target is None or target == index:
            raise VerificationFailed("class %d: wall reflection fixes chamber %d" % (J, index))
        images.append(target)
    logger.debug("class %d: wall reflection permutes chambers as %s", J, images)
    return s

def ns_isometries(J: int) -> List[Int_matrix]:
    """不变格Λ^ι的全部等距(作用于不变子格坐标)"""
    NS = class_embedding(J).as_lattice()
    return automorphisms(NS)

def extend_ns_action(J: int, sigma: Int_matrix, epsilon: int) -> Optional[Int_matrix]:
    """把Λ^ι上的σ与T = (Λ^ι)^⊥上的ε·id粘合为Λ⊗Q上的映射, 整时返回该矩阵"""
    M = class_embedding(J)
    Lam = M.ambient
    B = la.columns_matrix(M.basis_coords, Lam.rank)
    P = projection_matrix(M)
    inner_gram = B.T * Lam.gram * B
    coordinates = inner_gram.inv() * B.T * Lam.gram
    phi = ImmutableMatrix(B * sigma * coordinates + epsilon * (ImmutableMatrix.eye(Lam.rank) - P))
    if any(x.q != 1 for x in phi):
        return None
    phi = la.int_matrix(phi)
    if phi.T * Lam.gram * phi != Lam.gram:
        raise VerificationFailed("class %d: glued map is not an isometry" % J)
    return phi

def extendable_ns_actions(J: int) -> List[Tuple[Int_matrix, int]]:
    """可作为双有理自同构作用出现的 (σ, ε)

    σ须保持参考向量所在的正锥分支与基本房间, 并能与T上的ε·id粘合为Λ的整等距.
    """
    data = walls_and_chambers(J)
    witness = data.fundamental_witness()
    ret = []
    for sigma in ns_isometries(J):
        image = la.mat_vec(sigma, witness)
        if data.chamber_of(image) != 0:
            continue
        for epsilon in (1, -1):
            if extend_ns_action(J, sigma, epsilon) is not None:
                ret.append((sigma, epsilon))
    return ret

class Class_row:
    """分类表中的一行"""

    number: int
    """类编号"""
    invariant_name: Rank2_class
    """不变格的同构类"""
    g_divisibility: Optional[int]
    """(-2)生成元g在Λ中的可除度, 第1、2类为None"""
    walls: Tuple[int, int, int]
    """(#(-2)墙, #(-10)墙, 房间数)"""

    def __init__(self, number: int, invariant_name: Rank2_class, g_divisibility: Optional[int],
                 walls: Tuple[int, int, int]):
        self.number = number
        self.invariant_name = invariant_name
        self.g_divisibility = g_divisibility
        self.walls = walls

    @property
    def fibre_size(self) -> int:
        return self.walls[2]

    def export_json(self) -> Dict[str, Any]:
        return {
            "class": self.number,
            "invariant_lattice": self.invariant_name.value,
            "g_divisibility": self.g_divisibility,
            "walls": list(self.walls),
            "fibre_size": self.fibre_size,
        }

    def __str__(self) -> str:
        div = "—" if self.g_divisibility is None else "div %d" % self.g_divisibility
        return "%d | %s | %s | %d" % (self.number, self.invariant_name.value, div, self.fibre_size)

def anti_invariant_reference() -> Lattice:
    """第2类反不变格应同构的 U⊕U(2)⊕E8²⊕⟨-2⟩"""
    return direct_sum(make_U(), rescale(make_U(), 2), make_E8(), make_E8(), make_rank_one(-2))

def verify_class(J: int) -> Class_row:
    """构造第J类对合并重新计算其全部不变量, 与分类表比对

    Raises:
        `InvalidClass`: J不在1..4中
        `VerificationFailed`: 任一检查不成立
    """
    meta = Involution_class.from_number(J).value
    iota = class_involution(J)
    Lam = k3_two_lattice()

    if iota.matrix * iota.matrix != la.identity(Lam.rank):
        raise VerificationFailed("class %d: involution is not of order 2" % J)
    if any(Lam.pair(u, v) != 0 for u in iota.invariant.basis_coords for v in iota.anti_invariant.basis_coords):
        raise VerificationFailed("class %d: eigenlattices are not orthogonal" % J)
    if (iota.invariant.rank, iota.anti_invariant.rank) != (2, 21):
        raise VerificationFailed("class %d: eigenlattice ranks are not (2, 21)" % J)

    name = classify_rank2(iota.invariant.as_lattice())
    if name != meta.invariant_name:
        raise VerificationFailed("class %d: invariant lattice %s, expected %s" % (J, name.value, meta.invariant_name.value))

    T = iota.anti_invariant.as_lattice()
    if T.signature != (2, 19):
        raise VerificationFailed("class %d: anti-invariant signature %s, expected (2, 19)" % (J, T.signature))
    if J == 2:
        N = anti_invariant_reference()
        if abs(T.det) != abs(N.det) or not forms_isomorphic(discriminant_group(T), discriminant_group(N)):
            raise VerificationFailed("class 2: anti-invariant lattice does not match U⊕U(2)⊕E8²⊕⟨-2⟩")

    data = walls_and_chambers(J)
    if data.chamber_count != meta.fibre_size:
        raise VerificationFailed("class %d: %d chambers, expected %d" % (J, data.chamber_count, meta.fibre_size))

    g_div = divisibility(g_generator(iota.invariant)) if name == Rank2_class.two_minus_two else None
    if g_div != meta.g_divisibility:
        raise VerificationFailed("class %d: div(g) = %s, expected %s" % (J, g_div, meta.g_divisibility))

    row = Class_row(J, name, g_div, data.counts)
    logger.info("class %d verified: %s", J, row)
    return row

CLASS_TABLE_HEADER = "J | invariant lattice | div g | fibre"
"""`Class_row`文本表格的表头"""

def classification_table() -> List[Class_row]:
    """四类对合的完整分类表"""
    return [verify_class(item.value.number) for item in Involution_class]
