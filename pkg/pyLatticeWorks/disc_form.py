"""判别群 A_L = L*/L 及其二次型/双线性型, 迷向子群与偶超格"""

import itertools

from enum import Enum
from math import lcm
from typing import Sequence, Iterator
from typing import Dict, List, Tuple, Any, FrozenSet

from sympy import Rational

from . import linalg_util as la
from . import util
from .exceptions import NotIsotropic, EnumerationCapExceeded, NotIntegral
from .lattice import Lattice, Lattice_vector, Sublattice
from .linalg_util import Int_matrix

Element = Tuple[int, ...]
"""判别群元素, 以各生成元的系数表示, 第i个系数取值于[0, dᵢ)"""

class Finite_quadratic_form:
    """有限二次型: 判别群A_L, 生成元的提升, q(取值于Q/2Z)和b(取值于Q/Z)"""

    lattice: Lattice
    """所属的格"""
    orders: List[int]
    """各生成元的阶, 来自Smith标准形的非平凡因子链"""
    generators: List[Tuple[Rational, ...]]
    """生成元在L⊗Q中的提升(L*中的元素)"""

    def __init__(self, lattice: Lattice):
        self.lattice = lattice
        result = la.snf(lattice.gram)
        diagonal = result.diagonal

        self._positions = [i for i, d in enumerate(diagonal) if d > 1]
        self.orders = [diagonal[i] for i in self._positions]
        self.generators = [tuple(Rational(int(result.V[r, i]), diagonal[i]) for r in range(lattice.rank))
                           for i in self._positions]
        self._U_rows = la.to_rows(result.U)

    @property
    def order(self) -> int:
        """群的阶, 等于|det L|"""
        total = 1
        for d in self.orders:
            total *= d
        return total

    @property
    def zero(self) -> Element:
        return (0,) * len(self.orders)

    def elements(self) -> Iterator[Element]:
        """按坐标字典序列出全部元素"""
        return itertools.product(*[range(d) for d in self.orders])

    def reduce(self, x: Sequence[int]) -> Element:
        return tuple(int(c) % d for c, d in zip(x, self.orders))

    def add(self, x: Element, y: Element) -> Element:
        return self.reduce([a + b for a, b in zip(x, y)])

    def scale(self, n: int, x: Element) -> Element:
        return self.reduce([n * a for a in x])

    def element_order(self, x: Element) -> int:
        """元素的阶"""
        ret = 1
        for c, d in zip(x, self.orders):
            ret = lcm(ret, d // la.vector_gcd([c, d]))
        return ret

    def lift(self, x: Element) -> Tuple[Rational, ...]:
        """元素在L⊗Q中的提升 Σ xᵢ·gᵢ"""
        ret = [Rational(0)] * self.lattice.rank
        for c, g in zip(x, self.generators):
            if c:
                ret = [a + c * b for a, b in zip(ret, g)]
        return tuple(ret)

    def q(self, x: Element) -> Rational:
        """二次型, 取[0, 2)中的代表元"""
        lifted = self.lift(x)
        return Rational(self.lattice.pair(lifted, lifted)) % 2

    def b(self, x: Element, y: Element) -> Rational:
        """双线性型, 取[0, 1)中的代表元"""
        return Rational(self.lattice.pair(self.lift(x), self.lift(y))) % 1

    def class_of(self, w: Sequence[Any]) -> Element:
        """对偶格L*中的有理向量w在A_L中的类

        Raises:
            `NotIntegral`: w不属于L*
        """
        pairings = [sum(Rational(row[j]) * w[j] for j in range(self.lattice.rank)) for row in self.lattice._rows]
        if any(Rational(p).q != 1 for p in pairings):
            raise NotIntegral("Vector is not in the dual lattice")
        c = [sum(self._U_rows[i][j] * int(pairings[j]) for j in range(self.lattice.rank)) for i in self._positions]
        return self.reduce(c)

    def q_values(self) -> List[Rational]:
        """全部元素的q值, 按元素字典序排列"""
        return [self.q(x) for x in self.elements()]

    def value_multiset(self) -> List[Rational]:
        """q值的有序多重集, 用于比较"""
        return sorted(self.q_values())

    def b_matrix(self) -> List[List[Rational]]:
        """生成元之间的b值矩阵"""
        gens = [self._unit(i) for i in range(len(self.orders))]
        return [[self.b(x, y) for y in gens] for x in gens]

    def _unit(self, i: int) -> Element:
        return tuple(int(i == j) for j in range(len(self.orders)))

    def is_two_elementary(self) -> bool:
        return all(d == 2 for d in self.orders)

    def export_json(self) -> Dict[str, Any]:
        return {
            "orders": list(self.orders),
            "generators": [[util.render_rational(c) for c in g] for g in self.generators],
            "generator_q": [util.render_rational(self.q(self._unit(i))) for i in range(len(self.orders))],
            "b_matrix": [[util.render_rational(x) for x in row] for row in self.b_matrix()],
            "q_values": [util.render_rational(self.q(x)) for x in self.elements() if any(x)],
        }

    def __repr__(self) -> str:
        return "Finite_quadratic_form(orders=%s)" % self.orders

class Isotropic_subgroup:
    """判别群中q与b都恒为零的子群"""

    parent: Finite_quadratic_form
    """所在的有限二次型"""
    elements: List[Element]
    """子群的全部元素, 按字典序排列"""

    def __init__(self, parent: Finite_quadratic_form, elements: Sequence[Element]):
        """
        Raises:
            `NotIsotropic`: 元素集合不是迷向子群
        """
        self.parent = parent
        self.elements = sorted(set(tuple(x) for x in elements))
        members = set(self.elements)
        if parent.zero not in members:
            raise NotIsotropic("Subgroup must contain zero")
        for x in self.elements:
            if parent.q(x) != 0:
                raise NotIsotropic("q does not vanish on %s" % (x,))
            for y in self.elements:
                if parent.add(x, y) not in members:
                    raise NotIsotropic("Element set is not closed under addition")
                if parent.b(x, y) != 0:
                    raise NotIsotropic("b does not vanish on (%s, %s)" % (x, y))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def nonzero(self) -> List[Element]:
        return [x for x in self.elements if any(x)]

    def export_json(self) -> Dict[str, Any]:
        return {"order": self.order, "elements": [list(x) for x in self.elements]}

    def __repr__(self) -> str:
        return "Isotropic_subgroup(%s)" % self.elements

class Rank2_class(Enum):
    """双曲秩二偶格的分类名称"""

    U = "U"
    U2 = "U(2)"
    two_minus_two = "⟨2⟩⊕⟨-2⟩"
    other = "other"

U2_MULTISET = [Rational(0), Rational(0), Rational(0), Rational(1)]
"""U(2)判别型的q值多重集"""
TWO_MINUS_TWO_MULTISET = [Rational(0), Rational(0), Rational(1, 2), Rational(3, 2)]
"""⟨2⟩⊕⟨-2⟩判别型的q值多重集"""

def discriminant_group(L: Lattice) -> Finite_quadratic_form:
    """计算L的判别群及其有限二次型"""
    return Finite_quadratic_form(L)

def is_two_elementary(L: Lattice) -> bool:
    """判别群是否同构于(Z/2)^a"""
    return discriminant_group(L).is_two_elementary()

def two_elementary_invariants(L: Lattice) -> Tuple[int, int, int]:
    """2-初等格的不变量 (r, a, δ)

    δ = 0 当且仅当所有q值都属于Z/2Z

    Raises:
        `ValueError`: L不是2-初等的
    """
    A = discriminant_group(L)
    if not A.is_two_elementary():
        raise ValueError("Lattice is not 2-elementary (orders %s)" % A.orders)
    delta = 0 if all(v.q == 1 for v in A.q_values()) else 1
    return L.rank, len(A.orders), delta

def classify_rank2(L: Lattice) -> Rank2_class:
    """识别符号差为(1,1)的秩二偶格: U, U(2), ⟨2⟩⊕⟨-2⟩或其他

    三个具名类由 (|det|, 2-初等不变量, q值多重集) 两两区分.

    Raises:
        `ValueError`: 秩不为2或符号差不为(1,1)
    """
    if L.rank != 2 or L.signature != (1, 1):
        raise ValueError("classify_rank2 needs rank 2 and signature (1,1), got rank %d" % L.rank)
    if abs(L.det) == 1:
        return Rank2_class.U
    if abs(L.det) != 4:
        return Rank2_class.other
    A = discriminant_group(L)
    if not A.is_two_elementary():
        return Rank2_class.other
    _, _, delta = two_elementary_invariants(L)
    multiset = A.value_multiset()
    if delta == 0 and multiset == U2_MULTISET:
        return Rank2_class.U2
    if delta == 1 and multiset == TWO_MINUS_TWO_MULTISET:
        return Rank2_class.two_minus_two
    return Rank2_class.other

def isotropic_subgroups(A: Finite_quadratic_form, max_size: int = util.ENUMERATION_CAP) -> List[Isotropic_subgroup]:
    """枚举全部迷向子群(包括平凡子群)

    结果按 (阶, 元素字典序) 排序, 输出顺序确定.

    Raises:
        `EnumerationCapExceeded`: 判别群的阶超过`max_size`
    """
    if A.order > max_size:
        raise EnumerationCapExceeded("Discriminant group of order %d exceeds the cap %d" % (A.order, max_size))
    isotropic = [x for x in A.elements() if A.q(x) == 0]
    start: FrozenSet[Element] = frozenset([A.zero])
    seen = {start}
    frontier = [start]
    while frontier:
        grown = []
        for H in frontier:
            for x in isotropic:
                if x in H or any(A.b(x, h) != 0 for h in H):
                    continue
                multiples = [A.scale(k, x) for k in range(A.element_order(x))]
                H2 = frozenset(A.add(h, m) for h in H for m in multiples)
                if H2 not in seen:
                    seen.add(H2)
                    grown.append(H2)
        frontier = grown
    groups = sorted(seen, key=lambda H: (len(H), sorted(H)))
    return [Isotropic_subgroup(A, sorted(H)) for H in groups]

class Overlattice:
    """由迷向子群粘合得到的偶超格"""

    lattice: Lattice
    """超格本身"""
    basis: List[Tuple[Rational, ...]]
    """超格的基在原格L⊗Q坐标下的表示"""
    embedding: Int_matrix
    """原格嵌入矩阵, 第i列为原格第i个基向量在超格基下的坐标"""
    source: Lattice
    """原格"""

    def __init__(self, source: Lattice, basis: List[Tuple[Rational, ...]], lattice: Lattice, embedding: Int_matrix):
        self.source = source
        self.basis = basis
        self.lattice = lattice
        self.embedding = embedding

    def image(self, v: Sequence[int]) -> Lattice_vector:
        """原格向量在超格中的像"""
        return Lattice_vector(self.lattice, la.mat_vec(self.embedding, v))

    def image_sublattice(self, vectors: Sequence[Sequence[int]]) -> Sublattice:
        """原格中一组向量在超格中张成的子格"""
        return Sublattice(self.lattice, [self.image(v) for v in vectors])

    def export_json(self) -> Dict[str, Any]:
        return {
            "gram": la.to_rows(self.lattice.gram),
            "det": self.lattice.det,
            "embedding": la.to_rows(self.embedding),
        }

def overlattice(L: Lattice, H: Isotropic_subgroup) -> Overlattice:
    """由L和H中元素的提升生成的超格

    Gram矩阵经检验为整的偶矩阵, 且 |det| = |det L| / |H|².

    Raises:
        `NotIsotropic`: 得到的超格不是偶整格(H不是迷向子群时)
    """
    A = H.parent
    lifts = [A.lift(x) for x in H.nonzero]
    denominator = 1
    for lifted in lifts:
        for c in lifted:
            denominator = lcm(denominator, int(c.q))
    rows = [[denominator * int(i == j) for j in range(L.rank)] for i in range(L.rank)]
    rows += [[int(c * denominator) for c in lifted] for lifted in lifts]
    scaled = la.hermite_basis(rows)
    basis = [tuple(Rational(x, denominator) for x in row) for row in scaled]

    gram = [[L.pair(u, w) for w in basis] for u in basis]
    for i, row in enumerate(gram):
        if any(Rational(x).q != 1 for x in row) or int(row[i]) % 2 != 0:
            raise NotIsotropic("Glued lattice is not even and integral")
    new_lattice = Lattice([[int(x) for x in row] for row in gram])

    # 原格的基向量在新基下的坐标
    inverse = denominator * la.int_matrix(scaled).T.inv()
    assert all(Rational(x).q == 1 for x in inverse)
    embedding = la.int_matrix([[int(x) for x in row] for row in inverse.tolist()])

    return Overlattice(L, basis, new_lattice, embedding)

def is_primitive_in(sub: Sublattice) -> bool:
    """子格在(超)格中是否本原, 即本原包不比它更大"""
    if sub.rank == 0:
        return True
    return la.index_in_saturation(sub.basis_coords) == 1

def forms_isomorphic(A: Finite_quadratic_form, B: Finite_quadratic_form, cap: int = util.FORM_ISO_CAP) -> bool:
    """暴力检验两个有限二次型是否同构

    在B中为A的每个生成元寻找阶、q值与两两b值都匹配的像, 并要求映射为双射.

    Raises:
        `EnumerationCapExceeded`: 群的阶超过`cap`
    """
    if sorted(A.orders) != sorted(B.orders):
        return False
    if A.order > cap:
        raise EnumerationCapExceeded("Form of order %d exceeds the isomorphism cap %d" % (A.order, cap))
    if A.value_multiset() != B.value_multiset():
        return False

    gens = [A._unit(i) for i in range(len(A.orders))]
    candidates = []
    for i, g in enumerate(gens):
        candidates.append([y for y in B.elements()
                           if B.element_order(y) == A.orders[i] and B.q(y) == A.q(g)])

    def extend(images: List[Element]) -> bool:
        k = len(images)
        if k == len(gens):
            image_set = set()
            for x in A.elements():
                total = B.zero
                for c, y in zip(x, images):
                    total = B.add(total, B.scale(c, y))
                image_set.add(total)
            return len(image_set) == A.order
        for y in candidates[k]:
            if all(B.b(y, images[j]) == A.b(gens[k], gens[j]) for j in range(k)):
                if extend(images + [y]):
                    return True
        return False

    return extend([])
