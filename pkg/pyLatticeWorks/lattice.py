"""定义偶格、格向量与子格类, 以及常用格的构造函数"""

from typing import Optional, Sequence, Union
from typing import Dict, List, Tuple, Any

from sympy import Rational

from . import linalg_util as la
from .exceptions import NotEven, DegenerateForm, ZeroVector, LatticeMismatch, DocumentError, RankDeficiency
from .linalg_util import Int_matrix, Int_vector

class Lattice:
    """由某组固定基下的Gram矩阵给出的非退化偶格"""

    gram: Int_matrix
    """Gram矩阵, 对称、对角元为偶数且行列式非零"""
    label: Optional[str]
    """显示用名称, 可为空"""

    def __init__(self, gram: Union[Int_matrix, Sequence[Sequence[int]]], label: Optional[str] = None):
        """由Gram矩阵构造偶格

        Args:
            gram (`Int_matrix` or `Sequence[Sequence[int]]`): Gram矩阵
            label (`str`, optional): 显示用名称. 默认为空.

        Raises:
            `ValueError`: Gram矩阵不是对称方阵
            `NotEven`: 存在奇数对角元
            `DegenerateForm`: 行列式为零
        """
        gram = la.int_matrix(gram)
        if gram.rows != gram.cols or gram != gram.T:
            raise ValueError("Gram matrix must be square and symmetric")
        for i in range(gram.rows):
            if int(gram[i, i]) % 2 != 0:
                raise NotEven("not even: diagonal entry %d at index %d is odd" % (int(gram[i, i]), i))
        self.gram = gram
        self.label = label
        self._rows = la.to_rows(gram)
        self._det = la.det(gram)
        if self._det == 0:
            raise DegenerateForm("degenerate form")

    @classmethod
    def import_json(cls, json_obj: Any) -> "Lattice":
        """从格文档 {"gram": [[int,…],…], "label": 可选字符串} 中恢复Lattice

        Raises:
            `DocumentError`: 文档格式错误
        """
        if not isinstance(json_obj, dict) or "gram" not in json_obj:
            raise DocumentError("Lattice document must be an object with a 'gram' field")
        gram = json_obj["gram"]
        if not isinstance(gram, list) or not all(isinstance(row, list) for row in gram):
            raise DocumentError("'gram' must be a list of integer lists")
        if not all(isinstance(x, int) and not isinstance(x, bool) for row in gram for x in row):
            raise DocumentError("'gram' entries must be integers")
        label = json_obj.get("label")
        if label is not None and not isinstance(label, str):
            raise DocumentError("'label' must be a string")
        try:
            return cls(gram, label)
        except (NotEven, DegenerateForm, ValueError) as err:
            raise DocumentError(str(err)) from err

    def export_json(self) -> Dict[str, Any]:
        ret: Dict[str, Any] = {"gram": la.to_rows(self.gram)}
        if self.label is not None:
            ret["label"] = self.label
        return ret

    @property
    def rank(self) -> int:
        """格的秩"""
        return self.gram.rows

    @property
    def det(self) -> int:
        """Gram矩阵的行列式"""
        return self._det

    @property
    def signature(self) -> Tuple[int, int]:
        """符号差 (n₊, n₋)"""
        if not hasattr(self, "_signature"):
            self._signature = la.signature(self.gram)
        return self._signature

    @property
    def is_unimodular(self) -> bool:
        return abs(self._det) == 1

    def vector(self, *coords: int) -> "Lattice_vector":
        """按坐标构造本格中的向量, 也可直接传入一个序列"""
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        return Lattice_vector(self, coords)

    def basis_vector(self, index: int) -> "Lattice_vector":
        """第index个基向量"""
        return Lattice_vector(self, tuple(int(i == index) for i in range(self.rank)))

    def zero(self) -> "Lattice_vector":
        return Lattice_vector(self, (0,) * self.rank)

    def pair(self, v: Sequence[Any], w: Sequence[Any]) -> Any:
        """对坐标(整数或有理数)直接计算 vᵀ·G·w"""
        return sum(v[i] * self._rows[i][j] * w[j]
                   for i in range(self.rank) if v[i] != 0
                   for j in range(self.rank) if w[j] != 0)

    def gram_times(self, v: Sequence[int]) -> Int_vector:
        """计算 G·v, 即v与各基向量的配对"""
        return tuple(sum(row[j] * int(v[j]) for j in range(self.rank)) for row in self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return False
        return self is other or self.gram == other.gram

    def __hash__(self) -> int:
        return hash(tuple(tuple(row) for row in self._rows))

    def __repr__(self) -> str:
        return "Lattice(label=%r, rank=%d, det=%d)" % (self.label, self.rank, self._det)

    def __str__(self) -> str:
        return self.label if self.label else "Lattice(rank=%d)" % self.rank

class Lattice_vector:
    """相对于某个格的基的整数坐标向量"""

    lattice: Lattice
    """所属的格"""
    coords: Int_vector
    """坐标, 长度等于格的秩"""

    def __init__(self, lattice: Lattice, coords: Sequence[int]):
        if len(coords) != lattice.rank:
            raise ValueError("Vector of length %d does not fit a lattice of rank %d" % (len(coords), lattice.rank))
        self.lattice = lattice
        self.coords = tuple(int(x) for x in coords)

    def _check_same(self, other: "Lattice_vector") -> None:
        if not isinstance(other, Lattice_vector):
            raise TypeError("Expected a Lattice_vector, got %s" % type(other))
        if self.lattice != other.lattice:
            raise LatticeMismatch("Vectors belong to different lattices (%s, %s)" % (self.lattice, other.lattice))

    def __add__(self, other: "Lattice_vector") -> "Lattice_vector":
        self._check_same(other)
        return Lattice_vector(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Lattice_vector") -> "Lattice_vector":
        self._check_same(other)
        return Lattice_vector(self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Lattice_vector":
        return Lattice_vector(self.lattice, tuple(-a for a in self.coords))

    def __mul__(self, factor: int) -> "Lattice_vector":
        return Lattice_vector(self.lattice, tuple(factor * a for a in self.coords))
    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice_vector):
            return False
        return self.coords == other.coords and self.lattice == other.lattice

    def __hash__(self) -> int:
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, index: int) -> int:
        return self.coords[index]

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def norm(self) -> int:
        """自配对 (v, v)"""
        return norm(self)

    def export_json(self) -> List[int]:
        return list(self.coords)

    def __repr__(self) -> str:
        return "Lattice_vector(%s)" % (self.coords,)

class Sublattice:
    """环境格中由一组线性无关向量张成的子格"""

    ambient: Lattice
    """环境格"""
    basis: List[Lattice_vector]
    """子格的基"""
    gram: Int_matrix
    """诱导的Gram矩阵 Bᵀ·G·B"""
    primitive: bool
    """子格在环境格中是否本原"""

    def __init__(self, ambient: Lattice, basis: Sequence[Union[Lattice_vector, Sequence[int]]]):
        """
        Raises:
            `RankDeficiency`: 基向量线性相关
            `LatticeMismatch`: 基向量不属于环境格
        """
        vectors: List[Lattice_vector] = []
        for b in basis:
            if isinstance(b, Lattice_vector):
                if b.lattice != ambient:
                    raise LatticeMismatch("Basis vector does not belong to the ambient lattice")
                vectors.append(b)
            else:
                vectors.append(Lattice_vector(ambient, b))
        coords = [v.coords for v in vectors]
        if la.rank_of(coords) < len(coords):
            raise RankDeficiency("rank deficiency: sublattice basis is dependent")

        self.ambient = ambient
        self.basis = vectors
        self.gram = la.int_matrix([[ambient.pair(v, w) for w in coords] for v in coords], 0)
        self.primitive = len(coords) == 0 or la.index_in_saturation(coords) == 1

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def basis_coords(self) -> List[Int_vector]:
        return [v.coords for v in self.basis]

    def as_lattice(self, label: Optional[str] = None) -> Lattice:
        """将诱导的Gram矩阵作为独立的格返回"""
        return Lattice(self.gram, label)

    def embed(self, coords: Sequence[int]) -> Lattice_vector:
        """把子格坐标映射为环境格中的向量"""
        if len(coords) != self.rank:
            raise ValueError("Expected %d sublattice coordinates" % self.rank)
        total = [0] * self.ambient.rank
        for c, b in zip(coords, self.basis):
            for i, x in enumerate(b.coords):
                total[i] += int(c) * x
        return Lattice_vector(self.ambient, total)

    def coordinates_of(self, v: Lattice_vector) -> Optional[Tuple[Rational, ...]]:
        """求环境格向量v在子格基下的(有理)坐标, 不在有理张成中时返回None"""
        return la.solve_rational(self.basis_coords, v.coords)

    def contains(self, v: Lattice_vector) -> bool:
        """判断v是否属于子格本身(整系数)"""
        coords = self.coordinates_of(v)
        return coords is not None and all(c.q == 1 for c in coords)

    def export_json(self) -> Dict[str, Any]:
        return {
            "basis": [list(v.coords) for v in self.basis],
            "gram": la.to_rows(self.gram),
            "primitive": self.primitive
        }

    def __repr__(self) -> str:
        return "Sublattice(rank=%d, primitive=%s, gram=%s)" % (self.rank, self.primitive, la.to_rows(self.gram))

def make_U() -> Lattice:
    """双曲平面U, Gram矩阵为[[0,1],[1,0]]"""
    return Lattice([[0, 1], [1, 0]], "U")

E8_EDGES = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
"""E8 Dynkin图的边(Bourbaki编号1..8, 此处从0开始)"""

def make_E8() -> Lattice:
    """负定的E8格: 对角元为-2, Dynkin图每条边对应的元素为+1"""
    gram = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in E8_EDGES:
        gram[i][j] = gram[j][i] = 1
    return Lattice(gram, "E8")

def make_rank_one(n: int) -> Lattice:
    """生成元平方为n的秩一格⟨n⟩

    Raises:
        `NotEven`: n为奇数
        `DegenerateForm`: n为零
    """
    if n % 2 != 0:
        raise NotEven("not even: <%d>" % n)
    return Lattice([[n]], "⟨%d⟩" % n)

def rescale(L: Lattice, m: int) -> Lattice:
    """把Gram矩阵乘以正整数m, 即L(m)"""
    if m <= 0:
        raise ValueError("Scale factor must be a positive integer, got %d" % m)
    label = None if L.label is None else ("%s(%d)" % (L.label, m) if m != 1 else L.label)
    return Lattice(L.gram * m, label)

def direct_sum(*lattices: Lattice) -> Lattice:
    """正交直和, Gram矩阵为分块对角阵"""
    if len(lattices) == 0:
        raise ValueError("Direct sum of no lattices")
    labels = [L.label for L in lattices]
    label = None if any(x is None for x in labels) else "⊕".join(labels)  # type: ignore
    return Lattice(la.block_diagonal(*[L.gram for L in lattices]), label)

def inner(v: Lattice_vector, w: Lattice_vector) -> int:
    """双线性型 (v, w) = vᵀ·G·w

    Raises:
        `LatticeMismatch`: v与w不在同一个格中
    """
    v._check_same(w)
    return int(v.lattice.pair(v.coords, w.coords))

def norm(v: Lattice_vector) -> int:
    """自配对 (v, v), 在偶格中总是偶数"""
    return int(v.lattice.pair(v.coords, v.coords))

def divisibility(v: Lattice_vector) -> int:
    """div_L(v): 理想 (v, L) 的正生成元, 即G·v各分量的最大公因数

    Raises:
        `ZeroVector`: v为零向量
    """
    if v.is_zero:
        raise ZeroVector("undefined for zero")
    return la.vector_gcd(v.lattice.gram_times(v.coords))

def is_primitive(v: Lattice_vector) -> bool:
    """坐标的最大公因数是否为1

    Raises:
        `ZeroVector`: v为零向量
    """
    if v.is_zero:
        raise ZeroVector("undefined for zero")
    return la.vector_gcd(v.coords) == 1

def orthogonal_complement(L: Lattice, vectors: Sequence[Lattice_vector]) -> Sublattice:
    """给定向量组在L中的正交补 {x : (x, vᵢ) = 0 ∀i}, 结果总是本原的, 秩可能为0"""
    for v in vectors:
        if v.lattice != L:
            raise LatticeMismatch("Vector does not belong to %s" % L)
    if len(vectors) == 0:
        return Sublattice(L, [L.basis_vector(i) for i in range(L.rank)])
    conditions = la.int_matrix([L.gram_times(v.coords) for v in vectors])
    return Sublattice(L, la.kernel_basis(conditions))
