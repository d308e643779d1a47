"""秩二格的表示问题 x² = n 的求解, 以及小秩格之间的等距搜索

对判别式 b²−ac 为完全平方数(包括所有具名的双曲秩二格)或正/负定的二元型,
使用基于因式分解的精确解法, 结果与坐标上限无关; 其他情况退化为有界穷举并发出警告.
"""

import itertools
import warnings

from math import isqrt
from typing import Optional, Iterator, Sequence
from typing import List, Tuple

from sympy import divisors

from . import linalg_util as la
from . import util
from .exceptions import EnumerationCapExceeded
from .lattice import Lattice, Lattice_vector
from .linalg_util import Int_matrix, Int_vector

BOX_CAP = 2_000_000
"""有界穷举时允许的最大候选向量个数"""

def _square_root(n: int) -> Optional[int]:
    """n为完全平方数时返回其非负平方根, 否则返回None"""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None

def _signed_divisors(n: int) -> List[int]:
    positive = [int(d) for d in divisors(abs(n))]
    return positive + [-d for d in positive]

def _binary_coefficients(L: Lattice) -> Tuple[int, int, int]:
    if L.rank != 2:
        raise ValueError("Binary form solver needs a rank 2 lattice, got rank %d" % L.rank)
    (a, b), (_, c) = L._rows
    return a, b, c

def has_complete_solver(L: Lattice) -> bool:
    """秩二格L是否可用精确解法: 判别式为完全平方数, 或L为定型"""
    if L.rank != 2:
        return False
    a, b, c = _binary_coefficients(L)
    discriminant = b * b - a * c
    return discriminant < 0 or _square_root(discriminant) is not None

def _primitive_direction(x: int, y: int) -> Tuple[int, int]:
    g = la.vector_gcd((x, y))
    return x // g, y // g

def _solve_square_discriminant(a: int, b: int, c: int, s: int, n: int) -> List[Tuple[int, int]]:
    """判别式为s²(s > 0)时求 ax² + 2bxy + cy² = n 的全部整数解(n = 0时为两条迷向直线的方向)"""
    solutions: List[Tuple[int, int]] = []
    if a == 0:
        # y·(2bx + cy) = n
        if n == 0:
            return [(1, 0), _primitive_direction(-c, 2 * b)]
        for y in _signed_divisors(n):
            rest = n // y - c * y
            if rest % (2 * b) == 0:
                solutions.append((rest // (2 * b), y))
        return solutions

    # a·Q = P·R, 其中 P = ax + (b+s)y, R = ax + (b−s)y, 且 P − R = 2sy
    if n == 0:
        return [_primitive_direction(b + s, -a), _primitive_direction(b - s, -a)]
    for P in _signed_divisors(a * n):
        R = a * n // P
        if (P - R) % (2 * s) != 0:
            continue
        y = (P - R) // (2 * s)
        if (R - (b - s) * y) % a != 0:
            continue
        solutions.append(((R - (b - s) * y) // a, y))
    return solutions

def _solve_definite(a: int, b: int, c: int, n: int) -> List[Tuple[int, int]]:
    """定型时求 ax² + 2bxy + cy² = n 的全部整数解"""
    if a < 0:
        a, b, c, n = -a, -b, -c, -n
    if n <= 0:
        return []
    det = a * c - b * b
    # a·Q = (ax + by)² + det·y², 故 y² ≤ a·n / det
    y_max = isqrt(a * n // det) + 1
    solutions = []
    for y in range(-y_max, y_max + 1):
        # ax² + 2by·x + (cy² − n) = 0
        t = _square_root(b * b * y * y - a * (c * y * y - n))
        if t is None:
            continue
        for root in {t, -t}:
            if (-b * y + root) % a == 0:
                solutions.append(((-b * y + root) // a, y))
    return solutions

def _normalize(L: Lattice, raw: Sequence[Sequence[int]]) -> List[Lattice_vector]:
    """仅保留本原向量, 按符号去重(首个非零坐标为正)并排序"""
    kept = set()
    for v in raw:
        if la.vector_gcd(v) == 1:
            kept.add(la.normalize_sign(v))
    return [Lattice_vector(L, v) for v in sorted(kept)]

def brute_force_represent(L: Lattice, n: int, bound: int) -> List[Lattice_vector]:
    """在坐标绝对值不超过bound的盒子内穷举满足 x² = n 的本原向量, 按符号去重

    Raises:
        `EnumerationCapExceeded`: 盒子中的候选向量过多
    """
    if (2 * bound + 1) ** L.rank > BOX_CAP:
        raise EnumerationCapExceeded("Search box (2·%d+1)^%d is too large" % (bound, L.rank))
    found = []
    for coords in itertools.product(range(-bound, bound + 1), repeat=L.rank):
        if any(coords) and L.pair(coords, coords) == n:
            found.append(coords)
    return _normalize(L, found)

def represent(L: Lattice, n: int, bound: Optional[int] = None) -> List[Lattice_vector]:
    """求秩二格中所有平方为n的本原向量, 按符号去重(保留首个非零坐标为正者)

    Args:
        L (`Lattice`): 秩为2的偶格
        n (`int`): 目标平方值
        bound (`int`, optional): 无法精确求解时穷举的坐标上限. 默认取`util.enumeration_bound()`.

    Returns:
        `List[Lattice_vector]`: 按坐标字典序排列的解. 若`has_complete_solver(L)`为真, 结果完备且与bound无关.

    Raises:
        `ValueError`: L的秩不为2
    """
    a, b, c = _binary_coefficients(L)
    discriminant = b * b - a * c
    if discriminant < 0:
        return _normalize(L, _solve_definite(a, b, c, n))
    s = _square_root(discriminant)
    if s is not None:
        return _normalize(L, _solve_square_discriminant(a, b, c, s, n))

    bound = util.enumeration_bound(bound)
    warnings.warn("Discriminant %d is not a square: represent(%d) is limited to |coords| <= %d"
                  % (discriminant, n, bound))
    return brute_force_represent(L, n, bound)

def search_is_complete(L1: Lattice) -> bool:
    """对L1的等距搜索是否是决定性的(搜不到即不存在)"""
    return has_complete_solver(L1)

def _column_candidates(L1: Lattice, target: int, bound: int) -> List[Int_vector]:
    if has_complete_solver(L1):
        half = [v.coords for v in represent(L1, target)]
    else:
        half = [v.coords for v in brute_force_represent(L1, target, bound)]
    # 等距矩阵的列必为本原向量, 两个符号都要考虑
    return half + [tuple(-x for x in v) for v in half]

def _invariants_match(L1: Lattice, L2: Lattice) -> bool:
    return L1.rank == L2.rank and abs(L1.det) == abs(L2.det) and L1.signature == L2.signature

def iter_isometries(L1: Lattice, L2: Lattice, bound: Optional[int] = None) -> Iterator[Int_matrix]:
    """逐个产生满足 Tᵀ·G₁·T = G₂ 且 |det T| = 1 的矩阵T

    T的第i列是L2的第i个基向量在L1中的像, 按列回溯搜索, 每一步检查已选列之间的配对.
    """
    if not _invariants_match(L1, L2):
        return
    bound = util.enumeration_bound(bound)
    G2 = L2._rows
    candidates = [_column_candidates(L1, G2[i][i], bound) for i in range(L2.rank)]

    def extend(columns: List[Int_vector]) -> Iterator[Int_matrix]:
        k = len(columns)
        if k == L2.rank:
            T = la.columns_matrix(columns, L1.rank)
            if abs(la.det(T)) == 1 and T.T * L1.gram * T == L2.gram:
                yield T
            return
        for v in candidates[k]:
            if all(L1.pair(v, columns[j]) == G2[k][j] for j in range(k)):
                yield from extend(columns + [v])

    yield from extend([])

def isometry_search(L1: Lattice, L2: Lattice, bound: Optional[int] = None) -> Optional[Int_matrix]:
    """寻找L2到L1的等距同构, 返回的T满足 Tᵀ·G₁·T = G₂

    找不到时返回None; 仅当`search_is_complete(L1)`时这才说明两者不同构,
    否则只说明在坐标上限内未找到, 此时会发出警告.
    """
    found = next(iter_isometries(L1, L2, bound), None)
    if found is None and _invariants_match(L1, L2) and not search_is_complete(L1):
        warnings.warn("No isometry found within the coordinate bound; this is not a proof of non-isometry")
    return found

def automorphisms(L: Lattice) -> List[Int_matrix]:
    """秩二格的全部自等距(要求精确解法可用, 此时结果完备)

    Raises:
        `ValueError`: L的秩不为2或不可精确求解
    """
    if not has_complete_solver(L):
        raise ValueError("Automorphism list is only certified for rank 2 forms with a complete solver")
    return sorted(iter_isometries(L, L), key=la.to_rows)
