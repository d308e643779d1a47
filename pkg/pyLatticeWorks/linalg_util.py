"""精确整数/有理线性代数, 所有格计算的底层

矩阵统一使用元素为整数的`sympy.ImmutableMatrix`, 向量统一使用整数元组.
全程不出现浮点数.
"""

from math import gcd
from functools import reduce

from typing import Iterable, Sequence, Union
from typing import List, Tuple

from sympy import ImmutableMatrix, Integer, Rational, eye, diag

from .exceptions import RankDeficiency, DegenerateForm

Int_matrix = ImmutableMatrix
"""整数矩阵类型, 元素均为整数"""
Int_vector = Tuple[int, ...]
"""整数坐标向量类型"""

def int_matrix(rows: Union[Sequence[Sequence[int]], ImmutableMatrix], n_cols: int = 0) -> Int_matrix:
    """Int_matrix的简便构造函数, 并检查所有元素均为整数

    Args:
        rows (`Sequence[Sequence[int]]` or `ImmutableMatrix`): 按行给出的矩阵元素
        n_cols (`int`, optional): 行数为0时使用的列数. 默认为0.

    Raises:
        `TypeError`: 存在非整数元素(包括浮点数)
    """
    if isinstance(rows, ImmutableMatrix) or hasattr(rows, "tolist"):
        rows = rows.tolist()
    rows = [list(row) for row in rows]
    if len(rows) == 0:
        return ImmutableMatrix.zeros(0, n_cols)
    for row in rows:
        if len(row) != len(rows[0]):
            raise ValueError("Ragged matrix rows")
        for x in row:
            if isinstance(x, bool) or not isinstance(x, (int, Integer)):
                if isinstance(x, Rational) and x.q == 1:
                    continue
                raise TypeError("Matrix entries must be integers, got %r" % (x,))
    return ImmutableMatrix([[int(x) for x in row] for row in rows])

def to_rows(M: Int_matrix) -> List[List[int]]:
    """将矩阵转为Python整数的二维列表, 便于快速运算"""
    return [[int(x) for x in row] for row in M.tolist()]

def identity(n: int) -> Int_matrix:
    """n阶单位矩阵"""
    return ImmutableMatrix(eye(n))

def block_diagonal(*blocks: Int_matrix) -> Int_matrix:
    """按顺序拼成分块对角矩阵"""
    if len(blocks) == 0:
        return ImmutableMatrix.zeros(0, 0)
    return ImmutableMatrix(diag(*blocks))

def columns_matrix(vectors: Sequence[Sequence[int]], n_rows: int) -> Int_matrix:
    """以给定向量为列构造矩阵"""
    if len(vectors) == 0:
        return ImmutableMatrix.zeros(n_rows, 0)
    return int_matrix([list(v) for v in vectors]).T

def mat_vec(M: Int_matrix, v: Sequence[int]) -> Int_vector:
    """矩阵乘以整数列向量"""
    return tuple(int(sum(int(M[i, j]) * int(v[j]) for j in range(M.cols))) for i in range(M.rows))

def vector_gcd(v: Iterable[int]) -> int:
    """向量各分量的最大公因数, 零向量返回0"""
    return reduce(gcd, (abs(int(x)) for x in v), 0)

def normalize_sign(v: Sequence[int]) -> Int_vector:
    """调整符号, 使第一个非零分量为正"""
    for x in v:
        if x != 0:
            return tuple(int(y) for y in v) if x > 0 else tuple(-int(y) for y in v)
    return tuple(int(y) for y in v)

class Snf_result:
    """Smith标准形分解 U·M·V = S 的结果"""

    U: Int_matrix
    """左侧幺模变换"""
    S: Int_matrix
    """对角矩阵, 对角元满足 d₁ | d₂ | … 且非负"""
    V: Int_matrix
    """右侧幺模变换"""

    def __init__(self, U: Int_matrix, S: Int_matrix, V: Int_matrix):
        self.U, self.S, self.V = U, S, V

    @property
    def diagonal(self) -> List[int]:
        """S的对角元列表"""
        return [int(self.S[i, i]) for i in range(min(self.S.rows, self.S.cols))]

    @property
    def rank(self) -> int:
        """矩阵的秩, 即非零对角元的个数"""
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> List[int]:
        """去掉平凡因子1后的非零对角元, 即余核挠部分的阶"""
        return [d for d in self.diagonal if d > 1]

    def check(self, M: Int_matrix) -> bool:
        """检查 U·M·V = S 以及U、V的幺模性"""
        if self.U * M * self.V != self.S:
            return False
        if abs(self.U.det(method="bareiss")) != 1 or abs(self.V.det(method="bareiss")) != 1:
            return False
        diagonal = self.diagonal
        for i in range(self.S.rows):
            for j in range(self.S.cols):
                if i != j and self.S[i, j] != 0:
                    return False
        for a, b in zip(diagonal, diagonal[1:]):
            if a < 0 or (a == 0 and b != 0) or (a != 0 and b % a != 0):
                return False
        return True

    def export_json(self):
        return {"U": to_rows(self.U), "S": to_rows(self.S), "V": to_rows(self.V)}

def snf(M: Int_matrix) -> Snf_result:
    """计算整数矩阵的Smith标准形及两侧幺模变换

    每步选取剩余子矩阵中绝对值最小的非零元作主元, 以抑制系数增长.
    Python整数为任意精度, 中间结果不会溢出.

    Args:
        M (`Int_matrix`): 任意形状的整数矩阵

    Returns:
        `Snf_result`: 满足 U·M·V = S 的分解
    """
    A = to_rows(M)
    m, n = M.rows, M.cols
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i: int, k: int):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j: int, k: int):
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(target: int, source: int, factor: int):
        """第target行加上factor倍的第source行"""
        A[target] = [a + factor * b for a, b in zip(A[target], A[source])]
        U[target] = [a + factor * b for a, b in zip(U[target], U[source])]

    def add_col(target: int, source: int, factor: int):
        for row in A:
            row[target] += factor * row[source]
        for row in V:
            row[target] += factor * row[source]

    for t in range(min(m, n)):
        # 选取绝对值最小的非零主元
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            # 消去主元所在列与行
            for i in range(t + 1, m):
                q = A[i][t] // A[t][t]
                if q:
                    add_row(i, t, -q)
            for j in range(t + 1, n):
                q = A[t][j] // A[t][t]
                if q:
                    add_col(j, t, -q)

            # 余数非零时换入更小的主元
            smaller = None
            for i in range(t + 1, m):
                if A[i][t] != 0 and (smaller is None or abs(A[i][t]) < abs(smaller[2])):
                    smaller = ("row", i, A[i][t])
            for j in range(t + 1, n):
                if A[t][j] != 0 and (smaller is None or abs(A[t][j]) < abs(smaller[2])):
                    smaller = ("col", j, A[t][j])
            if smaller is not None:
                if smaller[0] == "row":
                    swap_rows(t, smaller[1])
                else:
                    swap_cols(t, smaller[1])
                continue

            # 主元须整除剩余子矩阵的所有元素
            offender = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                             if A[i][j] % A[t][t] != 0), None)
            if offender is None:
                break
            add_row(t, offender[0], 1)

        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]

    return Snf_result(int_matrix(U, m), int_matrix(A, n), int_matrix(V, n))

def hermite_basis(vectors: Sequence[Sequence[int]]) -> List[Int_vector]:
    """整数行向量组张成子群的Hermite标准形基, 结果与输入顺序无关且去掉了零行"""
    rows = [[int(x) for x in v] for v in vectors]
    if len(rows) == 0:
        return []
    n = len(rows[0])
    r = 0
    for col in range(n):
        while True:
            nonzero = [i for i in range(r, len(rows)) if rows[i][col] != 0]
            if len(nonzero) == 0:
                break
            best = min(nonzero, key=lambda i: abs(rows[i][col]))
            rows[r], rows[best] = rows[best], rows[r]
            if len(nonzero) == 1:
                break
            for k in range(r + 1, len(rows)):
                q = rows[k][col] // rows[r][col]
                if q:
                    rows[k] = [a - q * b for a, b in zip(rows[k], rows[r])]
        if r >= len(rows) or rows[r][col] == 0:
            continue
        if rows[r][col] < 0:
            rows[r] = [-a for a in rows[r]]
        for k in range(r):
            q = rows[k][col] // rows[r][col]
            if q:
                rows[k] = [a - q * b for a, b in zip(rows[k], rows[r])]
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r] if any(row)]

def rank_of(vectors: Sequence[Sequence[int]]) -> int:
    """整数向量组的秩"""
    return len(hermite_basis(vectors))

def kernel_basis(M: Int_matrix) -> List[Int_vector]:
    """整数矩阵的整核 {x : Mx = 0} 的一组基

    核总是本原的, 返回的是其Hermite标准形基.
    """
    if M.rows == 0:
        return [tuple(int(i == j) for j in range(M.cols)) for i in range(M.cols)]
    result = snf(M)
    kernel = [tuple(int(result.V[i, j]) for i in range(M.cols)) for j in range(result.rank, M.cols)]
    return hermite_basis(kernel)

def saturate(vectors: Sequence[Sequence[int]], ambient_rank: int) -> List[Int_vector]:
    """求包含给定向量组的最小本原子群(本原包)的一组基

    Args:
        vectors (`Sequence[Sequence[int]]`): 线性无关的整数向量
        ambient_rank (`int`): 所在Z^n的维数n

    Raises:
        `RankDeficiency`: 输入向量线性相关
    """
    vectors = [tuple(int(x) for x in v) for v in vectors]
    for v in vectors:
        if len(v) != ambient_rank:
            raise ValueError("Vector length %d does not match ambient rank %d" % (len(v), ambient_rank))
    if len(vectors) == 0:
        return []
    if rank_of(vectors) < len(vectors):
        raise RankDeficiency("rank deficiency: %d vectors span rank %d" % (len(vectors), rank_of(vectors)))

    # 本原包 = 零化子的零化子
    annihilator = kernel_basis(int_matrix(vectors))
    hull = kernel_basis(int_matrix(annihilator, ambient_rank))
    return hull

def index_in_saturation(vectors: Sequence[Sequence[int]]) -> int:
    """向量组张成的子群在其本原包中的指数, 本原时为1"""
    diagonal = snf(int_matrix(vectors)).diagonal
    index = 1
    for d in diagonal:
        if d == 0:
            raise RankDeficiency("rank deficiency")
        index *= d
    return index

def det(G: Int_matrix) -> int:
    """精确行列式(Bareiss算法)"""
    if G.rows != G.cols:
        raise ValueError("Determinant of a non-square matrix")
    if G.rows == 0:
        return 1
    return int(G.det(method="bareiss"))

def signature(G: Int_matrix) -> Tuple[int, int]:
    """通过有理对称合同对角化精确计算对称矩阵的符号差

    对角主元为零时进行行列交换, 若剩余对角元全为零则把某一行加到主元行上.

    Returns:
        `Tuple[int, int]`: (正特征值个数, 负特征值个数)

    Raises:
        `ValueError`: 矩阵不对称
        `DegenerateForm`: 矩阵退化
    """
    if G != G.T:
        raise ValueError("Matrix is not symmetric")
    n = G.rows
    A = [[Rational(x) for x in row] for row in G.tolist()]
    n_plus = n_minus = 0
    for k in range(n):
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, n) if A[j][j] != 0), None)
            if j is not None:
                A[k], A[j] = A[j], A[k]
                for row in A:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if A[k][j] != 0), None)
                if j is None:
                    raise DegenerateForm("degenerate form")
                # e_k <- e_k + e_j, 此时新对角元为 2·A[k][j]
                A[k] = [a + b for a, b in zip(A[k], A[j])]
                for row in A:
                    row[k] += row[j]
        p = A[k][k]
        for i in range(k + 1, n):
            if A[i][k] == 0:
                continue
            f = A[i][k] / p
            for j in range(k + 1, n):
                A[i][j] -= f * A[k][j]
        for i in range(k + 1, n):
            A[i][k] = A[k][i] = Rational(0)
        if p > 0:
            n_plus += 1
        else:
            n_minus += 1
    return n_plus, n_minus

def solve_rational(vectors: Sequence[Sequence[int]], target: Sequence[int]) -> Union[Tuple[Rational, ...], None]:
    """求有理系数c使 Σ cᵢ·vectorsᵢ = target, 向量组须线性无关; 不在有理张成中时返回None"""
    if len(vectors) == 0:
        return () if not any(target) else None
    B = ImmutableMatrix([list(v) for v in vectors]).T
    b = ImmutableMatrix([int(x) for x in target])
    try:
        solution, params = B.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.rows != 0:
        raise RankDeficiency("rank deficiency")
    return tuple(Rational(x) for x in solution)
