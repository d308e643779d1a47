"""亏格2曲线的Weierstrass点组合: J³D中超椭圆对合的不动类及其分类"""

import itertools

from typing import Dict, List, Tuple, Iterable

Multiset = Tuple[int, int, int]
"""{1..6}上大小为3的多重集, 以非降序元组表示"""

WEIERSTRASS_POINTS = (1, 2, 3, 4, 5, 6)
"""六个Weierstrass点的编号"""

class _Union_find:
    def __init__(self, items: Iterable[Multiset]):
        self.parent: Dict[Multiset, Multiset] = {x: x for x in items}

    def find(self, x: Multiset) -> Multiset:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: Multiset, y: Multiset) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # 以字典序较小者为代表元
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

class Weierstrass_divisor_class:
    """形如 p_i + p_j + p_k 的除子的线性等价类"""

    members: List[Multiset]
    """类中的全部多重集, 按字典序排列"""

    def __init__(self, members: Iterable[Multiset]):
        self.members = sorted(tuple(sorted(m)) for m in members)

    @property
    def representative(self) -> Multiset:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def has_repeated_index(self) -> bool:
        """是否包含有重复下标的多重集(即3p_i型)"""
        return any(len(set(m)) < 3 for m in self.members)

    def __contains__(self, item: Multiset) -> bool:
        return tuple(sorted(item)) in self.members

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Weierstrass_divisor_class) and self.members == other.members

    def __hash__(self) -> int:
        return hash(tuple(self.members))

    def export_json(self):
        return {"representative": list(self.representative), "size": self.size, "r": r_invariant(self)}

    def __str__(self) -> str:
        i, j, k = self.representative
        if i == j == k:
            return "3p%d" % i
        return "p%d+p%d+p%d" % (i, j, k)

    def __repr__(self) -> str:
        return "Weierstrass_divisor_class(%s)" % self

def all_multisets() -> List[Multiset]:
    """{1..6}上全部56个大小为3的多重集"""
    return list(itertools.combinations_with_replacement(WEIERSTRASS_POINTS, 3))

def jacobian_fixed_classes() -> List[Weierstrass_divisor_class]:
    """J³D中超椭圆对合的16个不动类

    用并查集合并以下等价关系生成的类:
    {i,i,k} ~ {j,j,k} (超椭圆线性系 2p_i ~ 2p_j), 以及互不相同的三元组与其补集 (Σp_i ~ 3g¹₂).
    """
    uf = _Union_find(all_multisets())
    for i, j, k in itertools.product(WEIERSTRASS_POINTS, repeat=3):
        uf.union(tuple(sorted((i, i, k))), tuple(sorted((j, j, k))))
    for triple in itertools.combinations(WEIERSTRASS_POINTS, 3):
        complement = tuple(p for p in WEIERSTRASS_POINTS if p not in triple)
        uf.union(triple, complement)

    groups: Dict[Multiset, List[Multiset]] = {}
    for m in all_multisets():
        groups.setdefault(uf.find(m), []).append(m)
    return sorted((Weierstrass_divisor_class(g) for g in groups.values()), key=lambda c: c.representative)

def r_invariant(c: Weierstrass_divisor_class) -> int:
    """r(L) = dim H⁰(D, L)^ι: 3p_i型为2, 其余为1"""
    return 2 if c.has_repeated_index else 1

def class_of(multiset: Multiset) -> Weierstrass_divisor_class:
    """多重集所在的不动类

    Raises:
        `ValueError`: 不是{1..6}上大小为3的多重集
    """
    key = tuple(sorted(multiset))
    if len(key) != 3 or any(p not in WEIERSTRASS_POINTS for p in key):
        raise ValueError("Expected a size-3 multiset over 1..6, got %s" % (multiset,))
    return next(c for c in jacobian_fixed_classes() if key in c)

def monodromy_orbits() -> List[List[Weierstrass_divisor_class]]:
    """S6通过重新标号作用在16个不动类上的轨道

    由对换(i j)生成. 恰有两条轨道: 6个3p_i类与10个不同三元组类, r在每条轨道上为常数.
    """
    classes = jacobian_fixed_classes()
    index = {m: n for n, c in enumerate(classes) for m in c.members}
    parent = list(range(len(classes)))

    def find(n: int) -> int:
        while parent[n] != n:
            n = parent[n]
        return n

    for i, j in itertools.combinations(WEIERSTRASS_POINTS, 2):
        swap = {i: j, j: i}
        for n, c in enumerate(classes):
            image = tuple(sorted(swap.get(p, p) for p in c.representative))
            a, b = find(n), find(index[image])
            if a != b:
                parent[max(a, b)] = min(a, b)

    orbits: Dict[int, List[Weierstrass_divisor_class]] = {}
    for n, c in enumerate(classes):
        orbits.setdefault(find(n), []).append(c)
    return sorted(orbits.values(), key=len)

def r_partition() -> Dict[int, int]:
    """按r值统计类的个数"""
    counts: Dict[int, int] = {}
    for c in jacobian_fixed_classes():
        counts[r_invariant(c)] = counts.get(r_invariant(c), 0) + 1
    return counts
