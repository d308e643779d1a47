"""命令行入口: 以报告形式输出各项计算与验证

退出码: 0 全部通过, 1 验证失败或数学错误, 2 用法或文档格式错误.
"""

import re
import sys
import json
import logging
import argparse

from enum import Enum
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from . import linalg_util as la
from .disc_form import discriminant_group
from .exceptions import DocumentError
from .fixed_locus import jacobian_fixed_classes, monodromy_orbits, r_partition
from .involution import k3_two_lattice
from .lattice import Lattice, Lattice_vector, make_U, make_E8, rescale, divisibility, orthogonal_complement
from .mukai import Mukai_vector, algebraic_mukai_lattice, full_mukai_lattice, ogrady_invariant_lattice
from .mukai import beauville_invariants, moduli_dimension, mukai_square
from .report import Report, dumps_all
from .represent import represent, isometry_search, search_is_complete
from .verification import EXPECTED_TABLE, EXPECTED_WALLS, run_all
from .walls import CLASS_TABLE_HEADER, classification_table, walls_and_chambers

logger = logging.getLogger(__name__)

@dataclass
class Lattice_meta:
    """内置格的元数据"""

    name: str
    """名称"""
    builder: Callable[[], Lattice]
    """构造函数"""

class Named_lattice(Enum):
    """可在命令行中按名称引用的内置格"""

    U = Lattice_meta("U", make_U)
    U2 = Lattice_meta("U2", lambda: rescale(make_U(), 2))
    E8 = Lattice_meta("E8", make_E8)
    Lambda = Lattice_meta("Lambda", k3_two_lattice)
    Mukai24 = Lattice_meta("Mukai24", full_mukai_lattice)
    AlgMukai = Lattice_meta("AlgMukai", algebraic_mukai_lattice)

    @staticmethod
    def from_name(name: str) -> "Named_lattice":
        """根据名称获取内置格, 也接受"Λ"作为Lambda的别名

        Raises:
            `DocumentError`: 名称不存在
        """
        if name == "Λ":
            name = "Lambda"
        for item in Named_lattice:
            if item.value.name == name:
                return item
        raise DocumentError("Unknown lattice name: %s" % name)

NAMED_VECTOR_PATTERN = re.compile(r"([+-]?)\s*(\d*)\s*(e1|f1|e2|f2|e3|f3|delta|δ)")

def load_lattice(args: argparse.Namespace, gram_attr: str = "gram") -> Lattice:
    """从 --gram (JSON矩阵或内置格名称) 或 --file (格文档) 中读取格

    Raises:
        `DocumentError`: 无法解析
    """
    text = getattr(args, gram_attr, None)
    if gram_attr == "gram" and getattr(args, "file", None):
        try:
            with open(args.file, "r", encoding="utf-8") as f:
                document = json.load(f)
        except (OSError, json.JSONDecodeError) as err:
            raise DocumentError("Cannot read lattice document: %s" % err) from err
        return Lattice.import_json(document)
    if text is None:
        raise DocumentError("A lattice is required (--gram or --file)")
    if text.lstrip().startswith("["):
        try:
            gram = json.loads(text)
        except json.JSONDecodeError as err:
            raise DocumentError("Malformed Gram matrix: %s" % err) from err
        return Lattice.import_json({"gram": gram})
    return Named_lattice.from_name(text.strip()).value.builder()

def parse_vector(text: str, L: Lattice) -> Lattice_vector:
    """解析向量: JSON整数数组, 或Λ中如"2e1+2f1+3delta"的命名组合

    Raises:
        `DocumentError`: 无法解析或长度不符
    """
    text = text.strip()
    if text.startswith("["):
        try:
            coords = json.loads(text)
        except json.JSONDecodeError as err:
            raise DocumentError("Malformed vector: %s" % err) from err
        if not isinstance(coords, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in coords):
            raise DocumentError("Vector must be a JSON array of integers")
        if len(coords) != L.rank:
            raise DocumentError("Vector of length %d does not fit rank %d" % (len(coords), L.rank))
        return Lattice_vector(L, coords)

    Lam = k3_two_lattice()
    if L != Lam:
        raise DocumentError("Named vectors are only available in Lambda")
    compact = text.replace(" ", "")
    terms = NAMED_VECTOR_PATTERN.findall(compact)
    if len(terms) == 0 or "".join("".join(t) for t in terms) != compact:
        raise DocumentError("Cannot parse vector '%s'" % text)
    combo = {}
    for sign, count, name in terms:
        name = "delta" if name == "δ" else name
        value = int(count) if count else 1
        combo[name] = combo.get(name, 0) + (-value if sign == "-" else value)
    return Lam.named(**combo)

def parse_class(value: str) -> int:
    J = int(value)
    if J not in (1, 2, 3, 4):
        raise argparse.ArgumentTypeError("class must be 1, 2, 3 or 4")
    return J

def cmd_classify(args: argparse.Namespace) -> List[Report]:
    rows = classification_table()
    observed = [(r.number, r.invariant_name.value, r.g_divisibility, r.fibre_size) for r in rows]
    return [Report("classify", observed == EXPECTED_TABLE, {"rows": rows},
                   table=rows, table_header=CLASS_TABLE_HEADER)]

def cmd_lattice(args: argparse.Namespace) -> List[Report]:
    L = load_lattice(args)
    action = args.action
    if action == "snf":
        result = la.snf(L.gram)
        return [Report("lattice snf", result.check(L.gram), {"decomposition": result, "diagonal": result.diagonal})]
    if action == "disc":
        A = discriminant_group(L)
        return [Report("lattice disc", A.order == abs(L.det), A)]
    if action == "det":
        return [Report("lattice det", True, {"det": L.det})]
    if action == "sig":
        return [Report("lattice sig", True, {"signature": list(L.signature)})]
    if action == "complement":
        vectors = [parse_vector(text, L) for text in args.vector or []]
        C = orthogonal_complement(L, vectors)
        return [Report("lattice complement", C.primitive, C)]
    if action == "div":
        v = parse_vector(args.vector[0], L)
        return [Report("lattice div", True, {"vector": v, "divisibility": divisibility(v)})]
    if action == "represent":
        solutions = represent(L, args.n, args.bound)
        return [Report("lattice represent", True, {"n": args.n, "solutions": solutions,
                                                   "complete": search_is_complete(L)})]
    if action == "isometry":
        other = load_lattice(args, "other")
        T = isometry_search(L, other, args.bound)
        return [Report("lattice isometry", True, {"found": T is not None, "matrix": T,
                                                  "decisive": search_is_complete(L)})]
    raise DocumentError("Unknown lattice action %s" % action)

def cmd_mukai(args: argparse.Namespace) -> List[Report]:
    v = Mukai_vector(args.r, args.a, args.s)
    result = ogrady_invariant_lattice(v)
    return [Report("mukai", True, {"result": result, "moduli_dimension": moduli_dimension(v),
                                   "square": mukai_square(v)})]

def cmd_beauville(args: argparse.Namespace) -> List[Report]:
    return [Report("beauville", True, beauville_invariants(args.t))]

def cmd_fixed_locus(args: argparse.Namespace) -> List[Report]:
    classes = jacobian_fixed_classes()
    orbits = monodromy_orbits()
    partition = r_partition()
    return [Report("fixed-locus", len(classes) == 16 and partition == {1: 10, 2: 6},
                   {"count": len(classes), "classes": classes, "r_partition": partition,
                    "orbit_sizes": [len(o) for o in orbits]})]

def cmd_fibre(args: argparse.Namespace) -> List[Report]:
    data = walls_and_chambers(args.J)
    return [Report("fibre", data.counts == EXPECTED_WALLS[args.J],
                   {"class": args.J, "walls": list(data.counts), "fibre_size": data.chamber_count})]

def cmd_walls(args: argparse.Namespace) -> List[Report]:
    data = walls_and_chambers(args.J)
    return [Report("walls", data.counts == EXPECTED_WALLS[args.J], data)]

def cmd_verify_all(args: argparse.Namespace) -> List[Report]:
    return run_all(args.bound, args.samples)

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="以规范JSON输出报告")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v输出INFO日志, -vv输出DEBUG日志")

    parser = argparse.ArgumentParser(prog="pyLatticeWorks", description="偶格与K3^[2]型对合的精确计算工具")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="重现四类对合的分类表")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("lattice", help="对任意偶格进行计算")
    actions = p.add_subparsers(dest="action", required=True)
    for name in ("snf", "disc", "complement", "div", "represent", "isometry", "sig", "det"):
        q = actions.add_parser(name, parents=[common])
        q.add_argument("--gram", help="Gram矩阵(JSON)或内置格名称")
        q.add_argument("--file", help="格文档路径")
        q.set_defaults(func=cmd_lattice)
        if name in ("complement", "div"):
            q.add_argument("--vector", action="append", required=(name == "div"), help="向量(JSON数组或Λ中的命名组合)")
        if name in ("represent", "isometry"):
            q.add_argument("--bound", type=int, default=None, help="穷举的坐标上限")
        if name == "represent":
            q.add_argument("-n", type=int, required=True, help="目标平方值")
        if name == "isometry":
            q.add_argument("--other", required=True, help="另一个格的Gram矩阵或名称")

    p = sub.add_parser("mukai", parents=[common], help="Mukai向量v的不变格 (v^⊥)^φ")
    p.add_argument("r", type=int)
    p.add_argument("a", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(func=cmd_mukai)

    p = sub.add_parser("beauville", parents=[common], help="迹为t时不动曲面的不变量")
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_beauville)

    p = sub.add_parser("fixed-locus", parents=[common], help="J³D中的16个不动类")
    p.set_defaults(func=cmd_fixed_locus)

    for name, func in (("fibre", cmd_fibre), ("walls", cmd_walls)):
        p = sub.add_parser(name, parents=[common], help="第J类的墙与房间")
        p.add_argument("J", type=parse_class)
        p.set_defaults(func=func)

    p = sub.add_parser("verify-all", parents=[common], help="运行全部验收检查")
    p.add_argument("--bound", type=int, default=None, help="不可能性检查的坐标上限")
    p.add_argument("--samples", type=int, default=1000, help="随机SNF检查的样本数")
    p.set_defaults(func=cmd_verify_all)
    return parser

def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else (logging.INFO if verbosity == 1 else logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    configure_logging(args.verbose)

    try:
        reports = args.func(args)
    except DocumentError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, LookupError, AssertionError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 1

    if args.json:
        print(reports[0].dumps() if len(reports) == 1 else dumps_all(reports))
    else:
        print("\n".join(r.render_text() for r in reports))
    return 0 if all(r.passed for r in reports) else 1
