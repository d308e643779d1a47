"""辅助函数, 主要与JSON导出及枚举上限的配置有关"""

import os

from typing import Optional, Union
from typing import List, Dict, Any

from sympy import Rational, Integer

JsonExportable = Union[int, str, bool, None, List["JsonExportable"], Dict[str, "JsonExportable"]]

DEFAULT_BOUND = 10
"""穷举验证(如impossibility检查)默认的坐标上限"""
BOUND_ENV_VAR = "LATTICEWORKS_BOUND"
"""可覆盖默认坐标上限的环境变量名"""

ENUMERATION_CAP = 4096
"""枚举迷向子群时判别群阶数的上限"""
FORM_ISO_CAP = 256
"""有限二次型同构暴力检验时判别群阶数的上限"""

def enumeration_bound(override: Optional[int] = None) -> int:
    """获取穷举所用的坐标上限

    优先级: 显式传入的`override` > 环境变量`LATTICEWORKS_BOUND` > `DEFAULT_BOUND`

    Raises:
        `ValueError`: 环境变量的值不是正整数
    """
    if override is not None:
        return override
    raw = os.environ.get(BOUND_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BOUND_ENV_VAR} must be a positive integer, got '{raw}'") from None
    if value <= 0:
        raise ValueError(f"{BOUND_ENV_VAR} must be a positive integer, got '{raw}'")
    return value

def render_rational(value: Any) -> JsonExportable:
    """将有理数渲染为规范形式: 整数原样输出, 否则为约分后分母为正的"p/q"字符串"""
    value = Rational(value)
    if value.q == 1:
        return int(value.p)
    return f"{value.p}/{value.q}"

def to_json(value: Any) -> JsonExportable:
    """递归地将值转换为可JSON序列化的数据

    若有复杂类型, 则尝试调用其`export_json`方法进行导出
    """
    if hasattr(value, "export_json"):
        return to_json(value.export_json())
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Integer)):
        return int(value)
    if isinstance(value, Rational):
        return render_rational(value)
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_json(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items.sort(key=repr)
        return items
    if hasattr(value, "tolist"):  # sympy矩阵
        return [[to_json(x) for x in row] for row in value.tolist()]
    raise TypeError("Unsupported type for JSON export: %s" % type(value))

def export_attr_to_json(obj: object, attrs: List[str]) -> Dict[str, JsonExportable]:
    """将对象属性导出为json数据

    若有复杂类型, 则尝试调用其`export_json`方法进行导出
    """
    json_data: Dict[str, JsonExportable] = {}
    for attr in attrs:
        json_data[attr] = to_json(getattr(obj, attr))
    return json_data
