"""验证结果报告, 以规范JSON输出"""

import json

from typing import Any, Dict, List, Optional

from . import util
from .exceptions import VerificationFailed

PASS = "pass"
FAIL = "fail"

class Report:
    """一项检查的结果"""

    check: str
    """检查名称"""
    status: str
    """取值为pass或fail"""
    data: Any
    """结构化的结果数据"""
    citations: List[str]
    """该检查所验证的论断"""
    table: List[Any]
    """文本输出时逐行以str()打印的表格行; 若与data中某个值为同一对象, 则不再重复打印该值"""
    table_header: Optional[str]
    """表头"""

    def __init__(self, check: str, passed: bool, data: Any = None, citations: Optional[List[str]] = None,
                 table: Optional[List[Any]] = None, table_header: Optional[str] = None):
        self.check = check
        self.status = PASS if passed else FAIL
        self.data = data
        self.citations = list(citations) if citations else []
        self.table = table if table is not None else []
        self.table_header = table_header

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def raise_for_status(self) -> None:
        """检查未通过时抛出异常

        Raises:
            `VerificationFailed`: status为"fail"
        """
        if not self.passed:
            raise VerificationFailed("check '%s' failed" % self.check)

    def export_json(self) -> Dict[str, util.JsonExportable]:
        return {
            "check": self.check,
            "status": self.status,
            "data": util.to_json(self.data),
            "citations": list(self.citations),
        }

    def dumps(self, indent: Optional[int] = None) -> str:
        """规范化的JSON字符串: 键排序, 保留非ASCII字符, 有理数写作p/q形式"""
        return json.dumps(self.export_json(), sort_keys=True, ensure_ascii=False, indent=indent)

    def render_text(self) -> str:
        """供终端阅读的简单文本形式"""
        lines = ["[%s] %s" % (self.status, self.check)]
        if self.table_header:
            lines.append("  " + self.table_header)
        lines.extend("  " + str(row) for row in self.table)
        data = util.to_json(self.data)
        if isinstance(data, dict):
            tabled = {str(k) for k, v in self.data.items() if self.table and v is self.table}
            for key in sorted(set(data) - tabled):
                lines.append("  %s: %s" % (key, json.dumps(data[key], ensure_ascii=False)))
        elif isinstance(data, list):
            for item in data:
                lines.append("  " + json.dumps(item, ensure_ascii=False, sort_keys=True))
        elif data is not None:
            lines.append("  " + json.dumps(data, ensure_ascii=False))
        for claim in self.citations:
            lines.append("  # " + claim)
        return "\n".join(lines)

    def __repr__(self) -> str:
        return "Report(check=%r, status=%r)" % (self.check, self.status)

def dumps_all(reports: List[Report]) -> str:
    """多个报告组成的JSON数组"""
    return json.dumps([r.export_json() for r in reports], sort_keys=True, ensure_ascii=False)
