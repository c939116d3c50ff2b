"""
CSV 写入器

逗号分隔、首行表头、"." 小数点、CRLF 行尾；浮点数用 repr 输出（最短可回读表示，
与 locale 无关）。表头之前可以有 "# " 开头的注释行。
"""

import csv
import io
from dataclasses import dataclass, field
from typing import Any, List, Sequence, Tuple

from app.services.writer.base import BaseWriter


@dataclass(frozen=True)
class CsvTable:
    """待写出的表格"""

    columns: Tuple[str, ...]
    rows: Sequence[Sequence[Any]]
    comments: List[str] = field(default_factory=list)


def format_cell(value: Any) -> str:
    if hasattr(value, "item"):
        # numpy 标量（np.float64 也是 float 的子类）
        return format_cell(value.item())
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


class CsvWriter(BaseWriter):
    """CSV 写入器"""

    extension = "csv"

    def encode(self, payload: CsvTable) -> bytes:
        buffer = io.StringIO(newline='')
        for comment in payload.comments:
            buffer.write(f"# {comment}\r\n")
        writer = csv.writer(buffer, lineterminator='\r\n')
        writer.writerow(payload.columns)
        for row in payload.rows:
            writer.writerow([format_cell(v) for v in row])
        return buffer.getvalue().encode('utf-8')


def read_csv(text: str) -> Tuple[List[str], List[List[str]], List[str]]:
    """
    读取本写入器产生的 CSV

    Returns:
        (表头, 数据行, 注释行)
    """
    lines = text.splitlines()
    comments = [line[2:] for line in lines if line.startswith('# ')]
    body = [line for line in lines if not line.startswith('#')]
    rows = list(csv.reader(body))
    return rows[0], rows[1:], comments
