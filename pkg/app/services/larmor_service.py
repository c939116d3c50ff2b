"""
拉莫尔振荡命令服务
"""

from typing import Optional, Tuple

import numpy as np

from app.config import Config
from app.models.run_config import RunConfig
from app.services.diagnostics import extract_period, larmor_period, larmor_signal
from app.services.writer import get_writer
from app.services.writer.csv_writer import CsvTable
from app.util.errors import NoPrecessionError, OamTiltError, OutputError
from app.util.logger import get_logger

logger = get_logger(__name__)


class LarmorService:
    """拉莫尔振荡服务类"""

    def series(self, cfg: RunConfig) -> Tuple[np.ndarray, np.ndarray]:
        """
        时间序列（t 以 µs 计）与归一化读出强度

        Returns:
            (t_us, intensity)
        """
        cfg.validate()
        t_s = np.array(cfg.time_grid_s())
        intensity = larmor_signal(cfg.larmor(), t_s)
        return t_s * 1e6, intensity

    def run(self, cfg: RunConfig) -> Tuple[Optional[str], Optional[OamTiltError]]:
        """
        larmor 命令：写出 t_us, intensity 两列，并打印提取的周期

        Returns:
            (输出摘要, 异常) - 成功时异常为 None
        """
        try:
            t_us, intensity = self.series(cfg)
            larmor = cfg.larmor()
        except OamTiltError as e:
            logger.error(f"拉莫尔计算失败: {e.message}")
            return None, e

        comments = [
            f"B_gauss={larmor.B!r} g_factor={larmor.g_factor!r} delta_m={larmor.delta_m} "
            f"gamma_per_us={cfg.gamma!r}"
        ]
        table = CsvTable(columns=("t_us", "intensity"),
                         rows=[(float(t), float(i)) for t, i in zip(t_us, intensity)],
                         comments=comments)
        writer = get_writer("csv")
        path = cfg.output or writer.default_path(Config.OUTPUT_DIR, "larmor")
        written, error = writer.emit(path, table)
        if error:
            return None, OutputError(path, error)

        lines = [written.rstrip("\r\n")] if path == "-" else [f"wrote {written}"]
        if larmor.B == 0:
            lines.append("oscillation: none (B = 0)")
            return "\n".join(lines), None
        model = larmor_period(larmor) * 1e6
        try:
            lines.append(f"period_us={extract_period(t_us, intensity):.4f} model_period_us={model:.4f}")
        except NoPrecessionError:
            lines.append(f"period_us=undetermined (fewer than two maxima) model_period_us={model:.4f}")
        return "\n".join(lines), None


larmor_service = LarmorService()
