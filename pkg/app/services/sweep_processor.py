"""
参数扫描处理服务

负责 (ℓ, θ) 扫描点的并行求值调度
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from app.config import Config
from app.util.logger import get_logger

logger = get_logger(__name__)

P = TypeVar('P')
R = TypeVar('R')


class SweepProcessor:
    """扫描处理服务类

    在线程池中对每个扫描点调用同一个纯函数。结果按输入顺序返回，
    与线程数无关；任一扫描点抛出的异常在 run 中原样抛出。
    """

    def __init__(self, max_workers: Optional[int] = None):
        """
        初始化扫描处理器

        Args:
            max_workers: 最大工作线程数，None 时读取 OAMTILT_THREADS（0 = CPU 核数）
        """
        self.max_workers = max_workers or Config.resolve_threads()
        logger.debug(f"扫描处理器初始化完成，最大工作线程数: {self.max_workers}")

    def run(self, task: Callable[[P], R], points: Iterable[P], label: str = "sweep") -> List[R]:
        """
        对所有扫描点求值

        Args:
            task: 单点计算函数
            points: 扫描点
            label: 日志中的任务名

        Returns:
            List: 与 points 顺序一致的结果
        """
        points = list(points)
        logger.info(f"{label}: {len(points)} 个扫描点，线程数 {self.max_workers}")
        if self.max_workers == 1 or len(points) <= 1:
            results = [task(point) for point in points]
        else:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                results = list(executor.map(task, points))
        logger.info(f"{label}: 完成")
        return results
