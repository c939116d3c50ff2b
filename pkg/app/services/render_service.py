"""
图像渲染命令服务

强度、相位、像散透镜图样与螺旋干涉图，写出 16 位 PGM
"""

from typing import Optional, Tuple

import numpy as np

from app.config import Config
from app.models.diagnostics import IntensityMap
from app.models.field import ComplexField, GridSpec
from app.models.run_config import RunConfig
from app.services.diagnostics import (
    astigmatic_transform,
    calibrate_lens,
    count_fringe_minima,
    count_spiral_arms,
    diagnostic_grid,
    observe_counterpropagating,
    spiral_handedness,
    spiral_interferogram,
)
from app.services.field_core import winding_number
from app.services.lg_basis import ring_radius, sample_lg
from app.services.tilt_project import effective_waist, synthesize_retrieved_field
from app.services.writer import get_writer
from app.services.writer.pgm_writer import quantize_intensity, quantize_phase
from app.util.errors import ConfigError, NumericalError, OamTiltError, OutputError
from app.util.logger import get_logger

logger = get_logger(__name__)


class RenderService:
    """图像渲染服务类"""

    def source_waist(self, cfg: RunConfig) -> float:
        """被观察光束的束腰：输入光为 w0，读出光为 w_eff"""
        w0 = cfg.beam().w0
        return w0 if cfg.source == "input" else effective_waist(w0, cfg.waist_ratio)

    def source_field(self, cfg: RunConfig, grid: GridSpec) -> ComplexField:
        """在给定网格上构建输入光或读出光"""
        if cfg.source == "input":
            return sample_lg((cfg.ell_in, 0), cfg.beam(), grid)
        return synthesize_retrieved_field(cfg.ell_in, cfg.beam(), cfg.geometry(), cfg.retrieval(), grid)

    def _field_grid(self, cfg: RunConfig) -> GridSpec:
        w0 = cfg.beam().w0
        largest = w0 if cfg.source == "input" else max(w0, cfg.waist_ratio * w0)
        return GridSpec.for_waist(largest, n=cfg.grid_n, factor=cfg.extent_factor)

    def _describe_charge(self, field: ComplexField, waist: float, ell: int) -> str:
        if ell == 0:
            return "winding=0 (gaussian)"
        try:
            return f"winding={winding_number(field, ring_radius(ell, waist))}"
        except NumericalError as e:
            return f"winding=undetermined ({e.message})"

    def render(self, cfg: RunConfig) -> Tuple[np.ndarray, str]:
        """
        计算图像与诊断摘要（异常原样抛出）

        Returns:
            (自上而下的 uint16 图像, 摘要)
        """
        cfg.validate()
        waist = self.source_waist(cfg)

        if cfg.what == "spiral":
            if cfg.source != "input":
                raise ConfigError("spiral render uses the input beam; set source = input")
            reference_waist = cfg.reference_waist_factor * waist
            grid = GridSpec.for_waist(max(waist, reference_waist), n=cfg.grid_n, factor=cfg.extent_factor)
            intensity = spiral_interferogram(cfg.ell_in, cfg.beam(), cfg.reference_curvature, grid=grid,
                                             reference_waist=reference_waist)
            arms = count_spiral_arms(intensity)
            summary = f"arms={arms}"
            if arms:
                summary += f" handedness={spiral_handedness(intensity):+d}"
            return quantize_intensity(intensity), summary

        if cfg.what == "tilted_lens":
            grid = diagnostic_grid(waist, n=cfg.grid_n)
            field = self.source_field(cfg, grid)
            if cfg.source == "retrieved":
                field = observe_counterpropagating(field)
            lens = cfg.lens() or calibrate_lens(waist, cfg.beam().wavelength)
            out = astigmatic_transform(field, lens, cfg.beam().wavelength)
            intensity = IntensityMap.of(out)
            try:
                minima, orientation = count_fringe_minima(intensity)
                summary = f"minima={minima} orientation={'+' if orientation > 0 else '-'}"
            except NumericalError as e:
                summary = f"minima=undetermined ({e.message})"
            return quantize_intensity(intensity), summary

        grid = self._field_grid(cfg)
        field = self.source_field(cfg, grid)
        summary = self._describe_charge(field, waist, cfg.ell_in)
        if cfg.what == "phase":
            return quantize_phase(field.phase()), summary
        return quantize_intensity(IntensityMap.of(field)), summary

    def run(self, cfg: RunConfig) -> Tuple[Optional[str], Optional[OamTiltError]]:
        """
        render 命令

        Returns:
            (输出摘要, 异常) - 成功时异常为 None
        """
        if cfg.output == "-":
            return None, ConfigError("render writes binary PGM data and needs a file path, not '-'")
        try:
            image, summary = self.render(cfg)
        except OamTiltError as e:
            logger.error(f"渲染失败: {e.message}")
            return None, e

        writer = get_writer("pgm")
        path = cfg.output or writer.default_path(Config.OUTPUT_DIR, f"{cfg.what}_l{cfg.ell_in}")
        written, error = writer.write(path, image)
        if error:
            return None, OutputError(path, error)
        return f"wrote {written}\n{cfg.what}: {summary}", None


render_service = RenderService()
