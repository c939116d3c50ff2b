"""
OAM 模谱服务

在 LG_{p′=0}^{ℓ′} 基上分解读出平面上的场，归一化、串扰统计与扫描
"""

from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from app.models.beam import BeamParams
from app.models.field import ComplexField, GridSpec
from app.models.spectrum import EllRange, ModeSpectrum, Normalization, SweepResult
from app.models.tilt import RetrievalConfig, TiltGeometry
from app.services.decomposer import get_decomposer
from app.services.decomposer.base import as_ell_range
from app.services.field_core import total_power
from app.services.sweep_processor import SweepProcessor
from app.services.tilt_project import effective_waist, synthesize_retrieved_field
from app.util.errors import ConfigError, DegenerateSpectrumError, DomainError, QuadratureInconsistencyError
from app.util.logger import get_logger
from app.util.presets import TILT_SWEEP, TOLERANCES

logger = get_logger(__name__)

RangeLike = Union[EllRange, Tuple[int, int]]


def decompose(field: ComplexField, basis_waist: float, lrange: RangeLike, **options) -> ModeSpectrum:
    """
    c_ℓ′ = ⟨LG_{p′=0}^{ℓ′}(basis_waist), field⟩，逐模式二维投影求积

    Args:
        field: 读出平面上的场
        basis_waist: 基模束腰（米）
        lrange: ℓ′ 闭区间（|ℓ′| ≤ 24）
        **options: n_r, n_phi, interp_order

    Raises:
        DomainError: 超出 ℓ′ 上限
        AliasingRiskError: 网格分辨不了最高方位阶
    """
    return get_decomposer('projection', **options).decompose(field, basis_waist, lrange)


def decompose_fourier(field: ComplexField, basis_waist: float, lrange: RangeLike, **options) -> ModeSpectrum:
    """与 decompose 数学等价：方位角 FFT 后做径向积分"""
    return get_decomposer('fourier', **options).decompose(field, basis_waist, lrange)


def decompose_radial(field: ComplexField, basis_waist: float, lrange: RangeLike,
                     p_max: int, **options) -> Dict[Tuple[int, int], complex]:
    """
    p′ 分辨的分解 {(ℓ′, p′): c}

    Raises:
        DomainError: p_max 为负
    """
    if p_max < 0:
        raise DomainError(f"p_max must be non-negative, got {p_max}")
    decomposer = get_decomposer('fourier', **options)
    ell_range = as_ell_range(lrange)
    values, quad = decomposer.prepare(field, basis_waist, ell_range)
    result = {}
    for p in range(p_max + 1):
        coefficients = decomposer.project(values, quad, basis_waist, ell_range.values(), p=p)
        for ell, c in zip(ell_range.values(), coefficients):
            result[(ell, p)] = complex(c)
    return result


def captured_power_fraction(field: ComplexField, basis_waist: float, lrange: RangeLike,
                            p_max: int = 0, **options) -> float:
    """
    投影功率 Σ|c_{ℓ′,p′}|² 占场总功率的比例（贝塞尔不等式保证 ≤ 1）

    Raises:
        DegenerateSpectrumError: 场功率为零
    """
    power = total_power(field)
    if power <= 0:
        raise DegenerateSpectrumError("degenerate spectrum: field has zero power")
    coefficients = decompose_radial(field, basis_waist, lrange, p_max, **options)
    captured = sum(abs(c) ** 2 for c in coefficients.values())
    return captured / power


def normalize(spec: ModeSpectrum, mode: Union[Normalization, str]) -> ModeSpectrum:
    """
    归一化模谱

    max_amplitude 除以 max|c|，unit_power 除以 √(Σ|c|²)，raw 不变。

    Raises:
        DegenerateSpectrumError: 全零模谱
    """
    mode = Normalization(mode)
    if mode is Normalization.RAW:
        return spec.with_coefficients(spec.coefficients, mode)
    amplitudes = spec.amplitudes()
    if not np.any(amplitudes > 0):
        raise DegenerateSpectrumError()
    if mode is Normalization.MAX_AMPLITUDE:
        scale = float(np.max(amplitudes))
    else:
        scale = float(np.sqrt(np.sum(amplitudes ** 2)))
    coefficients = spec.coefficients / scale
    if mode is Normalization.MAX_AMPLITUDE:
        # 最大幅值严格等于 1
        k = int(np.argmax(amplitudes))
        coefficients = coefficients.copy()
        coefficients[k] = coefficients[k] / abs(coefficients[k])
    return spec.with_coefficients(coefficients, mode)


def crosstalk(spec: ModeSpectrum, ell: int) -> float:
    """
    ℓ 以外分量的功率占比 Σ_{ℓ′≠ℓ}|c|² / Σ|c|²

    Raises:
        DomainError: ℓ 不在模谱区间内
        DegenerateSpectrumError: 全零模谱
    """
    if ell not in spec.ell_range:
        raise DomainError(f"l={ell} is outside the spectrum range {spec.ell_range.lo}..{spec.ell_range.hi}")
    total = spec.total_power()
    if total <= 0:
        raise DegenerateSpectrumError()
    return float((total - abs(spec[ell]) ** 2) / total)


def compare_spectra(a: ModeSpectrum, b: ModeSpectrum) -> float:
    """
    两个模谱的最大偏差 max|a−b| / max|a|

    Raises:
        ConfigError: ℓ′ 区间不同
        DegenerateSpectrumError: a 全零
    """
    if a.ell_range != b.ell_range:
        raise ConfigError(f"cannot compare spectra over {a.ell_range!r} and {b.ell_range!r}")
    scale = float(np.max(a.amplitudes()))
    if scale <= 0:
        raise DegenerateSpectrumError()
    return float(np.max(np.abs(a.coefficients - b.coefficients)) / scale)


def cross_checked_decompose(field: ComplexField, basis_waist: float, lrange: RangeLike,
                            tolerance: Optional[float] = None, **options) -> Tuple[ModeSpectrum, float]:
    """
    两条求积路径都算一遍并比较

    Returns:
        (projection 路径的模谱, 相对偏差)

    Raises:
        QuadratureInconsistencyError: 偏差超过 tolerance
    """
    tolerance = TOLERANCES["oracle"] if tolerance is None else tolerance
    direct = decompose(field, basis_waist, lrange, **options)
    oracle = decompose_fourier(field, basis_waist, lrange, **options)
    deviation = compare_spectra(direct, oracle)
    if deviation > tolerance:
        k = int(np.argmax(np.abs(direct.coefficients - oracle.coefficients)))
        ell = direct.ells[k]
        raise QuadratureInconsistencyError(
            deviation, tolerance,
            f"l'={ell}: projection {direct.coefficients[k]:.6e}, fourier {oracle.coefficients[k]:.6e}",
        )
    return direct, deviation


def retrieval_grid(w0: float, waist_ratio: float, n: Optional[int] = None) -> GridSpec:
    """读出场默认网格：以 W、W′ 中较大束腰为准"""
    return GridSpec.for_waist(max(w0, waist_ratio * w0), n=n)


def sweep_spectra(w_beam: BeamParams, cfg: Optional[RetrievalConfig] = None,
                  thetas_deg: Optional[Sequence[float]] = None, ells: Optional[Iterable[int]] = None,
                  grid: Optional[GridSpec] = None, basis_waist: Optional[float] = None,
                  max_workers: Optional[int] = None, ell_below: Optional[int] = None,
                  ell_above: Optional[int] = None, cross_check: bool = True, **options) -> list:
    """
    倾斜读出的 OAM 模谱扫描（默认 ℓ ∈ 0..3 × θ ∈ {5,10,15,20}°）

    每个点报告区间 [ℓ−ell_below, ℓ+ell_above]（默认 [ℓ−4, ℓ+10]），基模束腰默认 w_eff。
    cross_check 为 False 时只走投影路径，oracle_deviation 为 NaN。

    Returns:
        List[SweepResult]: 按 (θ, ℓ) 顺序排列，模谱为 raw 归一化
    """
    cfg = cfg or RetrievalConfig()
    thetas_deg = list(thetas_deg) if thetas_deg is not None else [p["theta_deg"] for p in TILT_SWEEP["points"]]
    ells = list(ells) if ells is not None else list(TILT_SWEEP["ells"])
    grid = grid or retrieval_grid(w_beam.w0, cfg.waist_ratio)
    basis_waist = basis_waist or effective_waist(w_beam.w0, cfg.waist_ratio)
    below = TILT_SWEEP["ell_below"] if ell_below is None else ell_below
    above = TILT_SWEEP["ell_above"] if ell_above is None else ell_above

    def evaluate(point):
        theta_deg, ell = point
        field = synthesize_retrieved_field(ell, w_beam, TiltGeometry.from_degrees(theta_deg), cfg, grid)
        lrange = EllRange.around(ell, below, above)
        if cross_check:
            spectrum, deviation = cross_checked_decompose(field, basis_waist, lrange, **options)
        else:
            spectrum, deviation = decompose(field, basis_waist, lrange, **options), float("nan")
        return SweepResult(theta_deg=theta_deg, ell_in=ell, spectrum=spectrum, oracle_deviation=deviation)

    points = [(theta, ell) for theta in thetas_deg for ell in ells]
    return SweepProcessor(max_workers).run(evaluate, points, label="OAM spectrum sweep")
