"""
光学诊断服务

三种实验诊断的数值模拟：
- 像散（倾斜）透镜：LG_ℓ 变为旋转 45° 的 HG_{|ℓ|,0}，暗纹数为 |ℓ|，取向随 ℓ 符号翻转
- 螺旋干涉：LG 与曲率不同的高斯参考光干涉，旋臂数为 |ℓ|
- 拉莫尔进动：磁场下存储光栅的标量振荡
"""

import math
from typing import Optional, Tuple

import numpy as np
from scipy import ndimage
from scipy.constants import physical_constants
from scipy.signal import find_peaks

from app.config import Config
from app.models.beam import BeamParams, LGIndex
from app.models.diagnostics import AstigmaticLens, IntensityMap, LarmorConfig
from app.models.field import ComplexField, GridSpec
from app.services.lg_basis import lg_amplitude
from app.util.errors import (
    DegenerateFringesError,
    DomainError,
    FresnelAliasingError,
    NoPatternError,
    NoPrecessionError,
)
from app.util.logger import get_logger
from app.util.presets import SPIRAL_PRESET, TILTED_LENS_PRESET

logger = get_logger(__name__)

# 带限之外允许的频谱功率占比
FRESNEL_TAIL_TOLERANCE = 1e-6
# 条纹计数时峰的最小显著度（相对于剖面最大值）
FRINGE_PROMINENCE = 0.05
# 二阶矩各向异性低于该值时视为圆对称图样
ISOTROPY_TOLERANCE = 1e-3
# 方位调制低于环平均强度的该比例时视为无调制
ARM_MODULATION_FLOOR = 1e-3
# 螺旋分析的方位采样数
SPIRAL_N_PHI = 512

# µ_B/h，单位 Hz/G
LARMOR_HZ_PER_GAUSS = physical_constants['Bohr magneton in Hz/T'][0] * 1e-4


# ==================== 像散透镜 ====================

def _wavelength(wavelength: Optional[float]) -> float:
    return wavelength if wavelength is not None else Config.WAVELENGTH_NM * 1e-9


def _inverse_focal(f: float) -> float:
    return 0.0 if math.isinf(f) else 1.0 / f


def calibrate_lens(waist: float, wavelength: Optional[float] = None) -> AstigmaticLens:
    """
    给定入射束腰的模式转换透镜

    x 方向焦距 z_R/2、y 方向不聚焦，传播 z_R 后两方向 Gouy 相位差恰为 π/2，
    出射宽度均为 √2·w，LG_ℓ 变为旋转 45° 的 HG_{|ℓ|,0}。
    """
    if not waist > 0:
        raise DomainError(f"beam waist must be positive, got {waist}")
    z_r = BeamParams(w0=waist, wavelength=_wavelength(wavelength)).rayleigh_range
    return AstigmaticLens(fx=z_r / 2, fy=math.inf, propagation_distance=z_r)


def diagnostic_grid(waist: float, n: Optional[int] = None) -> GridSpec:
    """像散透镜诊断网格：宽度 16 倍束腰"""
    return GridSpec.for_waist(waist, n=n, factor=TILTED_LENS_PRESET["extent_factor"])


def _check_fresnel_sampling(spectrum: np.ndarray, grid: GridSpec, distance: float,
                            wavelength: float) -> None:
    """
    角谱传播的带限检查：带限外的频谱功率占比须低于阈值

    Raises:
        FresnelAliasingError: 频谱超出带限，附带所需的最小采样点数
    """
    power = np.abs(spectrum) ** 2
    total = float(power.sum())
    if total <= 0:
        return
    required = 0
    worst = 0.0
    # 轴 1 为 x（列），轴 0 为 y（行）
    for axis, n, pitch in ((1, grid.nx, grid.dx), (0, grid.ny, grid.dy)):
        extent = n * pitch
        u_lim = 1.0 / (wavelength * math.sqrt((2 * distance / extent) ** 2 + 1))
        freqs = np.abs(np.fft.fftfreq(n, pitch))
        marginal = power.sum(axis=1 - axis) / total
        tail = float(marginal[freqs > u_lim].sum())
        worst = max(worst, tail)
        if tail > FRESNEL_TAIL_TOLERANCE:
            order = np.argsort(freqs)[::-1]
            cumulative = np.cumsum(marginal[order])
            inside = order[cumulative > FRESNEL_TAIL_TOLERANCE]
            f_needed = float(freqs[inside[0]]) if inside.size else float(freqs.max())
            required = max(required, int(math.ceil(2 * wavelength * distance * f_needed / pitch)))
    if required:
        raise FresnelAliasingError(
            f"Fresnel aliasing: {worst:.2e} of the spectral power lies beyond the angular-spectrum band limit "
            f"for distance {distance:.4g} m",
            required_n=required,
        )


def astigmatic_transform(field: ComplexField, lens: AstigmaticLens,
                         wavelength: Optional[float] = None) -> ComplexField:
    """
    像散透镜 + 角谱法自由传播

    透镜相位 exp(-iπ(x²/fx + y²/fy)/λ)，传递函数 exp(i2πd(√(1/λ² − u² − v²) − 1/λ))
    （略去全局相位 e^{ikd}），输出网格与输入相同。

    Args:
        field: 入射场
        lens: 透镜参数
        wavelength: 波长（米），默认 Config.WAVELENGTH_NM

    Raises:
        FresnelAliasingError: 网格不满足采样条件
    """
    lam = _wavelength(wavelength)
    grid = field.grid
    x, y = grid.mesh()
    x = x - grid.origin[0]
    y = y - grid.origin[1]
    lens_phase = np.exp(-1j * math.pi / lam * (x ** 2 * _inverse_focal(lens.fx) + y ** 2 * _inverse_focal(lens.fy)))

    spectrum = np.fft.fft2(field.samples * lens_phase)
    _check_fresnel_sampling(spectrum, grid, lens.propagation_distance, lam)

    u = np.fft.fftfreq(grid.nx, grid.dx)[None, :]
    v = np.fft.fftfreq(grid.ny, grid.dy)[:, None]
    arg = 1.0 / lam ** 2 - u ** 2 - v ** 2
    propagating = arg > 0
    kz = np.sqrt(np.where(propagating, arg, 0.0))
    transfer = np.where(propagating, np.exp(2j * math.pi * lens.propagation_distance * (kz - 1.0 / lam)), 0.0)

    out = np.fft.ifft2(spectrum * transfer)
    logger.debug(f"像散变换: fx={lens.fx:.4g}, fy={lens.fy:.4g}, d={lens.propagation_distance:.4g}")
    return field.with_samples(out)


def observe_counterpropagating(field: ComplexField) -> ComplexField:
    """
    迎着读出光方向观察：x → −x 镜像，表观拓扑荷反号
    """
    return field.with_samples(field.samples[:, ::-1])


def _moments(intensity: IntensityMap) -> Tuple[float, float, np.ndarray]:
    """强度质心与二阶矩协方差矩阵"""
    x, y = intensity.grid.mesh()
    weights = intensity.values
    total = float(weights.sum())
    cx = float((weights * x).sum() / total)
    cy = float((weights * y).sum() / total)
    dx = x - cx
    dy = y - cy
    sxx = float((weights * dx * dx).sum() / total)
    syy = float((weights * dy * dy).sum() / total)
    sxy = float((weights * dx * dy).sum() / total)
    return cx, cy, np.array([[sxx, sxy], [sxy, syy]])


def count_fringe_minima(intensity: IntensityMap) -> Tuple[int, int]:
    """
    统计像散变换图样沿主轴的暗纹数与取向

    主轴取强度二阶矩的长轴；暗纹垂直于主轴。
    取向约定：暗纹沿 +45° 对角线（亮纹主轴在 −45°）记为 +1，反之为 −1。

    Returns:
        (暗纹数, 取向 ±1)

    Raises:
        NoPatternError: 平坦、圆对称或不沿对角线的图样
    """
    values = intensity.values
    peak = intensity.peak
    if peak <= 0 or (peak - float(values.min())) <= 1e-6 * peak:
        raise NoPatternError()

    cx, cy, cov = _moments(intensity)
    eigvals, eigvecs = np.linalg.eigh(cov)
    spread = float(eigvals.sum())
    if (eigvals[1] - eigvals[0]) <= ISOTROPY_TOLERANCE * spread:
        raise NoPatternError("no pattern: intensity is circularly symmetric (no fringe splitting)")
    if abs(cov[0, 1]) <= ISOTROPY_TOLERANCE * spread:
        raise NoPatternError("no pattern: principal axis is not diagonal, orientation undefined")
    orientation = 1 if cov[0, 1] < 0 else -1

    axis = eigvecs[:, 1]
    grid = intensity.grid
    step = min(grid.dx, grid.dy)
    half_length = 0.95 * grid.inscribed_radius
    s = np.arange(-half_length, half_length + step / 2, step)
    row, col = grid.fractional_index(cx + s * axis[0], cy + s * axis[1])
    profile = ndimage.map_coordinates(values, np.array([row, col]), order=1, mode='nearest')

    peaks, _ = find_peaks(profile, prominence=FRINGE_PROMINENCE * float(profile.max()))
    if peaks.size == 0:
        raise NoPatternError("no pattern: no bright lobes along the principal axis")
    minima = int(peaks.size - 1)
    logger.debug(f"条纹计数: lobes={peaks.size}, minima={minima}, orientation={orientation:+d}")
    return minima, orientation


# ==================== 螺旋干涉 ====================

def spiral_interferogram(ell: int, beam: BeamParams, reference_curvature: float,
                         grid: Optional[GridSpec] = None,
                         reference_waist: Optional[float] = None) -> IntensityMap:
    """
    |LG_0^ℓ + G·exp(iπρ²/(λR))|²

    Args:
        ell: 拓扑荷
        beam: LG 光束参数
        reference_curvature: 参考光曲率半径 R（米），可为 ±inf
        grid: 网格，默认宽度 8 倍参考光束腰
        reference_waist: 参考高斯光束腰，默认 2·w0

    Raises:
        DomainError: R = 0
        DegenerateFringesError: R 为无穷且 ℓ ≠ 0
    """
    if reference_curvature == 0:
        raise DomainError("reference curvature radius must be non-zero")
    if math.isinf(reference_curvature) and ell != 0:
        raise DegenerateFringesError()
    reference_waist = reference_waist or SPIRAL_PRESET["reference_waist_factor"] * beam.w0
    grid = grid or GridSpec.for_waist(max(beam.w0, reference_waist))
    grid.check_waist(reference_waist, what="reference")

    rho, phi = grid.polar_mesh()
    vortex = lg_amplitude(LGIndex(ell, 0), beam, rho, phi)
    reference = lg_amplitude(LGIndex(0, 0), beam.with_waist(reference_waist), rho, 0.0)
    curvature = 0.0 if math.isinf(reference_curvature) else 1.0 / reference_curvature
    reference = reference * np.exp(1j * math.pi * rho ** 2 * curvature / beam.wavelength)
    return IntensityMap(grid, np.abs(vortex + reference) ** 2)


def _ring_harmonics(intensity: IntensityMap) -> Tuple[np.ndarray, np.ndarray]:
    """
    同心圆环上的方位 DFT

    Returns:
        (radii, harmonics)，harmonics 形状 (n_rings, SPIRAL_N_PHI//2 + 1)，已除以采样数
    """
    grid = intensity.grid
    pitch = grid.max_pitch
    radii = np.arange(2 * pitch, 0.9 * grid.inscribed_radius, pitch)
    phis = np.arange(SPIRAL_N_PHI) * (2 * math.pi / SPIRAL_N_PHI)
    x = grid.origin[0] + radii[:, None] * np.cos(phis)[None, :]
    y = grid.origin[1] + radii[:, None] * np.sin(phis)[None, :]
    row, col = grid.fractional_index(x, y)
    rings = ndimage.map_coordinates(intensity.values, np.array([row.ravel(), col.ravel()]), order=3, mode='nearest')
    rings = rings.reshape(radii.size, SPIRAL_N_PHI)
    return radii, np.fft.rfft(rings, axis=1) / SPIRAL_N_PHI


def _dominant_ring(harmonics: np.ndarray) -> Tuple[int, int, float]:
    """最大调制环的下标、主导谐波阶数与相对调制深度"""
    modulation = np.abs(harmonics[:, 1:])
    ring = int(np.argmax(modulation.max(axis=1)))
    order = int(np.argmax(modulation[ring])) + 1
    mean = abs(harmonics[ring, 0])
    depth = float(modulation[ring, order - 1] / mean) if mean > 0 else 0.0
    return ring, order, depth


def count_spiral_arms(intensity: IntensityMap) -> int:
    """
    螺旋干涉图的旋臂数：最大调制环上的主导方位谐波阶数

    调制深度低于环平均强度的 1e-3 时返回 0（ℓ=0 的同心环）。
    """
    _, harmonics = _ring_harmonics(intensity)
    ring, order, depth = _dominant_ring(harmonics)
    if depth < ARM_MODULATION_FLOOR:
        return 0
    return order


def spiral_handedness(intensity: IntensityMap) -> int:
    """
    螺旋旋向 ±1，等于 sign(ℓ)·sign(R)

    主导谐波的相位随半径漂移，旋向取相位斜率的相反号。

    Raises:
        NoPatternError: 图样没有方位调制
    """
    radii, harmonics = _ring_harmonics(intensity)
    _, order, depth = _dominant_ring(harmonics)
    if depth < ARM_MODULATION_FLOOR:
        raise NoPatternError("no pattern: interferogram has no azimuthal modulation")
    component = harmonics[:, order]
    strength = np.abs(component)
    mask = strength >= 0.1 * strength.max()
    phase = np.unwrap(np.angle(component[mask]))
    slope = np.polyfit(radii[mask], phase, 1)[0]
    if slope == 0:
        raise NoPatternError("no pattern: fringe phase does not drift with radius")
    return -1 if slope > 0 else 1


# ==================== 拉莫尔进动 ====================

def larmor_frequency(cfg: LarmorConfig) -> float:
    """ω_L = g·(µ_B/ħ)·B（rad/s），B 以高斯计"""
    return 2 * math.pi * cfg.g_factor * LARMOR_HZ_PER_GAUSS * cfg.B


def larmor_period(cfg: LarmorConfig) -> float:
    """
    强度振荡周期 2π/(Δm·ω_L)

    Raises:
        NoPrecessionError: B = 0
    """
    if cfg.B == 0:
        raise NoPrecessionError()
    return 2 * math.pi / (cfg.delta_m * larmor_frequency(cfg))


def larmor_amplitude(cfg: LarmorConfig, t):
    """读出光振幅因子 e^{-γt}·cos(Δm·ω_L·t/2)"""
    t = np.asarray(t, dtype=float)
    values = np.exp(-cfg.gamma * t) * np.cos(cfg.delta_m * larmor_frequency(cfg) * t / 2)
    if np.ndim(values) == 0:
        return float(values)
    return values


def larmor_signal(cfg: LarmorConfig, t_grid, i0: float = 1.0) -> np.ndarray:
    """
    读出强度时间序列 e^{-2γt}·cos²(Δm·ω_L·t/2)·I0

    Raises:
        DomainError: 时间为负或不递增
    """
    t = np.atleast_1d(np.asarray(t_grid, dtype=float))
    if np.any(t < 0):
        raise DomainError("storage times must be non-negative")
    if np.any(np.diff(t) <= 0):
        raise DomainError("storage times must be strictly increasing")
    return i0 * larmor_amplitude(cfg, t) ** 2


def apply_larmor(field: ComplexField, cfg: LarmorConfig, t_s: float) -> ComplexField:
    """存储 t_s 后的读出场：全局标量因子，不改变模式成分"""
    if t_s < 0:
        raise DomainError(f"storage time must be non-negative, got {t_s}")
    return field * larmor_amplitude(cfg, t_s)


def extract_period(t, intensity) -> float:
    """
    由相邻峰间距估计振荡周期

    Returns:
        (最后一个峰 − 第一个峰) / (峰数 − 1)

    Raises:
        NoPrecessionError: 少于两个峰
    """
    t = np.asarray(t, dtype=float)
    intensity = np.asarray(intensity, dtype=float)
    span = float(intensity.max() - intensity.min()) if intensity.size else 0.0
    if span <= 0:
        raise NoPrecessionError("no precession: intensity time series is constant")
    peaks, _ = find_peaks(intensity, prominence=0.01 * span)
    if peaks.size < 2:
        raise NoPrecessionError("no precession: fewer than two oscillation maxima in the time series")
    return float((t[peaks[-1]] - t[peaks[0]]) / (peaks.size - 1))
