"""
模谱命令服务

合成读出光、双路径分解并写出 SpectrumRecord CSV
"""

from typing import List, Optional, Sequence, Tuple

from app.config import Config
from app.models.field import GridSpec
from app.models.run_config import RunConfig, SpectrumRecord
from app.models.spectrum import ModeSpectrum, Normalization, SweepResult
from app.services.oam_spectrum import (
    crosstalk,
    cross_checked_decompose,
    decompose,
    normalize,
    sweep_spectra,
)
from app.services.tilt_project import effective_waist, synthesize_retrieved_field
from app.services.writer import get_writer
from app.services.writer.csv_writer import CsvTable
from app.util.errors import OamTiltError, OutputError
from app.util.logger import get_logger
from app.util.presets import TILT_SWEEP

logger = get_logger(__name__)


def spectrum_records(theta_deg: float, ell_in: int, spectrum: ModeSpectrum) -> List[SpectrumRecord]:
    """
    一个 (θ, ℓ_in) 组的 CSV 行；power_frac 在组内求和为 1
    """
    maxnorm = normalize(spectrum, Normalization.MAX_AMPLITUDE)
    powers = spectrum.powers()
    fractions = powers / powers.sum()
    records = []
    for i, ell in enumerate(spectrum.ells):
        c = complex(spectrum.coefficients[i])
        records.append(SpectrumRecord(
            theta_deg=float(theta_deg),
            ell_in=int(ell_in),
            ell_prime=int(ell),
            re=c.real,
            im=c.imag,
            abs=abs(c),
            abs_maxnorm=float(abs(maxnorm.coefficients[i])),
            power_frac=float(fractions[i]),
        ))
    return records


def _parameter_comments(cfg: RunConfig) -> List[str]:
    return [
        f"w0_um={cfg.w0!r} waist_ratio={cfg.waist_ratio!r} basis_waist_um="
        f"{'auto' if cfg.basis_waist is None else repr(cfg.basis_waist)}",
        f"gamma_per_us={cfg.gamma!r} t_s_us={cfg.t_s!r} grid_n={cfg.grid_n} extent_factor={cfg.extent_factor!r}",
    ]


def records_table(records: Sequence[SpectrumRecord], comments: List[str]) -> CsvTable:
    return CsvTable(columns=SpectrumRecord.columns(), rows=[r.as_row() for r in records], comments=comments)


class SpectrumService:
    """模谱命令服务类"""

    def retrieval_grid(self, cfg: RunConfig) -> GridSpec:
        """读出场网格：以 W、W′ 中较大束腰为准"""
        w0 = cfg.beam().w0
        return GridSpec.for_waist(max(w0, cfg.waist_ratio * w0), n=cfg.grid_n, factor=cfg.extent_factor)

    def basis_waist(self, cfg: RunConfig) -> float:
        """基模束腰：显式给定或自动取 w_eff"""
        return cfg.basis_waist_m() or effective_waist(cfg.beam().w0, cfg.waist_ratio)

    def compute(self, cfg: RunConfig) -> SweepResult:
        """单点计算（异常原样抛出）"""
        cfg.validate()
        grid = self.retrieval_grid(cfg)
        field = synthesize_retrieved_field(cfg.ell_in, cfg.beam(), cfg.geometry(), cfg.retrieval(), grid)
        basis_waist = self.basis_waist(cfg)
        lrange = cfg.lrange()
        if cfg.no_check:
            spectrum, deviation = decompose(field, basis_waist, lrange), float('nan')
        else:
            spectrum, deviation = cross_checked_decompose(field, basis_waist, lrange)
        return SweepResult(theta_deg=cfg.theta, ell_in=cfg.ell_in, spectrum=spectrum, oracle_deviation=deviation)

    def run(self, cfg: RunConfig) -> Tuple[Optional[str], Optional[OamTiltError]]:
        """
        spectrum 命令

        Returns:
            (输出摘要, 异常) - 成功时异常为 None
        """
        try:
            result = self.compute(cfg)
        except OamTiltError as e:
            logger.error(f"模谱计算失败: {e.message}")
            return None, e

        records = spectrum_records(result.theta_deg, result.ell_in, result.spectrum)
        writer = get_writer("csv")
        path = cfg.output or writer.default_path(Config.OUTPUT_DIR, "spectrum")
        written, error = writer.emit(path, records_table(records, _parameter_comments(cfg)))
        if error:
            return None, OutputError(path, error)

        xt = crosstalk(result.spectrum, cfg.ell_in)
        lines = [written.rstrip("\r\n")] if path == "-" else [f"wrote {written}"]
        lines.append(
            f"theta={cfg.theta:g} deg ell_in={cfg.ell_in} dominant_l'={result.spectrum.dominant_ell()} "
            f"crosstalk={xt:.6e} oracle_deviation={result.oracle_deviation:.3e}"
        )
        return "\n".join(lines), None

    def run_sweep(self, cfg: RunConfig) -> Tuple[Optional[str], Optional[OamTiltError]]:
        """
        fig4 扫描：ℓ ∈ 0..3 × θ ∈ {5,10,15,20}°，共 16 组
        """
        try:
            cfg.validate()
            beam = cfg.beam()
            results = sweep_spectra(
                beam, cfg.retrieval(), grid=self.retrieval_grid(cfg), basis_waist=self.basis_waist(cfg),
                ell_below=cfg.ell_below, ell_above=cfg.ell_above, cross_check=not cfg.no_check,
            )
        except OamTiltError as e:
            logger.error(f"扫描失败: {e.message}")
            return None, e

        records = []
        summary = []
        for result in results:
            records.extend(spectrum_records(result.theta_deg, result.ell_in, result.spectrum))
            line = f"theta={result.theta_deg:g} ell={result.ell_in} dominant_l'={result.spectrum.dominant_ell()} "
            if result.ell_in + 2 in result.spectrum.ell_range:
                amplitudes = normalize(result.spectrum, Normalization.MAX_AMPLITUDE).amplitudes()
                line += f"|c(l+2)|/max={float(amplitudes[result.spectrum.ells.index(result.ell_in + 2)]):.4f} "
            summary.append(line + f"oracle_deviation={result.oracle_deviation:.2e}")
        writer = get_writer("csv")
        path = cfg.output or writer.default_path(Config.OUTPUT_DIR, "fig4")
        comments = [f"sweep: {TILT_SWEEP['description']}"] + _parameter_comments(cfg)
        written, error = writer.emit(path, records_table(records, comments))
        if error:
            return None, OutputError(path, error)
        head = [written.rstrip('\r\n')] if path == "-" else [f"wrote {written}"]
        return "\n".join(head + summary), None


spectrum_service = SpectrumService()

