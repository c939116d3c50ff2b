"""
模谱命令服务单元测试
"""

import math

import pytest

from app.models.run_config import RunConfig
from app.models.spectrum import EllRange, ModeSpectrum, SweepResult
from app.services.spectrum_service import SpectrumService, records_table, spectrum_records
from app.services.writer.csv_writer import read_csv
from app.util.errors import OutputError, QuadratureInconsistencyError

SMALL = dict(grid_n=128)


class TestSpectrumRecords:
    """CSV 行构建测试"""

    def test_records(self):
        """测试 abs_maxnorm 与 power_frac"""
        spectrum = ModeSpectrum(EllRange(0, 2), [0.6, 0.0, -0.8j], basis_waist=1.0)
        records = spectrum_records(5.0, 1, spectrum)
        assert [r.ell_prime for r in records] == [0, 1, 2]
        assert [r.abs_maxnorm for r in records] == pytest.approx([0.75, 0.0, 1.0])
        assert sum(r.power_frac for r in records) == pytest.approx(1.0)
        assert records[2].im == pytest.approx(-0.8)

    def test_table(self):
        """测试表格列与注释"""
        spectrum = ModeSpectrum(EllRange(0, 0), [1.0], basis_waist=1.0)
        table = records_table(spectrum_records(0.0, 0, spectrum), ["w0_um=250.0"])
        assert table.columns[0] == "theta_deg"
        assert table.comments == ["w0_um=250.0"]


class TestSpectrumService:
    """SpectrumService 测试"""

    def setup_method(self):
        self.service = SpectrumService()

    def test_basis_waist_defaults_to_effective(self):
        """测试基模束腰默认取 w_eff"""
        cfg = RunConfig(w0=250.0, waist_ratio=1.4)
        assert self.service.basis_waist(cfg) == pytest.approx(250e-6 * 1.4 / math.sqrt(1 + 1.4 ** 2))
        assert self.service.basis_waist(RunConfig(basis_waist=180.0)) == pytest.approx(180e-6)

    def test_compute(self):
        """测试单点计算"""
        result = self.service.compute(RunConfig(theta=10.0, ell_in=2, **SMALL))
        assert result.ell_in == 2
        assert result.spectrum.ell_range == EllRange(-2, 12)
        assert result.spectrum.dominant_ell() == 2
        assert result.oracle_deviation < 1e-5

    def test_compute_without_check(self, mocker):
        """测试跳过交叉校验"""
        checked = mocker.patch('app.services.spectrum_service.cross_checked_decompose')
        result = self.service.compute(RunConfig(theta=5.0, no_check=True, **SMALL))
        checked.assert_not_called()
        assert math.isnan(result.oracle_deviation)

    def test_run_writes_csv(self, tmp_path):
        """测试写出 CSV 与摘要"""
        path = tmp_path / "spectrum.csv"
        summary, error = self.service.run(RunConfig(theta=20.0, ell_in=1, output=str(path), **SMALL))
        assert error is None
        assert summary.startswith("wrote ")
        assert "crosstalk=" in summary
        header, rows, comments = read_csv(path.read_text())
        assert header[:3] == ["theta_deg", "ell_in", "ell_prime"]
        assert len(rows) == 15
        assert sum(float(row[7]) for row in rows) == pytest.approx(1.0)
        assert max(float(row[6]) for row in rows) == 1.0
        assert any(c.startswith("w0_um=") for c in comments)

    def test_run_to_stdout(self):
        """测试输出到标准输出"""
        summary, error = self.service.run(RunConfig(theta=5.0, output="-", **SMALL))
        assert error is None
        assert "theta_deg,ell_in,ell_prime" in summary

    def test_run_numerical_error(self, mocker):
        """测试求积不一致时返回异常"""
        mocker.patch.object(self.service, 'compute', side_effect=QuadratureInconsistencyError(1e-3, 1e-5))
        summary, error = self.service.run(RunConfig())
        assert summary is None
        assert isinstance(error, QuadratureInconsistencyError)
        assert error.exit_code == 3

    def test_run_output_error(self, tmp_path):
        """测试输出路径无法写入"""
        blocker = tmp_path / "file"
        blocker.write_text("x")
        summary, error = self.service.run(RunConfig(theta=5.0, output=str(blocker / "a.csv"), **SMALL))
        assert summary is None
        assert isinstance(error, OutputError)
        assert error.exit_code == 4

    def test_run_sweep(self, mocker, tmp_path):
        """测试扫描结果按组写出"""
        results = [
            SweepResult(theta, ell, ModeSpectrum(EllRange.around(ell), [1.0] + [0.1] * 14, basis_waist=1.0))
            for theta in (5.0, 10.0) for ell in (0, 1)
        ]
        sweep = mocker.patch('app.services.spectrum_service.sweep_spectra', return_value=results)
        path = tmp_path / "sweep.csv"
        summary, error = self.service.run_sweep(RunConfig(output=str(path), **SMALL))
        assert error is None
        sweep.assert_called_once()
        lines = summary.splitlines()
        assert lines[0].startswith("wrote ")
        assert len(lines) == 5
        _, rows, comments = read_csv(path.read_text())
        assert len(rows) == 4 * 15
        assert comments[0].startswith("sweep:")

    def test_run_sweep_range_and_check_options(self, mocker, tmp_path):
        """测试扫描使用配置的报告区间并可跳过交叉校验"""
        results = [SweepResult(5.0, 1, ModeSpectrum(EllRange(0, 2), [0.1, 1.0, 0.2], basis_waist=1.0),
                               oracle_deviation=float("nan"))]
        sweep = mocker.patch('app.services.spectrum_service.sweep_spectra', return_value=results)
        cfg = RunConfig(output=str(tmp_path / "sweep.csv"), ell_below=1, ell_above=1, no_check=True, **SMALL)
        summary, error = self.service.run_sweep(cfg)
        assert error is None
        kwargs = sweep.call_args.kwargs
        assert (kwargs["ell_below"], kwargs["ell_above"], kwargs["cross_check"]) == (1, 1, False)
        assert "|c(l+2)|" not in summary

    def test_repeated_runs_are_byte_identical(self, tmp_path):
        """测试重复运行写出逐字节相同的 CSV"""
        outputs = []
        for name in ("first.csv", "second.csv"):
            path = tmp_path / name
            _, error = self.service.run(RunConfig(theta=15.0, ell_in=3, output=str(path), **SMALL))
            assert error is None
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1]

    def test_repeated_sweeps_are_byte_identical(self, tmp_path):
        """测试重复扫描写出逐字节相同的 CSV"""
        outputs = []
        for name in ("first.csv", "second.csv"):
            path = tmp_path / name
            _, error = self.service.run_sweep(RunConfig(output=str(path), ell_below=2, ell_above=4, **SMALL))
            assert error is None
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1]
