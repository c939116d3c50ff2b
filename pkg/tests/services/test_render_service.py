"""
图像渲染命令服务单元测试
"""

import numpy as np
import pytest

from app.models.run_config import RunConfig
from app.services.render_service import RenderService
from app.services.writer.pgm_writer import decode_pgm
from app.util.errors import ConfigError


class TestRenderService:
    """RenderService 测试"""

    def setup_method(self):
        self.service = RenderService()

    def test_source_waist(self):
        """测试输入光与读出光的束腰"""
        assert self.service.source_waist(RunConfig(w0=250.0)) == pytest.approx(250e-6)
        assert self.service.source_waist(RunConfig(w0=250.0, source="retrieved")) < 250e-6

    @pytest.mark.parametrize("what", ["intensity", "phase"])
    def test_render_field(self, what):
        """测试强度与相位图像"""
        image, summary = self.service.render(RunConfig(what=what, ell_in=2, grid_n=128))
        assert image.shape == (128, 128)
        assert image.dtype == np.uint16
        assert summary == "winding=2"

    def test_render_gaussian(self):
        """测试高斯光束的摘要"""
        _, summary = self.service.render(RunConfig(ell_in=0, grid_n=128))
        assert summary == "winding=0 (gaussian)"

    def test_render_retrieved(self):
        """测试小倾角读出光保持拓扑荷"""
        _, summary = self.service.render(RunConfig(source="retrieved", theta=2.0, ell_in=3, grid_n=256))
        assert summary == "winding=3"

    def test_render_spiral(self):
        """测试螺旋干涉图摘要"""
        image, summary = self.service.render(RunConfig(what="spiral", ell_in=-2, grid_n=256))
        assert image.shape == (256, 256)
        assert summary == "arms=2 handedness=-1"

    def test_spiral_requires_input_source(self):
        """测试螺旋干涉只用于输入光"""
        with pytest.raises(ConfigError):
            self.service.render(RunConfig(what="spiral", source="retrieved"))

    def test_render_tilted_lens(self):
        """测试像散透镜图样摘要"""
        _, summary = self.service.render(RunConfig(what="tilted_lens", ell_in=2, grid_n=512))
        assert summary == "minima=2 orientation=+"

    def test_run_rejects_stdout(self):
        """测试 PGM 不能输出到标准输出"""
        summary, error = self.service.run(RunConfig(output="-"))
        assert summary is None
        assert isinstance(error, ConfigError)

    def test_run_writes_pgm(self, tmp_path):
        """测试写出 PGM 文件"""
        path = tmp_path / "phase.pgm"
        summary, error = self.service.run(RunConfig(what="phase", ell_in=1, grid_n=64, output=str(path)))
        assert error is None
        assert summary.splitlines()[1] == "phase: winding=1"
        assert decode_pgm(path.read_bytes()).shape == (64, 64)

    def test_run_returns_domain_error(self, mocker):
        """测试计算异常以 (None, 异常) 返回"""
        mocker.patch.object(self.service, 'render', side_effect=ConfigError("bad"))
        summary, error = self.service.run(RunConfig())
        assert summary is None
        assert error.message == "bad"

    @pytest.mark.parametrize("what,source", [("intensity", "input"), ("phase", "retrieved")])
    def test_repeated_runs_are_byte_identical(self, tmp_path, what, source):
        """测试重复运行写出逐字节相同的 PGM"""
        outputs = []
        for name in ("first.pgm", "second.pgm"):
            path = tmp_path / name
            cfg = RunConfig(what=what, source=source, theta=10.0, ell_in=2, grid_n=128, output=str(path))
            _, error = self.service.run(cfg)
            assert error is None
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1]
