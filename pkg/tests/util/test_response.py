"""
命令结果封装与异常单元测试
"""

import io

import pytest

from app.util.errors import (
    ConfigError,
    DomainError,
    FresnelAliasingError,
    InputError,
    NodalCircleError,
    NumericalError,
    OutputError,
    QuadratureInconsistencyError,
)
from app.util.response import (
    EXIT_CONFIG,
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_OUTPUT,
    config_error,
    error,
    from_exception,
    success,
)


class TestResponse:
    """结果输出测试"""

    def test_success(self):
        """测试成功结果写到 stdout"""
        stream = io.StringIO()
        assert success("wrote out.csv", stream=stream) == EXIT_OK
        assert stream.getvalue() == "wrote out.csv\n"

    def test_success_without_message(self, capsys):
        """测试无消息时不输出"""
        assert success() == EXIT_OK
        assert capsys.readouterr().out == ""

    def test_error_is_single_line(self):
        """测试错误信息压成单行并带 ERROR 前缀"""
        stream = io.StringIO()
        assert error("bad\nvalue", code=EXIT_NUMERICAL, stream=stream) == EXIT_NUMERICAL
        assert stream.getvalue() == "ERROR: bad value\n"

    def test_config_error_shortcut(self, capsys):
        """测试配置错误快捷函数"""
        assert config_error("theta") == EXIT_CONFIG
        assert capsys.readouterr().err == "ERROR: theta\n"

    @pytest.mark.parametrize("exc,code", [
        (ConfigError("x"), EXIT_CONFIG),
        (DomainError("x"), EXIT_CONFIG),
        (NumericalError("x"), EXIT_NUMERICAL),
        (NodalCircleError(1e-4, 0.0), EXIT_NUMERICAL),
        (QuadratureInconsistencyError(1e-3, 1e-5), EXIT_NUMERICAL),
        (OutputError("a.csv", "Permission denied"), EXIT_OUTPUT),
        (InputError("run.cfg", "No such file or directory"), EXIT_OUTPUT),
    ])
    def test_exit_codes(self, exc, code):
        """测试异常到退出码的映射"""
        stream = io.StringIO()
        assert from_exception(exc, stream=stream) == code
        assert stream.getvalue().startswith("ERROR: ")


class TestErrors:
    """异常信息测试"""

    def test_output_error_message(self):
        """测试输出错误信息"""
        assert OutputError("a.csv", "Permission denied").message == "cannot write a.csv: Permission denied"

    def test_fresnel_required_size(self):
        """测试混叠错误附带所需网格尺寸"""
        exc = FresnelAliasingError("Fresnel aliasing", required_n=2048)
        assert exc.required_n == 2048
        assert "2048" in exc.message

    def test_quadrature_detail(self):
        """测试一致性错误附带详情"""
        exc = QuadratureInconsistencyError(2e-4, 1e-5, "l'=3")
        assert exc.deviation == 2e-4
        assert "l'=3" in exc.message
