"""
自检命令服务单元测试
"""

from unittest.mock import patch

import pytest

from app.services.selftest_service import SelfTestService
from app.util.errors import CircleOutsideGridError, NumericalError, QuadratureInconsistencyError


def passing_checks(service):
    return {name: (lambda: (0.0, 1e-6)) for name in service.checks()}


class TestSelfTestService:
    """SelfTestService 测试"""

    def setup_method(self):
        self.service = SelfTestService()

    def test_check_names(self):
        """测试检查项"""
        assert list(self.service.checks()) == [
            "orthonormality", "oracle_equivalence", "parity_selection", "winding_number",
        ]

    def test_all_pass(self):
        """测试全部通过"""
        with patch.object(SelfTestService, 'checks', return_value=passing_checks(self.service)):
            summary, error = self.service.run()
        assert error is None
        assert summary.count("PASS") == 4

    def test_oracle_failure(self):
        """测试求积一致性失败映射为 QuadratureInconsistencyError"""
        checks = passing_checks(self.service)
        checks["oracle_equivalence"] = lambda: (1e-3, 1e-5)
        with patch.object(SelfTestService, 'checks', return_value=checks):
            summary, error = self.service.run()
        assert summary is None
        assert isinstance(error, QuadratureInconsistencyError)

    def test_other_failure(self):
        """测试其他检查失败映射为数值错误"""
        checks = passing_checks(self.service)
        checks["winding_number"] = lambda: (1.0, 0.0)
        with patch.object(SelfTestService, 'checks', return_value=checks):
            _, error = self.service.run()
        assert type(error) is NumericalError
        assert "winding_number" in error.message

    def test_check_exception(self):
        """测试检查过程中的异常原样返回"""
        def broken():
            raise CircleOutsideGridError("circle outside grid")

        checks = passing_checks(self.service)
        checks["parity_selection"] = broken
        with patch.object(SelfTestService, 'checks', return_value=checks):
            summary, error = self.service.run()
        assert summary is None
        assert isinstance(error, CircleOutsideGridError)

    def test_parity_check(self):
        """测试奇宇称系数检查"""
        value, tolerance = self.service.check_parity()
        assert value < tolerance

    def test_winding_check(self):
        """测试绕数检查"""
        assert self.service.check_winding() == (0.0, 0.0)

    @pytest.mark.slow
    def test_full_run(self):
        """测试完整自检"""
        summary, error = self.service.run()
        assert error is None
        assert "FAIL" not in summary
