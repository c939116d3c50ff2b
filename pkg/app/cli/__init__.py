"""
命令行入口

子命令：spectrum、fig4、render、larmor、selftest
"""

import argparse
import sys
from typing import List, Optional

from app import __version__
from app.cli import larmor, render, selftest, spectrum
from app.config import Config
from app.util.errors import OamTiltError
from app.util.logger import get_logger, logger_manager
from app.util.response import EXIT_CONFIG, config_error, from_exception

logger = get_logger(__name__)

COMMANDS = (spectrum, render, larmor, selftest)


class CliArgumentParser(argparse.ArgumentParser):
    """参数错误输出单行 ERROR 并以配置错误退出"""

    def error(self, message):
        config_error(message)
        sys.exit(EXIT_CONFIG)


def create_parser() -> argparse.ArgumentParser:
    """创建带全部子命令的解析器"""
    parser = CliArgumentParser(
        prog="oamtilt",
        description="OAM spectra of light stored by four-wave mixing and retrieved along a tilted axis.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=CliArgumentParser)
    subparsers.required = True
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    解析参数并执行子命令

    Returns:
        int: 进程退出码
    """
    args = create_parser().parse_args(argv)
    level = getattr(args, "log_level", None)
    if level:
        logger_manager.set_level(level)
    try:
        Config.load()
        return args.handler(args)
    except OamTiltError as e:
        logger.error(f"{args.command} 失败: {e.message}")
        return from_exception(e)
