"""
larmor 子命令
"""

import argparse

from app.cli.options import add_common_options, add_larmor_options, build_run_config
from app.services.larmor_service import larmor_service
from app.util.logger import get_logger
from app.util.response import from_exception, success

logger = get_logger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "larmor", help="retrieved intensity versus storage time under a dc magnetic field",
        argument_default=argparse.SUPPRESS,
    )
    add_common_options(parser)
    add_larmor_options(parser)
    parser.set_defaults(handler=handle_larmor)


def handle_larmor(args: argparse.Namespace) -> int:
    cfg = build_run_config(args)
    logger.info(f"larmor: B={cfg.B:g} G, g={cfg.g_factor:g}, delta_m={cfg.delta_m}")
    result, err = larmor_service.run(cfg)
    if err:
        return from_exception(err)
    return success(result)
