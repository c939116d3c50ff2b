"""
render 子命令

强度 / 相位 / 像散透镜 / 螺旋干涉图，写出 16 位 PGM
"""

import argparse

from app.cli.options import (
    add_beam_options,
    add_common_options,
    add_grid_options,
    add_render_options,
    build_run_config,
)
from app.services.render_service import render_service
from app.util.logger import get_logger
from app.util.response import from_exception, success

logger = get_logger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "render", help="render intensity, phase, tilted-lens or spiral images as 16-bit PGM",
        argument_default=argparse.SUPPRESS,
    )
    add_common_options(parser)
    add_beam_options(parser)
    add_grid_options(parser)
    add_render_options(parser)
    parser.set_defaults(handler=handle_render)


def handle_render(args: argparse.Namespace) -> int:
    cfg = build_run_config(args)
    logger.info(f"render: what={cfg.what}, source={cfg.source}, ell={cfg.ell_in}")
    result, err = render_service.run(cfg)
    if err:
        return from_exception(err)
    return success(result)
