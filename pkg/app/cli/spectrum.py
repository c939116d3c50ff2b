"""
spectrum / fig4 子命令

合成读出光、双路径分解并写出模谱 CSV
"""

import argparse

from app.cli.options import (
    add_beam_options,
    add_common_options,
    add_grid_options,
    add_spectrum_options,
    build_run_config,
)
from app.services.spectrum_service import spectrum_service
from app.util.response import error, from_exception, success
from app.util.logger import get_logger

logger = get_logger(__name__)


def register(subparsers) -> None:
    """注册 spectrum 与 fig4 子命令"""
    parser = subparsers.add_parser(
        "spectrum", help="OAM spectrum of the retrieved beam",
        description="Synthesize the retrieved field on the tilted plane and decompose it over LG_{p'=0}^{l'}.",
        argument_default=argparse.SUPPRESS,
    )
    add_common_options(parser)
    add_beam_options(parser)
    add_grid_options(parser)
    add_spectrum_options(parser)
    parser.add_argument("--fig4", action="store_true", help="run the 16-point sweep instead of a single point")
    parser.set_defaults(handler=handle_spectrum)

    sweep = subparsers.add_parser(
        "fig4", help="spectra for l in 0..3 and theta in {5,10,15,20} deg",
        argument_default=argparse.SUPPRESS,
    )
    add_common_options(sweep)
    add_beam_options(sweep)
    add_grid_options(sweep)
    add_spectrum_options(sweep)
    sweep.set_defaults(handler=handle_fig4)


def handle_spectrum(args: argparse.Namespace) -> int:
    if getattr(args, "fig4", False):
        return handle_fig4(args)
    cfg = build_run_config(args)
    logger.info(f"spectrum: ell={cfg.ell_in}, theta={cfg.theta:g} deg, waist_ratio={cfg.waist_ratio:g}")
    result, err = spectrum_service.run(cfg)
    if err:
        return from_exception(err)
    return success(result)


def handle_fig4(args: argparse.Namespace) -> int:
    cfg = build_run_config(args)
    logger.info("fig4: 16-point sweep")
    result, err = spectrum_service.run_sweep(cfg)
    if err:
        return from_exception(err)
    if result is None:
        return error("sweep produced no output")
    return success(result)
