"""
selftest 子命令
"""

import argparse

from app.cli.options import add_common_options
from app.services.selftest_service import selftest_service
from app.util.response import from_exception, success


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "selftest", help="orthonormality, quadrature cross-check, parity and winding checks",
        argument_default=argparse.SUPPRESS,
    )
    add_common_options(parser)
    parser.set_defaults(handler=handle_selftest)


def handle_selftest(args: argparse.Namespace) -> int:
    result, err = selftest_service.run()
    if err:
        return from_exception(err)
    return success(result)
