"""
qrecur.cli
~~~~~~~~~~

The ``qrecur`` command line.

:copyright: (c) 2018 Andrew Grant Spencer
:license: BSD, see LICENSE for more details.
"""

from concurrent.futures import ThreadPoolExecutor
import argparse
import json
import logging
import os
import sys

from .__version__ import __version__
from .ajverify import (
    MIN_TABLE_SIZE,
    aj_verdict,
    characteristic_poly,
    verdict_passes,
)
from .algebra import to_text
from .exceptions import QRecurError
from .models import KNOT_NAMES, get_knot
from .ore import backward_shifts, normalize
from .telescope import DEFAULT_MAX_ORDER, find_recursion
from .util import (
    laurent_to_json,
    operator_from_json,
    telescope_to_json,
    verdict_to_json,
)

logger = logging.getLogger(__name__)

MAX_ORDER_ENV = "QRECUR_MAX_ORDER"


def _emit(data):
    print(json.dumps(data, indent=2))


def _cmd_jones(args):
    value = get_knot(args.knot).jones(args.n)
    if args.emit == "json":
        _emit(laurent_to_json(value))
    else:
        print(value.to_text())
    return 0


def _cmd_telescope(args):
    knot = get_knot(args.knot)
    result = find_recursion(knot.term(), args.max_order, args.homogenize)
    if args.emit == "json":
        _emit(telescope_to_json(result))
        return 0

    print("order: {0}".format(result.order))
    print("operator: {0}".format(result.operator))
    print("inhom: {0}".format(to_text(result.inhom)))
    print("certificate: {0}".format(to_text(result.certificate)))
    if result.recursion is not None:
        print("recursion: {0}".format(result.recursion))
    return 0


def _verdicts(names, args):
    def run_one(name):
        return aj_verdict(
            name, max_order=args.max_order, table_size=args.table_size
        )

    with ThreadPoolExecutor(max_workers=args.jobs) as executor:
        return list(executor.map(run_one, names))


def _cmd_aj_check(args):
    verdict, = _verdicts([args.knot], args)
    _emit(verdict_to_json(verdict))
    return 0 if verdict_passes(verdict) else 1


def _cmd_char_variety(args):
    with open(args.operator) as handle:
        operator = operator_from_json(json.load(handle))
    print(to_text(characteristic_poly(normalize(operator))))
    return 0


def _cmd_repro_paper(args):
    verdicts = _verdicts(KNOT_NAMES, args)
    for verdict in verdicts:
        knot = get_knot(verdict.knot)
        print("== {0}".format(knot.name))
        print("order:              {0}".format(verdict.order))
        print("recursion:          {0}".format(backward_shifts(verdict.operator)))
        print("published:          {0}".format(knot.reference_operator))
        print("same operator:      {0}".format(verdict.reference_match))
        print("char poly:          {0}".format(to_text(verdict.char_poly)))
        print("A-polynomial:       {0}".format(knot.a_polynomial_text))
        print("essentially equal:  {0}".format(verdict.essentially_equal))
        print("E - 1 divides:      {0}".format(verdict.lemma31_ok))
        print("annihilates:        {0}".format(verdict.annihilation.ok))
        print(
            "no order 1:         {0}".format(
                verdict.no_order1_certificate.nullspace_dimension == 0
            )
        )
    return 0 if all(verdict_passes(v) for v in verdicts) else 1


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _table_size(text):
    value = int(text)
    if value < MIN_TABLE_SIZE:
        raise argparse.ArgumentTypeError(
            "must be at least {0}".format(MIN_TABLE_SIZE)
        )
    return value


def build_parser():
    """
    Build the argument parser. The ``--max-order`` default is read from the
    ``QRECUR_MAX_ORDER`` environment variable when it is set.
    """
    max_order = os.environ.get(MAX_ORDER_ENV, str(DEFAULT_MAX_ORDER))

    parser = argparse.ArgumentParser(
        prog="qrecur",
        description="Exact q-recursions for colored Jones functions.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="log progress to stderr; repeat for debug output",
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    def knot_option(sub):
        sub.add_argument("--knot", required=True, choices=KNOT_NAMES)

    def order_option(sub):
        sub.add_argument("--max-order", type=_positive, default=max_order,
                         help="highest telescoping order tried")

    def jobs_option(sub):
        sub.add_argument("--jobs", type=_positive, default=1,
                         help="worker threads for per-knot work")

    sub = commands.add_parser("jones", help="colored Jones value J(n)")
    knot_option(sub)
    sub.add_argument("--n", type=_positive, required=True)
    sub.add_argument("--emit", choices=["text", "json"], default="text")
    sub.set_defaults(func=_cmd_jones)

    sub = commands.add_parser("telescope", help="creative telescoping")
    knot_option(sub)
    order_option(sub)
    sub.add_argument("--emit", choices=["text", "json"], default="text")
    sub.add_argument("--homogenize", dest="homogenize", action="store_true",
                     default=True)
    sub.add_argument("--no-homogenize", dest="homogenize",
                     action="store_false")
    sub.set_defaults(func=_cmd_telescope)

    sub = commands.add_parser("aj-check", help="AJ conjecture verdict")
    knot_option(sub)
    order_option(sub)
    sub.add_argument("--table-size", type=_table_size, default=40)
    jobs_option(sub)
    sub.set_defaults(func=_cmd_aj_check)

    sub = commands.add_parser("char-variety",
                              help="characteristic polynomial of an operator")
    sub.add_argument("--operator", required=True,
                     help="operator JSON document")
    sub.set_defaults(func=_cmd_char_variety)

    sub = commands.add_parser("repro-paper",
                              help="run both knot pipelines side by side")
    order_option(sub)
    sub.add_argument("--table-size", type=_table_size, default=40)
    jobs_option(sub)
    sub.set_defaults(func=_cmd_repro_paper)

    return parser


def run(argv=None):
    """
    Run the command line and return its exit status: 0 on success, 1 when
    a verification fails, 2 on usage errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code

    levels = [logging.WARNING, logging.INFO, logging.DEBUG]
    logging.basicConfig(
        level=levels[min(args.verbose, 2)],
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        return args.func(args)
    except (QRecurError, OSError, ValueError) as exc:
        logger.error("%s", exc)
        return 1


def main():
    sys.exit(run())
