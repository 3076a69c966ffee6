"""Command line entry point: ``qlaguerre <command> ...``.

Global options come before the command::

    qlaguerre --format json linearize --blocks 2,2,1
    qlaguerre -v verify --suite moments --max-n 6

Exit status is 0 on success (and when every verification check passes), 1
for domain errors and failed checks, 2 for usage errors.
"""

import argparse
import logging
import sys

from . import bijections, linearization, moments, stirling
from .config import FORMATS, load_config
from .errors import QLaguerreError, UnknownMethod
from .permstats import BlockSpec, Permutation, cr, format_class_csv_rows, \
    permutation_polynomial, wex
from .polynomials import ASCParams, asc_Q, classical_laguerre, jacobi_for, \
    laguerre_poly
from .report import format_record, format_results, format_value, \
    rows_to_csv, write_output
from .utils.bilaurent import DEFAULT_NAMES, Q, Y
from .utils.rational import parse_rational
from .verifier import Verifier

logger = logging.getLogger(__name__)

MOMENT_FAMILIES = ("laguerre", "charlier", "asc")
MOMENT_METHODS = ("enum", "motzkin", "closed", "gf")


def _rational(text):
    return parse_rational(text)


def _permutation(text):
    return Permutation.parse(text)


def _blocks(text):
    return BlockSpec.parse(text)


def _asc_point(args, parser):
    """``(ASCParams, q)`` from ``--alpha --beta --q``; all or nothing."""
    given = [v is not None for v in (args.alpha, args.beta, args.q)]
    if not any(given):
        return None
    if not all(given):
        parser.error("--alpha, --beta and --q must be given together")
    return (ASCParams.from_alpha_beta(args.alpha, args.beta), args.q)


def cmd_moments(args, config, parser):
    n = args.n
    names = DEFAULT_NAMES
    method = args.method
    if args.family == "laguerre":
        if method == "enum":
            value = permutation_polynomial(n, cap=config.cap,
                                           workers=config.workers)
        elif method == "motzkin":
            value = moments.moment_table("laguerre")[n]
        elif method == "closed":
            value = moments.moment_closed_laguerre(n)
        else:
            value = moments.moment_gf_truncated("laguerre", n).coefficient(n)
    elif args.family == "charlier":
        names = moments.CHARLIER_NAMES
        if method == "motzkin":
            value = moments.moment_table("charlier")[n]
        elif method == "closed":
            value = (moments.moment_table("charlier")[0] if n == 0
                     else moments.moment_closed_charlier(n))
        elif method == "gf":
            value = moments.moment_gf_truncated("charlier", n).coefficient(n)
        else:
            raise UnknownMethod("No enumeration route for the charlier "
                                "moments")
    else:
        point = _asc_point(args, parser)
        (params, q) = point if point else (ASCParams.laguerre(), Q)
        if method == "motzkin":
            value = moments.motzkin_moments(n, jacobi_for(params, q))[n]
        elif method == "closed":
            value = (moments.asc_moment_explicit(n, params, q) if point
                     else moments.asc_moment_stirling(n, params, q))
        elif method == "gf":
            value = moments.moment_gf_truncated(params, n, q).coefficient(n)
        else:
            raise UnknownMethod("No enumeration route for the asc moments")
    return format_value(value, config.output_format, names)


def cmd_poly(args, config, parser):
    if args.family == "laguerre":
        value = laguerre_poly(args.n, method=args.method or "recurrence")
    elif args.family == "classical":
        value = classical_laguerre(args.n, method=args.method or "explicit")
    else:
        if _asc_point(args, parser) is None:
            parser.error("poly --family asc needs --alpha, --beta and --q")
        value = asc_Q(args.n, args.alpha, args.beta, args.q)
    return format_value(value, config.output_format)


def cmd_stirling(args, config, parser):
    y = Y if args.y is None else args.y
    q = Q if args.q is None else args.q
    if args.kind == "S":
        value = stirling.stirling_S(args.n, args.k, y, q)
    else:
        value = stirling.stirling_s(args.n, args.k, y, q)
    return format_value(value, config.output_format)


def cmd_linearize(args, config, parser):
    value = linearization.linearize(args.blocks, method=args.method,
                                    cap=config.cap, workers=config.workers)
    return format_value(value, config.output_format)


def cmd_bijection(args, config, parser):
    sigma = args.sigma
    if args.map == "phi":
        if args.k is None:
            parser.error("bijection --map phi needs --k")
        image = bijections.phi(sigma, args.k)
        decompose = dict(k=args.k)
    else:
        if args.n1 is None or args.n2 is None:
            parser.error("bijection --map gamma needs --n1 and --n2")
        image = bijections.gamma(sigma, args.n1, args.n2)
        decompose = dict(n1=args.n1, n2=args.n2)

    if args.decompose:
        return rows_to_csv(bijections.decomposition_rows(sigma, **decompose))

    record = [("sigma", str(sigma)), ("image", str(image))]
    if args.stats:
        record.extend([("wex", "%d -> %d" % (wex(sigma), wex(image))),
                       ("cr", "%d -> %d" % (cr(sigma), cr(image)))])
    return format_record(record, config.output_format)


def cmd_classes(args, config, parser):
    return rows_to_csv(format_class_csv_rows(args.blocks, cap=config.cap))


def cmd_verify(args, config, parser):
    verifier = Verifier.from_config(config, max_n=args.max_n)
    results = verifier.run(args.suite)
    args.failed = any(r.failed for r in results)
    return format_results(results, config.seed, config.output_format)


def _add_point(parser, help_suffix=""):
    for name in ("alpha", "beta", "q"):
        parser.add_argument("--%s" % name, type=_rational, default=None,
                            help="rational p or p/r%s" % help_suffix)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qlaguerre",
        description="Exact q-Laguerre and Al-Salam-Chihara polynomials, "
                    "moments and linearization coefficients.")
    parser.add_argument("--config", default=None,
                        help="INI file with a [qlaguerre] section")
    parser.add_argument("--format", dest="output_format", choices=FORMATS,
                        default=None, help="output format")
    parser.add_argument("--output", default=None,
                        help="write the report here instead of stdout")
    parser.add_argument("--cap", type=int, default=None,
                        help="largest n to enumerate permutations of")
    parser.add_argument("--workers", type=int, default=None,
                        help="parallel workers for enumeration and checks")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="debug logging on stderr")
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    p = commands.add_parser("moments", help="the moment mu_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=MOMENT_FAMILIES, default="laguerre")
    p.add_argument("--method", choices=MOMENT_METHODS, default="motzkin")
    _add_point(p, " (asc family)")
    p.set_defaults(handler=cmd_moments)

    p = commands.add_parser("poly", help="a polynomial of the family")
    p.add_argument("--family", choices=("laguerre", "asc", "classical"),
                   default="laguerre")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("recurrence", "explicit"),
                   default=None)
    _add_point(p)
    p.set_defaults(handler=cmd_poly)

    p = commands.add_parser("stirling", help="y-version q-Stirling numbers")
    p.add_argument("--kind", choices=("S", "s"), default="S")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--y", type=_rational, default=None)
    p.add_argument("--q", type=_rational, default=None)
    p.set_defaults(handler=cmd_stirling)

    p = commands.add_parser("linearize",
                            help="the linearization coefficient I")
    p.add_argument("--blocks", type=_blocks, required=True)
    p.add_argument("--method", choices=linearization.METHODS + ("enum", ),
                   default="functional")
    p.set_defaults(handler=cmd_linearize)

    p = commands.add_parser("bijection", help="apply Phi_k or Gamma")
    p.add_argument("--map", choices=("phi", "gamma"), required=True)
    p.add_argument("--sigma", type=_permutation, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n1", type=int, default=None)
    p.add_argument("--n2", type=int, default=None)
    p.add_argument("--stats", action="store_true",
                   help="also print (wex, cr) before and after")
    p.add_argument("--decompose", action="store_true",
                   help="print the crossing decomposition counters as CSV")
    p.set_defaults(handler=cmd_bijection)

    p = commands.add_parser("classes",
                            help="list a generalized derangement class")
    p.add_argument("--blocks", type=_blocks, required=True)
    p.set_defaults(handler=cmd_classes)

    p = commands.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all",
                   choices=("all", ) + tuple(Verifier.suites))
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(handler=cmd_verify)

    return parser


def setup_logging(verbose):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    try:
        config = load_config(args.config, cap=args.cap,
                             seed=getattr(args, "seed", None),
                             samples=getattr(args, "samples", None),
                             workers=args.workers,
                             output_format=args.output_format,
                             output=args.output)
    except ValueError as err:
        parser.error(str(err))

    args.failed = False
    try:
        text = args.handler(args, config, parser)
    except QLaguerreError as err:
        stderr.write("error: %s\n" % err)
        return 1
    except ValueError as err:
        parser.error(str(err))
    write_output(text, config.output, stdout)
    return 1 if args.failed else 0


if __name__ == '__main__':
    sys.exit(main())
