# main.py
# Add project root to Python path
import os
import sys
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.append(project_root)
import argparse
import json

import config
from harness.event_logger import EventLogger
from harness.grid_runner import GridRunner, GridSpec
from harness.identity_verifier import IDENTITY_ALIASES, IDENTITY_IDS, IdentityVerifier
from harness.report_generator import ReportGenerator
from jackson.integrands import FAMILIES, FAMILY_ALIASES, build_integrand
from jackson.jackson_integral import jackson_bruteforce, jackson_partition_sum, jackson_two_block
from utils.errors import UsageError
from utils.logger import logger
from youngbooks.staircase_poset import build_poset
from youngbooks.young_book import enumerate_young_books, maj_gf

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _ArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting, so cli_main owns the exit code."""

    def error(self, message):
        raise UsageError(message)


def _int_or_text(value):
    # '1' -> 1, '1,0' stays a composition string
    return value if "," in value else int(value)


def build_parser():
    common = _ArgumentParser(add_help=False)
    common.add_argument("--K", type=int, default=None, help="compare modulo q^(K+1)")
    common.add_argument("--guard-n", type=int, default=None, help="largest Young-book poset size")
    common.add_argument("--format", choices=("json", "table"), default=None)
    common.add_argument("--out", default=None, help="also write the output to this file")

    shape = _ArgumentParser(add_help=False)
    shape.add_argument("--n", type=int)
    shape.add_argument("--r", type=_int_or_text, help="integer or composition such as 1,0")
    shape.add_argument("--s", type=_int_or_text, help="integer or composition such as 0,1")

    parser = _ArgumentParser(prog="main.py", description="Exact q-series identities: Young books, Jackson integrals, characters.")
    commands = parser.add_subparsers(dest="command", required=True)

    yb = commands.add_parser("yb", help="Young books of a staircase poset")
    yb_commands = yb.add_subparsers(dest="yb_command", required=True)
    enum = yb_commands.add_parser("enumerate", parents=[common, shape])
    enum.add_argument("--limit", type=int, default=None, help="stop after this many books")
    majgf = yb_commands.add_parser("majgf", parents=[common, shape])
    majgf.add_argument("--method", choices=("dp", "enumerate"), default="dp")

    integral = commands.add_parser("integral", help="Jackson integrals")
    integral_commands = integral.add_subparsers(dest="integral_command", required=True)
    evaluate = integral_commands.add_parser("eval", parents=[common, shape])
    evaluate.add_argument("--family", choices=FAMILIES + tuple(FAMILY_ALIASES), required=True)
    evaluate.add_argument("--m", type=int, default=1)
    evaluate.add_argument("--l", type=int, default=0)
    evaluate.add_argument("--method", choices=("partition", "lattice"), default="partition")

    verify = commands.add_parser("verify", parents=[common, shape], help="check one identity")
    verify.add_argument("identity", choices=IDENTITY_IDS + list(IDENTITY_ALIASES))
    verify.add_argument("--m", type=int)
    verify.add_argument("--l", type=int)
    verify.add_argument("--N", type=int)
    verify.add_argument("--mu")
    verify.add_argument("--lam")
    verify.add_argument("--family", choices=FAMILIES)

    grid = commands.add_parser("verify-grid", parents=[common], help="check a parameter grid")
    grid.add_argument("--spec", default=config.DEFAULT_GRID_SPEC)
    return parser


def _emit(text, out):
    print(text)
    if out:
        if ReportGenerator().save_report_to_file(text, out) is None:
            raise UsageError(f"Could not write {out}")


def _require(args, *names):
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"Missing required options: {', '.join('--' + m for m in missing)}")


def run_yb(args):
    _require(args, "n", "r", "s")
    poset = build_poset(args.n, args.r, args.s)
    if args.yb_command == "majgf":
        series = maj_gf(poset, method=args.method, guard=args.guard_n)
        if args.format == "json":
            _emit(json.dumps({"poset": poset.params(), "N": poset.size, "maj_gf": series.to_json()}), args.out)
        else:
            _emit(str(series), args.out)
        return EXIT_PASS
    books = []
    for book in enumerate_young_books(poset, guard=args.guard_n):
        books.append(book)
        if args.limit is not None and len(books) >= args.limit:
            break
    if (args.format or config.OUTPUT_FORMAT) == "table":
        lines = [f"{index + 1}: maj={book.maj()} descents={sorted(book.descents())}" for index, book in enumerate(books)]
        _emit("\n".join(lines), args.out)
    else:
        payload = [dict(book.to_json(), maj=book.maj(), descents=sorted(book.descents())) for book in books]
        _emit(json.dumps(payload), args.out)
    return EXIT_PASS


def run_integral(args):
    _require(args, "n")
    K = config.DEFAULT_K if args.K is None else args.K
    r = 0 if args.r is None else args.r
    s = 0 if args.s is None else args.s
    integrand = build_integrand(args.family, args.n, r=r, s=s, m=args.m, l=args.l)
    trunc = 2 * K + 1 if args.family.startswith("variant") else 2 * K + 2
    if args.method == "lattice":
        series = jackson_bruteforce(integrand, integrand.arity, K, trunc_twice=trunc)
    elif args.family == "rational":
        series = jackson_two_block(integrand, args.n, args.m, K, trunc_twice=trunc)
    else:
        series = jackson_partition_sum(integrand, args.n, K, trunc_twice=trunc)
    if args.format == "table":
        _emit(str(series), args.out)
    else:
        payload = {"family": args.family, "params": integrand.get_params(), "K": K, "series": series.to_json()}
        _emit(json.dumps(payload), args.out)
    return EXIT_PASS


def run_verify(args):
    names = ("n", "m", "l", "r", "s", "N", "mu", "lam", "family", "K")
    params = {name: getattr(args, name) for name in names if getattr(args, name) is not None}
    verifier = IdentityVerifier(guard_n=args.guard_n)
    report = verifier.verify(args.identity, **params)
    _emit(ReportGenerator().render([report], args.format), args.out)
    return EXIT_PASS if report.passed else EXIT_FAIL


def run_grid(args):
    spec = GridSpec.from_json(args.spec)
    if args.K is not None:
        spec.K = args.K
    if args.guard_n is not None:
        spec.guard_n = args.guard_n
    runner = GridRunner(event_logger=EventLogger())
    results = runner.run_grid(spec)
    report_generator = ReportGenerator()
    print(report_generator.generate_report(results))
    out = args.out or os.path.join(config.REPORT_DIR, "verify_grid.json")
    output = report_generator.render(results['reports'], args.format)
    if report_generator.save_report_to_file(output, out) is None:
        raise UsageError(f"Could not write {out}")
    if results['errors']:
        return EXIT_USAGE
    return EXIT_PASS if results['failed'] == 0 else EXIT_FAIL


def cli_main(argv=None):
    """
    Runs one CLI command.
    Args:
        argv (list, optional): Arguments without the program name. Defaults to sys.argv[1:].
    Returns:
        int: 0 when everything passed, 1 on a failed identity, 2 on usage or domain errors.
    """
    try:
        args = build_parser().parse_args(argv)
        handlers = {"yb": run_yb, "integral": run_integral, "verify": run_verify, "verify-grid": run_grid}
        return handlers[args.command](args)
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_PASS
    except (ValueError, ArithmeticError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(cli_main())
