"""Command-line interface: ``poissoncolor {check,decompose,simple,example} ...``.

Exit status 0 means every requested assertion holds, 1 means a mathematical
check failed (or the requested verdict is negative or unavailable), 2 means
the input could not be read or validated.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from .errors import ParseError, UnknownExample
from .fileformat import TwoTorsionWarning, load_algebra, serialize_algebra
from .library import builtin_example, builtin_names
from .report import ReportOptions, render_text, run_report, to_json_text
from .scalars import QQ, GF

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _field_arg(text: str):
    if text in ("QQ", "Q", "rational"):
        return QQ
    try:
        return GF(int(text.removeprefix("GF").strip("()")))
    except ValueError:
        raise argparse.ArgumentTypeError(f"field must be QQ or a prime such as 5, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="json", help="output format")
    parser = argparse.ArgumentParser(prog="poissoncolor", description="Analyse finite-dimensional Poisson color algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[fmt], help="verify the defining identities")
    p.add_argument("file")

    p = sub.add_parser("decompose", parents=[fmt], help="run the full pipeline")
    p.add_argument("file")
    p.add_argument("--assume-hypotheses", action="store_true", help="assert conclusions even when hypotheses fail (unverified)")

    p = sub.add_parser("simple", parents=[fmt], help="decide simplicity")
    p.add_argument("file")
    p.add_argument("--method", choices=("oracle", "criterion"), default="oracle")
    p.add_argument("--assume-hypotheses", action="store_true", help="apply the criterion without checking its hypotheses (unverified)")

    p = sub.add_parser("example", help="print a built-in algebra as a definition file")
    p.add_argument("name", help="one of: " + ", ".join(builtin_names()))
    p.add_argument("--field", type=_field_arg, default=QQ, help="QQ (default) or a prime p")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    if args.command == "example":
        try:
            A = builtin_example(args.name, args.field)
        except UnknownExample as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return EXIT_INPUT
        out.write(serialize_algebra(A))
        return EXIT_OK

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", TwoTorsionWarning)
        try:
            A = load_algebra(args.file, decomposition_analysis=args.command == "decompose")
        except OSError as exc:
            print(f"error: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
            return EXIT_INPUT
        except ParseError as exc:
            kind = type(exc).__name__
            print(f"error: {kind} at {exc.path or '/'}: {exc.message}", file=sys.stderr)
            return EXIT_INPUT
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)

    options = ReportOptions(
        stage=args.command,
        method=getattr(args, "method", "oracle"),
        assume_hypotheses=getattr(args, "assume_hypotheses", False),
    )
    report = run_report(A, options)
    out.write(to_json_text(report) if args.format == "json" else render_text(report))
    return EXIT_OK if report["ok"] else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
