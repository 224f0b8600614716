"""Command line front end: `strobosol-plot <kind> --spec <file>`.

Exit codes follow the simulator CLI: 0 success, 1 spec or data
validation, 2 unexpected runtime failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .figures import PLOTTERS
from .plotspec import KINDS, PlotDataError, PlotSpecError, parse_plot_spec

EXIT_OK = 0
EXIT_SPEC = 1
EXIT_RUNTIME = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strobosol-plot",
        description="Render figures from strobosol trajectory CSV files.",
    )
    sub = parser.add_subparsers(dest="kind", required=True)
    for kind in KINDS:
        cmd = sub.add_parser(kind, help=f"render a {kind} figure")
        cmd.add_argument(
            "--spec", required=True, type=Path, help="plot spec file"
        )
        cmd.add_argument(
            "--quiet", action="store_true", help="suppress the output listing"
        )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = parse_plot_spec(args.spec)
        if spec.kind and spec.kind != args.kind:
            raise PlotSpecError(
                f"spec file says kind = {spec.kind}, command asks for {args.kind}"
            )
        written = PLOTTERS[args.kind](spec)
    except (PlotSpecError, PlotDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except Exception as exc:  # noqa: BLE001 - keep the CLI contract
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    if not args.quiet:
        for path in written:
            print(path)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
