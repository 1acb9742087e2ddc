"""figures render --panel 1b --in DIR --out FILE"""
from __future__ import annotations

import argparse
import sys

import matplotlib

matplotlib.use("Agg")

from .errors import FiguresError
from .render import PANELS, build_spec, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="figures",
                                     description="Render publication panels from solver CLI outputs.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render one panel")
    p.add_argument("--panel", required=True, choices=PANELS)
    p.add_argument("--in", dest="in_dir", required=True,
                   help="directory holding the CLI outputs for this panel")
    p.add_argument("--out", required=True, help="output image (vector: .svg/.pdf)")
    args = parser.parse_args(argv)
    try:
        spec = build_spec(args.panel, args.in_dir, args.out)
        render(spec)
    except FiguresError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
