"""Run the conformance report over a grid and write it as text, JSON or CSV.

    python3 scripts/conformance_report.py --grid default --jobs 4 --out report.txt
"""

from __future__ import annotations

import argparse
import sys
import time

from mforbits.cli import RunConfig, cmd_conformance


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grid", choices=("default", "acceptance", "diagrams"), default="default")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    ap.add_argument("--out", help="output file (default stdout)")
    args = ap.parse_args(argv)
    start = time.perf_counter()
    cfg = RunConfig(command="conformance", fmt=args.fmt, grid=args.grid, jobs=args.jobs)
    text, code = cmd_conformance(cfg)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(f"# {args.grid} grid in {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
