"""Tabulate (q, r, s), dimension and degree per instance and prefix length as CSV.

Dimension and degree come from the brute-force Hilbert polynomial; the closed
form degree is listed next to it (empty where the closed form does not apply).

    python3 scripts/qrs_csv.py > qrs.csv
"""

from __future__ import annotations

import csv
import sys

from mforbits import conformance as conf
from mforbits.errors import UnsupportedError
from mforbits.hilbert import degree_brute_force, degree_closed
from mforbits.pairs import build_pair
from mforbits.restricted import qrs_constants, restrict, signature_string
from mforbits.soseq import default_sequence


def rows(grid=conf.DEFAULT_GRID):
    for family in grid:
        seq = default_sequence(build_pair(family))
        rs = restrict(seq)
        for i in range(1, len(seq) + 1):
            qrs = qrs_constants(rs, i)
            bf = degree_brute_force(seq, i)
            try:
                closed = str(degree_closed(seq, i).degree)
            except UnsupportedError:
                closed = ""
            yield [family.label(), seq.branch, signature_string(rs), i, qrs.q, qrs.r, qrs.s, bf.dim, bf.degree, closed]


def main() -> int:
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["instance", "branch", "signature", "i", "q", "r", "s", "dim", "degree", "degree_closed"])
    for row in rows():
        out.writerow(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
