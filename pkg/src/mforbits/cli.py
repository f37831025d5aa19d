"""Command-line interface.

    mforbits pair        --family su --p 2 --q 3
    mforbits sequences   --family sp_r --n 3 --format json
    mforbits restricted  --family sopq --p 3 --q 4 --branch tau
    mforbits ktypes      --family su --p 2 --q 2 --i 2 --t-max 3
    mforbits hilbert     --family su --p 2 --q 3 --i 1 --t-max 8
    mforbits geometry    --family su --p 2 --q 3 --i 1
    mforbits hasse       --family sp_r --n 2 --format dot
    mforbits conformance --grid default --jobs 4

Exit codes: 0 ok, 1 contract error (or unexpected FAIL row), 2 bad parameters,
3 term budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from mforbits import conformance as conf
from mforbits.errors import MforbitsError, ParameterError, UnsupportedError
from mforbits.hasse import emit_dot, hasse_graph
from mforbits.hilbert import (
    DEFAULT_TERM_BUDGET,
    degree_brute_force,
    degree_closed,
    hilbert_polynomial,
    hilbert_values,
)
from mforbits.ktypes import filtration_layer, open_orbit_box, ruling_case, spec_for, tuple_degree
from mforbits.pairs import KINDS, FamilyId, build_pair, highest_noncompact_weight, to_fundamental_display
from mforbits.restricted import CLASSES, restrict, signature_string
from mforbits.rootsys import weyl_dim
from mforbits.soseq import default_sequence, maximal_sequences

COMMANDS = ("pair", "sequences", "restricted", "ktypes", "hilbert", "geometry", "hasse", "conformance")
FORMATS = ("json", "csv", "dot", "text")
GRIDS = {
    "default": conf.DEFAULT_GRID,
    "acceptance": conf.ACCEPTANCE_GRID,
    "diagrams": conf.DIAGRAM_GRID,
    "empty": (),
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: FamilyId | None = None
    i: int | None = None
    t_max: int = 10
    fmt: str = "text"
    term_budget: int = DEFAULT_TERM_BUDGET
    branch: str | None = None
    grid: str = "default"
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ParameterError(f"unknown command {self.command!r}")
        if self.fmt not in FORMATS:
            raise ParameterError(f"unknown format {self.fmt!r}")
        if self.command != "conformance" and self.family is None:
            raise ParameterError(f"{self.command} needs --family")
        if self.i is not None and self.i < 0:
            raise ParameterError("--i must be nonnegative")
        if self.t_max < 0:
            raise ParameterError("--t-max must be nonnegative")
        if self.term_budget <= 0:
            raise ParameterError("--term-budget must be positive")
        if self.jobs < 1:
            raise ParameterError("--jobs must be at least 1")
        if self.fmt == "dot" and self.command != "hasse":
            raise ParameterError("dot output is only available for hasse")


# ---------------------------------------------------------------------------
# serialization


def rat(x) -> dict[str, str]:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rat_text(x) -> str:
    return str(Fraction(x))


def weight_json(w) -> list[dict[str, str]]:
    return [rat(c) for c in w.coords]


def weight_text(w) -> str:
    return "(" + ", ".join(rat_text(c) for c in w.coords) + ")"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# commands


def _sequence_json(pair, seq) -> dict:
    return {
        "branch": seq.branch,
        "length": len(seq),
        "gammas": [
            {"eps": weight_json(g), "omega": to_fundamental_display(pair, g)} for g in seq.gammas
        ],
    }


def _sequences(cfg: RunConfig, pair):
    if cfg.branch is None:
        return maximal_sequences(pair)
    return maximal_sequences(pair, cfg.branch)


def _prefixes(cfg: RunConfig, seq) -> list[int]:
    if cfg.i is None:
        return list(range(1, len(seq) + 1))
    if not 1 <= cfg.i <= len(seq):
        raise ParameterError(f"--i must satisfy 1 <= i <= {len(seq)}")
    return [cfg.i]


def cmd_pair(cfg: RunConfig) -> str:
    pair = build_pair(cfg.family)
    beta = highest_noncompact_weight(pair)
    if cfg.fmt == "json":
        return _dump({
            "family": cfg.family.label(),
            "hermitian": pair.hermitian,
            "ambient_dim": pair.dim,
            "k_positive_roots": [weight_json(a) for a in pair.K.positive_roots],
            "rho_k": weight_json(pair.K.rho),
            "p_weights": [
                {"weight": weight_json(w), "mult": m} for w, m in sorted(pair.p_weights.items())
            ],
            "beta": {"eps": weight_json(beta), "omega": to_fundamental_display(pair, beta)},
        })
    if cfg.fmt == "csv":
        return _csv(["weight", "mult"], [(weight_text(w), m) for w, m in sorted(pair.p_weights.items())])
    lines = [
        f"{cfg.family.label()}  hermitian={pair.hermitian}  ambient dim={pair.dim}",
        f"|Delta+(k)| = {len(pair.K.positive_roots)}  dim p = {pair.p_dim()}",
        f"highest noncompact weight {weight_text(beta)} = {to_fundamental_display(pair, beta)}",
    ]
    return "\n".join(lines) + "\n"


def cmd_sequences(cfg: RunConfig) -> str:
    pair = build_pair(cfg.family)
    seqs = _sequences(cfg, pair)
    if cfg.fmt == "json":
        return _dump({"family": cfg.family.label(), "sequences": [_sequence_json(pair, s) for s in seqs]})
    if cfg.fmt == "csv":
        rows = [
            (s.branch, k, j + 1, weight_text(g), to_fundamental_display(pair, g))
            for k, s in enumerate(seqs)
            for j, g in enumerate(s.gammas)
        ]
        return _csv(["branch", "sequence", "j", "eps", "omega"], rows)
    lines = []
    for s in seqs:
        shown = ", ".join(to_fundamental_display(pair, g) for g in s.gammas)
        lines.append(f"[{s.branch}] length {len(s)}: {shown}")
    return "\n".join(lines) + "\n"


def cmd_restricted(cfg: RunConfig) -> str:
    pair = build_pair(cfg.family)
    seqs = _sequences(cfg, pair)
    out = []
    for s in seqs:
        rs = restrict(s, cfg.i)
        out.append((s, rs))
    if cfg.fmt == "json":
        return _dump({
            "family": cfg.family.label(),
            "systems": [
                {
                    "branch": s.branch,
                    "i": rs.i,
                    "signature": signature_string(rs),
                    "mults": rs.mults,
                    "zero_count": rs.zero_count,
                    "restricted_roots": [
                        {"root": [rat(c) for c in v], "mult": m} for v, m in rs.restricted_roots
                    ],
                }
                for s, rs in out
            ],
        })
    if cfg.fmt == "csv":
        return _csv(["branch", "i"] + list(CLASSES), [[s.branch, rs.i] + list(rs.signature) for s, rs in out])
    return "\n".join(f"[{s.branch}] i={rs.i}: {signature_string(rs)}" for s, rs in out) + "\n"


def cmd_ktypes(cfg: RunConfig) -> str:
    pair = build_pair(cfg.family)
    seq = default_sequence(pair, cfg.branch)
    i = cfg.i if cfg.i is not None else len(seq)
    if not 0 <= i <= len(seq):
        raise ParameterError(f"--i must satisfy 0 <= i <= {len(seq)}")
    rs = restrict(seq)
    spec = spec_for(rs, i)
    entries = []
    for a in filtration_layer(spec, cfg.t_max):
        lam = seq.prefix(i).combination(a) if i else pair.K.rho * 0
        entries.append((a, tuple_degree(spec, a), lam, weyl_dim(lam, pair.K)))
    if cfg.fmt == "json":
        return _dump({
            "family": cfg.family.label(),
            "i": i,
            "ruling_case": ruling_case(rs, i) if i else "standard",
            "t_max": cfg.t_max,
            "ktypes": [
                {"coeffs": list(a), "degree": d, "weight": weight_json(lam), "dim": n}
                for a, d, lam, n in entries
            ],
        })
    if cfg.fmt == "csv":
        return _csv(["coeffs", "degree", "weight", "dim"], [(list(a), d, weight_text(lam), n) for a, d, lam, n in entries])
    lines = [f"{cfg.family.label()} i={i} ruling={spec.sigma_class}: {len(entries)} K-types of degree <= {cfg.t_max}"]
    lines += [f"  {a}  deg {d}  dim {n}" for a, d, lam, n in entries]
    if spec.sigma_class == "hermitian_an_An":
        extra = len(open_orbit_box(spec_for(rs, i, closure=False), 2)) - len(open_orbit_box(spec, 2))
        lines.append(f"  open orbit admits {extra} more tuples than the closure in the box |a_j| <= 2")
    return "\n".join(lines) + "\n"


def cmd_hilbert(cfg: RunConfig) -> str:
    pair = build_pair(cfg.family)
    seq = default_sequence(pair, cfg.branch)
    i = _prefixes(cfg, seq)[-1]
    values = hilbert_values(seq, i, cfg.t_max)
    poly = hilbert_polynomial(seq, i)
    if cfg.fmt == "json":
        return _dump({
            "family": cfg.family.label(),
            "i": i,
            "values": values,
            "polynomial": [rat(c) for c in poly.coefficients],
            "dim": poly.degree,
        })
    if cfg.fmt == "csv":
        return _csv(["t", "h(t)", "P(t)"], [(t, v, rat_text(poly(t))) for t, v in enumerate(values)])
    lines = [f"{cfg.family.label()} i={i}: Hilbert polynomial of degree {poly.degree}"]
    lines += [f"  t={t}: {v}" for t, v in enumerate(values)]
    return "\n".join(lines) + "\n"


def _geometry(cfg: RunConfig, seq, i: int) -> dict:
    bf = degree_brute_force(seq, i)
    try:
        cl = degree_closed(seq, i, cfg.term_budget)
    except UnsupportedError as exc:
        cl, note = None, str(exc)
    else:
        note = ""
    return {
        "i": i,
        "dim": bf.dim,
        "leading_coeff": bf.leading_coeff,
        "degree": bf.degree,
        "degree_closed": None if cl is None else cl.degree,
        "routes_agree": None if cl is None else (cl.degree == bf.degree and cl.dim == bf.dim),
        "note": note,
    }


def cmd_geometry(cfg: RunConfig) -> str:
    pair = build_pair(cfg.family)
    seq = default_sequence(pair, cfg.branch)
    rows = [_geometry(cfg, seq, i) for i in _prefixes(cfg, seq)]
    if cfg.fmt == "json":
        conv = lambda v: rat(v) if isinstance(v, Fraction) else v
        return _dump({
            "family": cfg.family.label(),
            "branch": seq.branch,
            "orbits": [{k: conv(v) for k, v in r.items()} for r in rows],
        })
    if cfg.fmt == "csv":
        header = ["i", "dim", "leading_coeff", "degree", "degree_closed", "routes_agree"]
        return _csv(header, [[r[k] if not isinstance(r[k], Fraction) else rat_text(r[k]) for k in header] for r in rows])
    lines = []
    for r in rows:
        agree = "n/a" if r["routes_agree"] is None else str(r["routes_agree"]).lower()
        lines.append(f"{cfg.family.label()} i={r['i']}: dim {r['dim']}, degree {r['degree']}, routes agree: {agree}")
    return "\n".join(lines) + "\n"


def cmd_hasse(cfg: RunConfig) -> str:
    g = hasse_graph(cfg.family)
    if cfg.fmt == "dot":
        return emit_dot(g)
    ids = {node: k for k, node in enumerate(g.nodes)}
    if cfg.fmt == "json":
        return _dump({
            "family": cfg.family.label(),
            "nodes": [{"id": ids[n], "label": n.label} for n in g.nodes],
            "edges": [{"from": ids[a], "to": ids[b], "double": d} for a, b, d in g.edges],
        })
    if cfg.fmt == "csv":
        return _csv(["from", "to", "double"], [(a.label, b.label, d) for a, b, d in g.edges])
    lines = [f"{cfg.family.label()}: {len(g.nodes)} orbits, {len(g.edges)} closure edges"]
    lines += [f"  {a.label} -> {b.label}{'  (double)' if d else ''}" for a, b, d in g.edges]
    return "\n".join(lines) + "\n"


def cmd_conformance(cfg: RunConfig) -> tuple[str, int]:
    grid = (cfg.family,) if cfg.family is not None else GRIDS[cfg.grid]
    rows = conf.run_conformance(grid, jobs=cfg.jobs)
    counts = conf.summarize(rows)
    code = 1 if counts[conf.FAIL] else 0
    if cfg.fmt == "json":
        return _dump({"summary": counts, "rows": [conf.row_dict(r) for r in rows]}), code
    if cfg.fmt == "csv":
        fields = ["instance", "check", "status", "expected", "computed", "note"]
        return _csv(fields, [[conf.row_dict(r)[f] for f in fields] for r in rows]), code
    body = "".join(r.line() + "\n" for r in rows)
    return body + " ".join(f"{k}={v}" for k, v in counts.items()) + "\n", code


HANDLERS = {
    "pair": cmd_pair,
    "sequences": cmd_sequences,
    "restricted": cmd_restricted,
    "ktypes": cmd_ktypes,
    "hilbert": cmd_hilbert,
    "geometry": cmd_geometry,
    "hasse": cmd_hasse,
}


def run(cfg: RunConfig) -> tuple[str, int]:
    if cfg.command == "conformance":
        return cmd_conformance(cfg)
    return HANDLERS[cfg.command](cfg), 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mforbits", description="Multiplicity-free nilpotent K-orbits of classical symmetric pairs.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--family", choices=KINDS, required=name != "conformance")
        p.add_argument("--n", type=int)
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--i", type=int)
        p.add_argument("--t-max", type=int, default=10)
        p.add_argument("--format", choices=FORMATS, default="text", dest="fmt")
        p.add_argument("--term-budget", type=int, default=DEFAULT_TERM_BUDGET)
        p.add_argument("--branch")
        if name == "conformance":
            p.add_argument("--grid", choices=sorted(GRIDS), default="default")
            p.add_argument("--jobs", type=int, default=1)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    family = None
    if args.family is not None:
        params = {k: getattr(args, k) for k in ("n", "p", "q") if getattr(args, k) is not None}
        family = FamilyId.make(args.family, **params)
    return RunConfig(
        command=args.command,
        family=family,
        i=args.i,
        t_max=args.t_max,
        fmt=args.fmt,
        term_budget=args.term_budget,
        branch=args.branch,
        grid=getattr(args, "grid", "default"),
        jobs=getattr(args, "jobs", 1),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        text, code = run(cfg)
    except MforbitsError as exc:
        if args.fmt == "json":
            sys.stdout.write(_dump({"error": {"kind": exc.kind, "message": str(exc), "exit_code": exc.exit_code}}))
        else:
            print(f"mforbits: {exc.kind} error: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
