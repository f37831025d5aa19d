"""Cross-checks of computed data against the tabulated reference values.

Every check yields a Row with status PASS, FAIL, ERRATUM or UNSUPPORTED.
A mismatch is reported as ERRATUM only when the (family, check) pair is in
the known-errata registry and the brute-force Hilbert data refutes the
tabulated value; any other mismatch is a FAIL.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from mforbits.errors import MforbitsError, UnsupportedError
from mforbits.hasse import chain_branches, chain_labels, double_chains, hasse_graph
from mforbits.hilbert import (
    degree_brute_force,
    degree_closed,
    degree_displayed_formula,
    degree_from_signature,
    selberg_degree,
    simplex_integral,
)
from mforbits.pairs import FamilyId, build_pair, highest_noncompact_weight, to_fundamental_display
from mforbits.restricted import (
    dim_formula,
    normalized_signature,
    qrs_constants,
    qrs_from_mults,
    restrict,
    signature_string,
)
from mforbits.rootsys import Weight
from mforbits.soseq import SOSequence, default_sequence, sequence_branches, sequence_length_law

PASS, FAIL, ERRATUM, UNSUPPORTED = "PASS", "FAIL", "ERRATUM", "UNSUPPORTED"


@dataclass(frozen=True)
class Row:
    instance: str
    check: str
    status: str
    expected: str = ""
    computed: str = ""
    note: str = ""

    def line(self) -> str:
        text = f"{self.status:<11} {self.instance:<14} {self.check:<26} expected={self.expected} computed={self.computed}"
        return text + (f"  [{self.note}]" if self.note else "")


def _f(kind, **params) -> FamilyId:
    return FamilyId.make(kind, **params)


ACCEPTANCE_GRID = (
    _f("su", p=2, q=3), _f("su", p=2, q=4), _f("su", p=3, q=3),
    _f("sp_r", n=2), _f("sp_r", n=3),
    _f("sl_r", n=4), _f("sl_r", n=5),
    _f("sl_h", n=2), _f("sl_h", n=3),
    _f("so2q", q=5), _f("so2q", q=6),
    _f("sopq", p=3, q=4), _f("sopq", p=3, q=5),
    _f("sostar", n=3), _f("sostar", n=4),
    _f("sppq", p=1, q=2), _f("sppq", p=2, q=2),
)

DIAGRAM_GRID = (
    _f("sl_r", n=4), _f("sl_r", n=5), _f("su", p=2, q=4), _f("sl_h", n=2), _f("sl_h", n=3),
    _f("so2q", q=6), _f("sostar", n=4), _f("sp_r", n=2), _f("sppq", p=2, q=3),
)

DEFAULT_GRID = ACCEPTANCE_GRID + (_f("sppq", p=2, q=3),)

# (nodes, edges) of the closure diagrams, counted off the drawn templates
DIAGRAM_COUNTS = {
    "SL(4,R)": (4, 3), "SL(5,R)": (3, 2), "SU(2,4)": (11, 14), "SL(2,H)": (2, 1),
    "SL(3,H)": (2, 1), "SO(2,6)": (7, 7), "SO*(8)": (7, 7), "Sp(2,R)": (6, 6),
    "Sp(2,3)": (6, 6),
}

# Known misprints: (family kind, check) -> description. A registered mismatch is
# only downgraded to ERRATUM when brute-force data contradicts the table.
ERRATA = {
    ("sostar", "tabulated_sigma"): "tabulated (b)^2(d)^4; computed (a)^4, plus (b)^2 for odd n",
    ("so2q", "tabulated_sigma"): "tabulated A-class; the restrictions are (gamma_1 - gamma_2)/2, an a-class",
    ("sl_h", "tabulated_sigma"): "odd n has an extra (b)^4 class",
    ("sostar", "gamma1_display"): "tabulated omega_1; the highest weight of Lambda^2 is omega_2",
    ("sl_r", "tabulated_qrs"): "odd n: q misses the b-class contribution",
    ("sl_r", "tabulated_dim"): "odd n: dimension misses the b-class contribution",
    ("sl_h", "tabulated_qrs"): "odd n: q misses the b-class contribution",
    ("sl_h", "tabulated_dim"): "odd n: dimension misses the b-class contribution",
    ("sostar", "tabulated_qrs"): "row follows the tabulated signature",
    ("sostar", "tabulated_dim"): "row follows the tabulated signature",
    ("so2q", "tabulated_dim"): "tabulated dimension is negative at i = 1",
    ("sppq", "tabulated_dim"): "true dimension is i(2p+2q-2i+1)",
    ("*", "displayed_degree_formula"): "extra product over all positive roots and division by dim!",
}


def _erratum_note(kind: str, check: str) -> str | None:
    check = check.split("[")[0]
    return ERRATA.get((kind, check)) or ERRATA.get(("*", check))


# ---------------------------------------------------------------------------
# Reference values


def reference_signature(family: FamilyId) -> list[dict[str, int]]:
    """Tabulated signatures (a list only for the two tau orientations)."""
    k, n, p, q = family.kind, family.n, family.p, family.q
    if k == "sl_r":
        return [{"d": 1} if n % 2 == 0 else {"b": 1, "d": 1}]
    if k == "sl_h":
        return [{"C": 3, "d": 4}]
    if k == "su":
        return [{"a": 2, "b": q - p}]
    if k == "so2q":
        return [{"A": q - 2}]
    if k == "sostar":
        return [{"b": 2, "d": 4}]
    if k == "sp_r":
        return [{"a": 1}]
    if k == "sppq":
        return [{"b": 2 * (q - p), "C": 2, "d": 2}]
    raise UnsupportedError(f"use reference_signature_branch for {family}")


def reference_signature_branch(family: FamilyId, branch: str) -> list[dict[str, int]]:
    if family.kind != "sopq":
        return reference_signature(family)
    p, q = family.p, family.q
    if branch == "sigma":
        return [{"b": q - p + 2 * (p % 2), "d": 2}]
    return [{"a11+": p - 2, "a11-": q - 2}, {"a11+": q - 2, "a11-": p - 2}]


def reference_gamma1(family: FamilyId) -> str | None:
    k, n, p, q = family.kind, family.n, family.p, family.q
    if k == "su":
        return "ω_1+" + _om(p + q - 1)
    if k == "sp_r":
        return "2ω_1"
    if k == "sl_h":
        return "ω_2"
    if k == "so2q":
        return "ω_1"
    if k == "sostar":
        return "ω_1"
    if k == "sppq":
        return "ω_1+" + _om(p + 1)
    if k == "sl_r":
        return "2ω_1+2ω_2" if n == 4 else "2ω_1"
    return None


def _om(j: int) -> str:
    return f"ω_{j}" if j < 10 else f"ω_{{{j}}}"


def reference_row(family: FamilyId, i: int) -> dict[str, Fraction] | None:
    k, n, p, q = family.kind, family.n, family.p, family.q
    F = Fraction
    if k == "sl_r":
        N = n // 2
        return dict(dim=F(i * (2 * N - i)), q=F(2 * (N - i)), r=F(0), s=F(1))
    if k == "sl_h":
        N = n // 2
        return dict(dim=F(4 * i * (2 * N - i)), q=F(8 * (N - i) + 3), r=F(0), s=F(4))
    if k == "su":
        return dict(dim=F(i * (p + q - i)), q=F(p + q - 2 * i), r=F(2), s=F(0))
    if k == "so2q":
        return dict(dim=F(i * (i * (2 - q) + q - 4), 2), q=F((q - 2) * (2 - i)), r=F(q - 2), s=F(0))
    if k == "sopq":
        return dict(dim=F(i * (p + q - 2 * i - 1)), q=F(p + q - 4 * i), r=F(0), s=F(2))
    if k == "sostar":
        N = n // 2
        return dict(dim=F(i * (8 * N - 4 * i - 1)), q=F(8 * (N - i) + 2), r=F(0), s=F(4))
    if k == "sp_r":
        return dict(dim=F(i * (2 * n - i + 1), 2), q=F(n - i), r=F(1), s=F(0))
    if k == "sppq":
        return dict(dim=F(2 * i * (p + q - i + 1)), q=F(2 * (p + q - 2 * i + 1)), r=F(0), s=F(2))
    return None


# ---------------------------------------------------------------------------
# Checks


def _fmt_sig(sig: dict[str, int]) -> str:
    return "{" + ",".join(f"{c}:{m}" for c, m in sig.items()) + "}"


class _Rows:
    def __init__(self, instance: str, kind: str):
        self.instance, self.kind, self.rows = instance, kind, []

    def add(self, check, ok, expected="", computed="", refuted=False, note=""):
        if ok:
            status = PASS
        else:
            known = _erratum_note(self.kind, check)
            status = ERRATUM if (known and refuted) else FAIL
            note = note or (known or "")
        self.rows.append(Row(self.instance, check, status, str(expected), str(computed), note))

    def unsupported(self, check, note):
        self.rows.append(Row(self.instance, check, UNSUPPORTED, note=note))

    def failed(self, check, exc):
        self.rows.append(Row(self.instance, check, FAIL, note=f"{type(exc).__name__}: {exc}"))


def _brute(seq: SOSequence, i: int):
    return degree_brute_force(seq, i)


def _sigma_checks(out: _Rows, family: FamilyId, branch: str, seqs) -> None:
    rs_list = [restrict(s) for s in seqs]
    n = len(seqs[0])
    sigs = {signature_string(rs) for rs in rs_list}
    if branch != "tau":
        out.add(f"branch_consistency[{branch}]", len(sigs) == 1, "single signature", sorted(sigs))
    expected = reference_signature_branch(family, branch)
    exp_norm = [normalized_signature(e, n) for e in expected]
    for seq, rs in zip(seqs, rs_list):
        got = normalized_signature(rs.mults, n)
        ok = got in exp_norm
        refuted = False
        if not ok:
            refuted = _tabulated_sigma_refuted(seq, expected[0])
        out.add(
            f"tabulated_sigma[{branch}]" if branch != "main" else "tabulated_sigma",
            ok,
            " or ".join(_fmt_sig(e) for e in exp_norm),
            signature_string(rs),
            refuted,
        )
        if branch == "sigma" and len(seqs) > 1:
            # the tabulated entry covers all sign choices; report one row
            break


def _tabulated_sigma_refuted(seq: SOSequence, table_mults: dict[str, int]) -> bool:
    """True when the tabulated signature predicts a dimension or degree that the
    brute-force Hilbert polynomial contradicts for some prefix length."""
    n = len(seq)
    for i in range(1, n + 1):
        bf = _brute(seq, i)
        qrs = qrs_from_mults(table_mults, n, i)
        if dim_formula(qrs.q, qrs.r, qrs.s, i) != bf.dim:
            return True
        try:
            if degree_from_signature(seq, i, table_mults).degree != bf.degree:
                return True
        except UnsupportedError:
            pass
    return False


def _geometry_checks(out: _Rows, family: FamilyId, seq: SOSequence, label: str) -> None:
    n = len(seq)
    for i in range(1, n + 1):
        tag = f"[{label}i={i}]"
        bf = _brute(seq, i)
        table = reference_row(family, i) if seq.branch != "tau" else None
        if seq.branch == "tau":
            for check in ("tabulated_qrs", "tabulated_dim", "dim_oracle"):
                out.unsupported(check + tag, "no tabulated row for tau sequences")
        else:
            qrs = qrs_constants(restrict(seq), i)
            got = dict(q=qrs.q, r=qrs.r, s=qrs.s)
            keys = ("q", "r", "s") if i >= 2 else ("q",)
            exp = {k: table[k] for k in keys}
            ok = all(exp[k] == got[k] for k in keys)
            tq = dict(q=int(table["q"]), r=int(table["r"]), s=int(table["s"]))
            refuted = dim_formula(tq["q"], tq["r"], tq["s"], i) != bf.dim
            out.add("tabulated_qrs" + tag, ok, exp, {k: got[k] for k in keys}, refuted)
            out.add("tabulated_dim" + tag, table["dim"] == bf.dim, table["dim"], bf.dim, refuted=True)
            formula = dim_formula(qrs.q, qrs.r, qrs.s, i)
            out.add("dim_oracle" + tag, formula == bf.dim, formula, bf.dim)
        try:
            cl = degree_closed(seq, i)
        except UnsupportedError as exc:
            out.unsupported("degree_oracle" + tag, str(exc))
            out.unsupported("degree_signature" + tag, str(exc))
            out.unsupported("displayed_degree_formula" + tag, str(exc))
            continue
        ok = cl.degree == bf.degree and cl.degree.denominator == 1 and cl.degree > 0
        out.add("degree_oracle" + tag, ok, bf.degree, cl.degree)
        sg = degree_from_signature(seq, i)
        out.add("degree_signature" + tag, sg.degree == bf.degree, bf.degree, sg.degree)
        shown = degree_displayed_formula(seq, i)
        out.add("displayed_degree_formula" + tag, shown == bf.degree, bf.degree, shown, refuted=True)
        if family.hermitian and i <= 3:
            qrs = qrs_constants(restrict(seq), i)
            sel = selberg_degree(qrs.q, qrs.r, i)
            simp = simplex_integral(qrs.q, qrs.r, 0, i)
            out.add("selberg" + tag, sel == simp, simp, sel)


def _diagram_checks(out: _Rows, family: FamilyId) -> None:
    try:
        g = hasse_graph(family)
    except UnsupportedError as exc:
        out.unsupported("diagram", str(exc))
        return
    counts = (len(g.nodes), len(g.edges))
    golden = DIAGRAM_COUNTS.get(family.label())
    if golden is not None:
        out.add("diagram_counts", counts == golden, golden, counts)
    pair = build_pair(family)
    lengths = {len(s) for s in sequence_branches(pair)["main"]}
    chains = double_chains(g)
    chain_lengths = sorted({len(c) - 1 for c in chains})
    out.add("diagram_chain_lengths", chain_lengths == sorted(lengths), sorted(lengths), chain_lengths)
    labels = sorted(sorted(str(n.partition) for n in c) for c in chains)
    want = sorted(sorted(str(x) for x in chain_labels(family, b)) for b in chain_branches(family))
    out.add("diagram_chain_labels", labels == want, want, labels)


def instance_rows(family: FamilyId, diagrams: bool = True) -> list[Row]:
    out = _Rows(family.label(), family.kind)
    try:
        pair = build_pair(family)
        branches = sequence_branches(pair)
        beta = highest_noncompact_weight(pair)
        want = reference_gamma1(family)
        if want is not None:
            got = to_fundamental_display(pair, beta)
            refuted = pair.multiplicity(Weight.unit(pair.dim, 0)) == 0
            out.add("gamma1_display", got == want, want, got, refuted)
        law = sequence_length_law(pair)
        if family.kind == "sopq":
            lens = {b: sorted({len(s) for s in ss}) for b, ss in branches.items()}
            ok = lens["sigma"] == [family.p // 2] and lens["tau"] == [2] and family.p // 2 <= law
            out.add("sequence_length", ok, f"sigma:{family.p // 2} tau:2 (bound {law})", lens)
        else:
            lens = sorted({len(s) for s in branches["main"]})
            out.add("sequence_length", lens == [law], [law], lens)
        for branch, seqs in branches.items():
            _sigma_checks(out, family, branch, list(seqs))
        for branch, seqs in branches.items():
            if branch == "tau":
                for s in seqs:
                    _geometry_checks(out, family, s, f"tau{'+' if s.gammas[1][0] > 0 else '-'},")
            else:
                prefix = "" if branch == "main" else f"{branch},"
                _geometry_checks(out, family, default_sequence(pair, branch), prefix)
        if diagrams and family in DIAGRAM_GRID:
            _diagram_checks(out, family)
    except MforbitsError as exc:
        out.failed("instance", exc)
    return out.rows


def run_conformance(grid=DEFAULT_GRID, jobs: int = 1, diagrams: bool = True) -> list[Row]:
    grid = list(grid)
    if jobs > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(instance_rows, grid, [diagrams] * len(grid)))
    else:
        chunks = [instance_rows(f, diagrams) for f in grid]
    return [row for chunk in chunks for row in chunk]


def summarize(rows: list[Row]) -> dict[str, int]:
    counts = {PASS: 0, FAIL: 0, ERRATUM: 0, UNSUPPORTED: 0}
    for r in rows:
        counts[r.status] += 1
    return counts


def row_dict(row: Row) -> dict:
    return asdict(row)
