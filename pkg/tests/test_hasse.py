from __future__ import annotations

import re

import pytest
from hypothesis import given, strategies as st

from mforbits.errors import ParameterError, UnsupportedError
from mforbits.hasse import (
    SignedPartition,
    chain_branches,
    chain_labels,
    check_boxes,
    double_chains,
    emit_dot,
    expected_boxes,
    hasse_graph,
    parse_signed,
    render_signed,
)
from mforbits.pairs import FamilyId, build_pair
from mforbits.soseq import sequence_branches


def fam(kind, **kw):
    return FamilyId.make(kind, **kw)


def lab(text, tag=""):
    """Golden label written with ASCII minus signs."""
    out = render_signed(parse_signed(text))
    return out + (f" {tag}" if tag else "")


def E(src, dst, double=False):
    return (src, dst, double)


# Hand-encoded from the closure diagrams (nodes, edges src -> dst, double flag).
GOLDEN = {}

GOLDEN["SL(4,R)"] = (
    {lab("(1)^4"), lab("(2)(1)^2"), lab("(2)^2", "I"), lab("(2)^2", "II")},
    {E(lab("(2)(1)^2"), lab("(1)^4"), True), E(lab("(2)^2", "I"), lab("(2)(1)^2"), True),
     E(lab("(2)^2", "II"), lab("(2)(1)^2"), True)},
)
GOLDEN["SL(5,R)"] = (
    {lab("(1)^5"), lab("(2)(1)^3"), lab("(2)^2(1)")},
    {E(lab("(2)(1)^3"), lab("(1)^5"), True), E(lab("(2)^2(1)"), lab("(2)(1)^3"), True)},
)
GOLDEN["SL(2,H)"] = ({lab("(1)^2"), lab("(2)")}, {E(lab("(2)"), lab("(1)^2"), True)})
GOLDEN["SL(3,H)"] = ({lab("(1)^3"), lab("(2)(1)")}, {E(lab("(2)(1)"), lab("(1)^3"), True)})

_su = {
    "T": lab("(-3)^2"), "A": lab("(-3)(-2)(-1)"), "B": lab("(-3)(+2)(-1)"),
    "C1": lab("(-3)(+1)(-1)^2"), "C2": lab("(+3)(-1)^3"), "D": lab("(-2)^2(-1)^2"),
    "M": lab("(+2)(-2)(-1)^2"), "P": lab("(+2)^2(-1)^2"), "L": lab("(-2)(+1)(-1)^3"),
    "R": lab("(+2)(+1)(-1)^3"), "bot": lab("(+1)^2(-1)^4"),
}
GOLDEN["SU(2,4)"] = (
    set(_su.values()),
    {E(_su[a], _su[b], d) for a, b, d in [
        ("T", "A", False), ("T", "B", False), ("A", "D", False), ("A", "C1", False),
        ("B", "C1", False), ("B", "P", False), ("C1", "M", False), ("C2", "M", False),
        ("D", "L", True), ("M", "L", False), ("M", "R", False), ("P", "R", True),
        ("L", "bot", True), ("R", "bot", True)]},
)

_so = {
    "T": lab("(-3)^2(-1)^2"), "X": lab("(-3)(+1)(-1)^4"), "TI": lab("(+3)(-1)^5", "I"),
    "TII": lab("(+3)(-1)^5", "II"), "MI": lab("(+2)(-2)(-1)^4", "I"), "MII": lab("(+2)(-2)(-1)^4", "II"),
    "bot": lab("(+1)^2(-1)^6"),
}
GOLDEN["SO(2,6)"] = (
    set(_so.values()),
    {E(_so[a], _so[b], d) for a, b, d in [
        ("T", "X", False), ("X", "MI", False), ("X", "MII", False), ("TI", "MI", True),
        ("TII", "MII", True), ("MI", "bot", True), ("MII", "bot", True)]},
)


def rs_golden(label, top):
    nodes = {(r, s): label(r, s) for r in range(top + 1) for s in range(top + 1 - r)}
    edges = set()
    for (r, s), node in nodes.items():
        if r:
            edges.add(E(node, nodes[(r - 1, s)], s == 0))
        if s:
            edges.add(E(node, nodes[(r, s - 1)], r == 0))
    return nodes, edges


_n, _e = rs_golden(lambda r, s: lab(f"(+2)^{r}(-2)^{s}(1)^{4 - 2 * r - 2 * s}"), 2)
GOLDEN["SO*(8)"] = (set(_n.values()) | {lab("(3)(1)")}, _e | {E(lab("(3)(1)"), _n[(1, 1)])})
_n, _e = rs_golden(lambda r, s: lab(f"(+2)^{r}(-2)^{s}(+1)^{2 - r - s}(-1)^{2 - r - s}"), 2)
GOLDEN["Sp(2,R)"] = (set(_n.values()), _e)

_sp = {
    "bot": lab("(+1)^2(-1)^3"), "C1": lab("(+2)(+1)(-1)^2"), "C2": lab("(+2)^2(-1)"),
    "L2": lab("(+3)(-1)^2"), "R2": lab("(-3)(+1)(-1)"), "R3": lab("(-3)(+2)"),
}
GOLDEN["Sp(2,3)"] = (
    set(_sp.values()),
    {E(_sp[a], _sp[b], d) for a, b, d in [
        ("C1", "bot", True), ("C2", "C1", True), ("L2", "C1", False), ("R2", "C1", False),
        ("R3", "C2", False), ("R3", "R2", False)]},
)

FAMILIES = {
    "SL(4,R)": fam("sl_r", n=4), "SL(5,R)": fam("sl_r", n=5), "SU(2,4)": fam("su", p=2, q=4),
    "SL(2,H)": fam("sl_h", n=2), "SL(3,H)": fam("sl_h", n=3), "SO(2,6)": fam("so2q", q=6),
    "SO*(8)": fam("sostar", n=4), "Sp(2,R)": fam("sp_r", n=2), "Sp(2,3)": fam("sppq", p=2, q=3),
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_diagrams_match_golden(name):
    g = hasse_graph(FAMILIES[name])
    nodes, edges = GOLDEN[name]
    assert set(g.node_labels()) == nodes
    assert len(g.node_labels()) == len(nodes)
    assert g.edge_set() == edges
    assert len(g.edges) == len(edges)


def test_golden_counts():
    counts = {name: (len(n), len(e)) for name, (n, e) in GOLDEN.items()}
    assert counts == {
        "SL(4,R)": (4, 3), "SL(5,R)": (3, 2), "SU(2,4)": (11, 14), "SL(2,H)": (2, 1), "SL(3,H)": (2, 1),
        "SO(2,6)": (7, 7), "SO*(8)": (7, 7), "Sp(2,R)": (6, 6), "Sp(2,3)": (6, 6),
    }


DIAGRAM_FAMILIES = list(FAMILIES.values()) + [
    fam("sl_r", n=6), fam("sl_r", n=7), fam("sl_h", n=5), fam("su", p=2, q=5), fam("so2q", q=7),
    fam("sostar", n=5), fam("sostar", n=6), fam("sp_r", n=3), fam("sppq", p=3, q=4), fam("sppq", p=1, q=3),
]


@pytest.mark.parametrize("family", DIAGRAM_FAMILIES, ids=str)
def test_double_chains_match_sequences(family):
    g = hasse_graph(family)
    check_boxes(family, g)
    chains = double_chains(g)
    lengths = {len(s) for s in sequence_branches(build_pair(family))["main"]}
    assert {len(c) - 1 for c in chains} == lengths
    for c in chains:
        # totally ordered: consecutive members joined by a double edge
        for hi, lo in zip(c[1:], c):
            assert (hi, lo, True) in g.edges
    expected = sorted(sorted(str(x) for x in chain_labels(family, b)) for b in chain_branches(family))
    assert sorted(sorted(str(n.partition) for n in c) for c in chains) == expected


def test_box_counts():
    assert expected_boxes(fam("su", p=2, q=4)) == (2, 4, 0)
    for family in DIAGRAM_FAMILIES:
        want = expected_boxes(family)
        for node in hasse_graph(family).nodes:
            got = node.partition.boxes()
            assert (got == want) if isinstance(want, tuple) else (node.partition.size() == want)


def test_unsupported_diagrams():
    with pytest.raises(UnsupportedError):
        hasse_graph(fam("sopq", p=3, q=4))
    with pytest.raises(UnsupportedError):
        hasse_graph(fam("su", p=3, q=3))
    with pytest.raises(UnsupportedError):
        hasse_graph(fam("so2q", q=4))


def test_render_example():
    sp = SignedPartition.of(("plus", 3, 2), ("unsigned", 2, 1), ("plus", 1, 2), ("minus", 1, 1))
    assert render_signed(sp) == "(+3)^2(2)(+1)^2(−1)"
    assert render_signed(SignedPartition.of(("plus", 1, 12))) == "(+1)^{12}"
    assert sp.boxes() == (6, 3, 2)


def test_parse_errors():
    with pytest.raises(ParameterError):
        parse_signed("(+3")
    with pytest.raises(ParameterError):
        SignedPartition.of(("x", 1, 1))


rows = st.lists(
    st.tuples(st.sampled_from(["+", "-", ""]), st.integers(1, 12), st.integers(0, 12)), max_size=5
)


@given(rows)
def test_render_parse_roundtrip(r):
    sp = SignedPartition(tuple(r))
    text = render_signed(sp)
    assert parse_signed(text) == sp
    assert render_signed(parse_signed(text)) == text
    assert parse_signed(text.replace("−", "-")) == sp


def test_dot_output():
    g = hasse_graph(fam("sp_r", n=2))
    dot = emit_dot(g)
    assert dot.startswith("digraph hasse {\n") and dot.endswith("}\n")
    assert len(re.findall(r"^  n\d+ \[label=", dot, re.M)) == 6
    assert dot.count('[color="black:black"]') == 4
    assert emit_dot(g) == dot
