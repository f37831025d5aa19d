"""Signed-partition labels of nilpotent orbits and closure diagrams.

The diagrams are generated from per-family templates: node formulas in
signed-partition form plus edge rules. Double edges mark the chains
O_0 < O_1 < ... < O_n that come from maximal strongly orthogonal sequences.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from mforbits.errors import ContractError, ParameterError, UnsupportedError
from mforbits.pairs import FamilyId

PLUS, MINUS, UNSIGNED = "+", "-", ""
_SIGN_ORDER = {PLUS: 0, MINUS: 1, UNSIGNED: 2}
_DISPLAY_SIGN = {PLUS: "+", MINUS: "−", UNSIGNED: ""}


@dataclass(frozen=True)
class SignedPartition:
    """Rows (sign, length, multiplicity); canonical after construction."""

    rows: tuple[tuple[str, int, int], ...]

    def __post_init__(self) -> None:
        merged: dict[tuple[str, int], int] = {}
        for sign, length, mult in self.rows:
            sign = {"plus": PLUS, "minus": MINUS, "unsigned": UNSIGNED, "−": MINUS}.get(sign, sign)
            if sign not in _SIGN_ORDER:
                raise ParameterError(f"bad row sign {sign!r}")
            if length < 1 or mult < 0:
                raise ParameterError(f"bad row ({sign}{length})^{mult}")
            if mult:
                merged[(sign, length)] = merged.get((sign, length), 0) + mult
        rows = sorted(
            ((s, length, m) for (s, length), m in merged.items()),
            key=lambda r: (-r[1], _SIGN_ORDER[r[0]]),
        )
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def of(cls, *rows) -> SignedPartition:
        return cls(tuple(rows))

    def boxes(self) -> tuple[int, int, int]:
        """(plus boxes, minus boxes, unsigned boxes); signed rows alternate."""
        plus = minus = unsigned = 0
        for sign, length, mult in self.rows:
            if sign == UNSIGNED:
                unsigned += length * mult
                continue
            lead, other = (length + 1) // 2, length // 2
            if sign == PLUS:
                plus += lead * mult
                minus += other * mult
            else:
                minus += lead * mult
                plus += other * mult
        return plus, minus, unsigned

    def size(self) -> int:
        return sum(self.boxes())

    def __str__(self) -> str:
        return render_signed(self)


def _exp(m: int) -> str:
    if m == 1:
        return ""
    s = str(m)
    return "^" + (s if len(s) == 1 else "{" + s + "}")


def render_signed(sp: SignedPartition) -> str:
    return "".join(f"({_DISPLAY_SIGN[s]}{length}){_exp(m)}" for s, length, m in sp.rows) or "()"


_ROW = re.compile(r"\(([+\-−]?)(\d+)\)(?:\^(?:\{(\d+)\}|(\d)))?")


def parse_signed(text: str) -> SignedPartition:
    rows, pos = [], 0
    text = text.strip()
    if text == "()":
        return SignedPartition(())
    while pos < len(text):
        m = _ROW.match(text, pos)
        if not m:
            raise ParameterError(f"malformed signed partition at {text[pos:]!r}")
        sign = {"": UNSIGNED, "+": PLUS, "-": MINUS, "−": MINUS}[m.group(1)]
        mult = int(m.group(3) or m.group(4) or 1)
        rows.append((sign, int(m.group(2)), mult))
        pos = m.end()
    if not rows:
        raise ParameterError("empty signed partition")
    return SignedPartition(tuple(rows))


@dataclass(frozen=True)
class Node:
    partition: SignedPartition
    tag: str = ""

    @property
    def label(self) -> str:
        return render_signed(self.partition) + (f" {self.tag}" if self.tag else "")


@dataclass
class OrbitGraph:
    nodes: list[Node] = field(default_factory=list)
    edges: list[tuple[Node, Node, bool]] = field(default_factory=list)

    def add(self, node: Node | None) -> Node | None:
        if node is not None and node not in self.nodes:
            self.nodes.append(node)
        return node

    def link(self, src: Node | None, dst: Node | None, double: bool = False) -> None:
        if src in self.nodes and dst in self.nodes:
            self.edges.append((src, dst, double))

    def edge_set(self) -> set[tuple[str, str, bool]]:
        return {(a.label, b.label, d) for a, b, d in self.edges}

    def node_labels(self) -> list[str]:
        return [n.label for n in self.nodes]


def _sp(*rows) -> SignedPartition | None:
    """Signed partition from (sign, length, mult) rows, or None if some mult < 0."""
    if any(m < 0 for _, _, m in rows):
        return None
    return SignedPartition(tuple(rows))


def _node(sp, tag=""):
    return None if sp is None else Node(sp, tag)


# ---------------------------------------------------------------------------
# Templates


def _sl_chain(n: int, k: int) -> SignedPartition:
    return _sp((UNSIGNED, 2, k), (UNSIGNED, 1, n - 2 * k))


def _graph_sl_r(n: int) -> OrbitGraph:
    g, N = OrbitGraph(), n // 2
    chain = [g.add(_node(_sl_chain(n, k))) for k in range(N + (n % 2))]
    for k in range(1, len(chain)):
        g.link(chain[k], chain[k - 1], True)
    if n % 2 == 0:
        for tag in ("I", "II"):
            top = g.add(_node(_sl_chain(n, N), tag))
            g.link(top, chain[-1], True)
    return g


def _graph_sl_h(n: int) -> OrbitGraph:
    g = OrbitGraph()
    chain = [g.add(_node(_sl_chain(n, k))) for k in range(n // 2 + 1)]
    for k in range(1, len(chain)):
        g.link(chain[k], chain[k - 1], True)
    return g


def _su2q(q: int) -> dict[str, Node | None]:
    return {
        "bot": _node(_sp((PLUS, 1, 2), (MINUS, 1, q))),
        "L": _node(_sp((MINUS, 2, 1), (PLUS, 1, 1), (MINUS, 1, q - 1))),
        "R": _node(_sp((PLUS, 2, 1), (PLUS, 1, 1), (MINUS, 1, q - 1))),
        "D": _node(_sp((MINUS, 2, 2), (MINUS, 1, q - 2))),
        "M": _node(_sp((PLUS, 2, 1), (MINUS, 2, 1), (MINUS, 1, q - 2))),
        "P": _node(_sp((PLUS, 2, 2), (MINUS, 1, q - 2))),
        # drawn with (-1)^{q-1}; q-2 is the exponent that gives 2 plus and q minus boxes
        "C1": _node(_sp((MINUS, 3, 1), (PLUS, 1, 1), (MINUS, 1, q - 2))),
        "C2": _node(_sp((PLUS, 3, 1), (MINUS, 1, q - 1))),
        "A": _node(_sp((MINUS, 3, 1), (MINUS, 2, 1), (MINUS, 1, q - 3))),
        "B": _node(_sp((MINUS, 3, 1), (PLUS, 2, 1), (MINUS, 1, q - 3))),
        "T": _node(_sp((MINUS, 3, 2), (MINUS, 1, q - 4))),
    }


def _graph_su(p: int, q: int) -> OrbitGraph:
    if p != 2:
        raise UnsupportedError("the closure diagram is only encoded for SU(2,q)")
    v = _su2q(q)
    g = OrbitGraph()
    for key in ("bot", "L", "R", "D", "M", "P", "C1", "C2", "A", "B", "T"):
        g.add(v[key])
    for src, dst, double in [
        ("L", "bot", True), ("R", "bot", True),
        ("D", "L", True), ("P", "R", True),
        ("M", "L", False), ("M", "R", False),
        ("C1", "M", False), ("C2", "M", False),
        ("A", "D", False), ("A", "C1", False),
        ("B", "C1", False), ("B", "P", False),
        ("T", "A", False), ("T", "B", False),
    ]:
        g.link(v[src], v[dst], double)
    return g


def _graph_so2q(q: int) -> OrbitGraph:
    if q <= 4:
        raise UnsupportedError("the SO(2,q) closure diagram is drawn for q > 4")
    g = OrbitGraph()
    bot = g.add(_node(_sp((PLUS, 1, 2), (MINUS, 1, q))))
    mids = [g.add(_node(_sp((PLUS, 2, 1), (MINUS, 2, 1), (MINUS, 1, q - 2)), t)) for t in ("I", "II")]
    tops = [g.add(_node(_sp((PLUS, 3, 1), (MINUS, 1, q - 1)), t)) for t in ("I", "II")]
    x = g.add(_node(_sp((MINUS, 3, 1), (PLUS, 1, 1), (MINUS, 1, q - 2))))
    t = g.add(_node(_sp((MINUS, 3, 2), (MINUS, 1, q - 4))))
    for m, top in zip(mids, tops):
        g.link(m, bot, True)
        g.link(top, m, True)
        g.link(x, m, False)
    g.link(t, x, False)
    return g


def _rs_grid(g: OrbitGraph, bound: int, label) -> dict[tuple[int, int], Node]:
    nodes = {}
    for total in range(bound + 1):
        for r in range(total, -1, -1):
            s = total - r
            nodes[(r, s)] = g.add(Node(label(r, s)))
    for (r, s), node in nodes.items():
        if r:
            g.link(node, nodes[(r - 1, s)], s == 0)
        if s:
            g.link(node, nodes[(r, s - 1)], r == 0)
    return nodes


def _graph_sostar(n: int) -> OrbitGraph:
    g = OrbitGraph()

    def label(r, s):
        return _sp((PLUS, 2, r), (MINUS, 2, s), (UNSIGNED, 1, n - 2 * r - 2 * s))

    nodes = _rs_grid(g, n // 2, label)
    if (1, 1) in nodes:
        x = g.add(_node(_sp((UNSIGNED, 3, 1), (UNSIGNED, 1, n - 3))))
        g.link(x, nodes[(1, 1)], False)
    return g


def _graph_sp_r(n: int) -> OrbitGraph:
    g = OrbitGraph()

    def label(r, s):
        return _sp((PLUS, 2, r), (MINUS, 2, s), (PLUS, 1, n - r - s), (MINUS, 1, n - r - s))

    _rs_grid(g, n, label)
    return g


def _sppq_chain(p: int, q: int, k: int) -> SignedPartition:
    return _sp((PLUS, 2, k), (PLUS, 1, p - k), (MINUS, 1, q - k))


def _graph_sppq(p: int, q: int) -> OrbitGraph:
    g = OrbitGraph()
    chain = [g.add(_node(_sppq_chain(p, q, k))) for k in range(p + 1)]
    for k in range(1, p + 1):
        g.link(chain[k], chain[k - 1], True)
    c1 = chain[1] if p >= 1 else None
    c2 = chain[2] if p >= 2 else None
    l2 = g.add(_node(_sp((PLUS, 3, 1), (PLUS, 1, p - 2), (MINUS, 1, q - 1))))
    r2 = g.add(_node(_sp((MINUS, 3, 1), (PLUS, 1, p - 1), (MINUS, 1, q - 2))))
    l3 = g.add(_node(_sp((PLUS, 3, 1), (PLUS, 2, 1), (PLUS, 1, p - 3), (MINUS, 1, q - 2))))
    r3 = g.add(_node(_sp((MINUS, 3, 1), (PLUS, 2, 1), (PLUS, 1, p - 2), (MINUS, 1, q - 3))))
    # these two edges into C_1 are not part of any sequence chain
    g.link(l2, c1, False)
    g.link(r2, c1, False)
    g.link(l3, l2, False)
    g.link(l3, c2, False)
    g.link(r3, c2, False)
    g.link(r3, r2, False)
    return g


def hasse_graph(family: FamilyId) -> OrbitGraph:
    k = family.kind
    if k == "sl_r":
        g = _graph_sl_r(family.n)
    elif k == "sl_h":
        g = _graph_sl_h(family.n)
    elif k == "su":
        g = _graph_su(family.p, family.q)
    elif k == "so2q":
        g = _graph_so2q(family.q)
    elif k == "sostar":
        g = _graph_sostar(family.n)
    elif k == "sp_r":
        g = _graph_sp_r(family.n)
    elif k == "sppq":
        g = _graph_sppq(family.p, family.q)
    else:
        raise UnsupportedError(f"no closure diagram is encoded for {family}")
    check_boxes(family, g)
    return g


def expected_boxes(family: FamilyId) -> tuple[int, int, int] | int:
    """(plus, minus) counts for signed families, total box count otherwise."""
    k = family.kind
    if k in ("sl_r", "sl_h", "sostar"):
        return family.n
    if k == "su":
        return family.p, family.q, 0
    if k == "so2q":
        return 2, family.q, 0
    if k == "sp_r":
        return family.n, family.n, 0
    if k == "sppq":
        return family.p, family.q, 0
    raise UnsupportedError(f"no box count convention for {family}")


def check_boxes(family: FamilyId, g: OrbitGraph) -> None:
    want = expected_boxes(family)
    for node in g.nodes:
        got = node.partition.size() if isinstance(want, int) else node.partition.boxes()
        if got != want:
            raise ContractError(f"{family}: node {node.label} has box count {got}, expected {want}")


# ---------------------------------------------------------------------------
# Chains


def double_chains(g: OrbitGraph) -> list[list[Node]]:
    """Maximal paths of double edges, listed from the bottom node upwards."""
    up: dict[Node, list[Node]] = {}
    has_down = set()
    for src, dst, double in g.edges:
        if double:
            up.setdefault(dst, []).append(src)
            has_down.add(src)
    bottoms = [n for n in g.nodes if n in up and n not in has_down]
    chains = []

    def walk(path):
        above = up.get(path[-1], [])
        if not above:
            chains.append(path)
        for a in above:
            walk(path + [a])

    for b in bottoms:
        walk([b])
    return chains


def chain_branches(family: FamilyId) -> tuple[str, ...]:
    k = family.kind
    if k in ("su", "sostar", "sp_r"):
        return ("+", "-")
    if k == "so2q" or (k == "sl_r" and family.n % 2 == 0):
        return ("I", "II")
    return ("main",)


def chain_labels(family: FamilyId, branch: str | None = None) -> list[SignedPartition]:
    """Labels of O_0, O_1, ..., O_n along the chosen chain."""
    branches = chain_branches(family)
    if branch is None:
        branch = branches[0]
    if branch not in branches:
        raise ParameterError(f"{family} chains are {', '.join(branches)}; got {branch!r}")
    k = family.kind
    if k == "sl_r":
        return [_sl_chain(family.n, j) for j in range(family.n // 2 + 1)]
    if k == "sl_h":
        return [_sl_chain(family.n, j) for j in range(family.n // 2 + 1)]
    if k == "su":
        p, q = family.p, family.q
        lead = PLUS if branch == "+" else MINUS
        return [_sp((lead, 2, j), (PLUS, 1, p - j), (MINUS, 1, q - j)) for j in range(p + 1)]
    if k == "so2q":
        q = family.q
        return [
            _sp((PLUS, 1, 2), (MINUS, 1, q)),
            _sp((PLUS, 2, 1), (MINUS, 2, 1), (MINUS, 1, q - 2)),
            _sp((PLUS, 3, 1), (MINUS, 1, q - 1)),
        ]
    if k == "sostar":
        n = family.n
        lead = PLUS if branch == "+" else MINUS
        return [_sp((lead, 2, j), (UNSIGNED, 1, n - 2 * j)) for j in range(n // 2 + 1)]
    if k == "sp_r":
        n = family.n
        lead = PLUS if branch == "+" else MINUS
        return [_sp((lead, 2, j), (PLUS, 1, n - j), (MINUS, 1, n - j)) for j in range(n + 1)]
    if k == "sppq":
        return [_sppq_chain(family.p, family.q, j) for j in range(family.p + 1)]
    raise UnsupportedError(f"no chain labels for {family}")


# ---------------------------------------------------------------------------
# DOT output


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def emit_dot(g: OrbitGraph, name: str = "hasse") -> str:
    lines = [f"digraph {name} {{"]
    ids = {node: f"n{k}" for k, node in enumerate(g.nodes)}
    for node in g.nodes:
        lines.append(f'  {ids[node]} [label="{_dot_escape(node.label)}"];')
    for src, dst, double in g.edges:
        style = ' [color="black:black"]' if double else ""
        lines.append(f"  {ids[src]} -> {ids[dst]}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
