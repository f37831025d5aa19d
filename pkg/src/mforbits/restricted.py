"""Restricted root systems of a sequence and their signature classification.

A root alpha of k restricts to span(h_1, ..., h_n) as the vector of ratios
<alpha, gamma_j>/<gamma_j, gamma_j>, so the restricted root is
sum_j v_j gamma_j. The nonzero restrictions fall into seven pattern classes:

    a   (gamma_j - gamma_k)/2          A   gamma_j - gamma_k
    b   gamma_j/2                      C   gamma_j
    d   (gamma_j +- gamma_k)/2
    a11+  (gamma_1 + gamma_2)/2        a11-  (gamma_1 - gamma_2)/2

The last two only occur for the two-term tau sequences of SO(p,q).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from mforbits.errors import ConformanceError, ParameterError, UnsupportedError
from mforbits.soseq import SOSequence

CLASSES = ("a", "A", "b", "C", "d", "a11+", "a11-")
HALF = Fraction(1, 2)

# classes that need at least two gamma's to be nonempty
PAIR_CLASSES = frozenset({"a", "A", "d", "a11+", "a11-"})


@dataclass(frozen=True)
class RestrictedSystem:
    i: int
    n: int
    # positive restricted root (gamma-coordinates) -> multiplicity
    restricted_roots: tuple[tuple[tuple[Fraction, ...], int], ...]
    signature: tuple[int, ...]
    zero_count: int
    hermitian: bool

    @property
    def mults(self) -> dict[str, int]:
        return dict(zip(CLASSES, self.signature))

    def m(self, cls: str) -> int:
        return self.mults[cls]

    def nonzero(self) -> dict[str, int]:
        return {c: m for c, m in self.mults.items() if m}


def restriction(alpha, seq: SOSequence) -> tuple[Fraction, ...]:
    K = seq.pair.K
    return tuple(K.inner(alpha, g) / K.inner(g, g) for g in seq.gammas)


def _positive(v) -> bool:
    for c in v:
        if c:
            return c > 0
    return False


def _shape(v) -> tuple[str, tuple[int, ...]]:
    """Pattern of a positive restriction: (kind, support indices).

    kind is one of 'half', 'one', 'half-', 'half+', 'one-'.
    """
    supp = tuple(j for j, c in enumerate(v) if c)
    vals = tuple(v[j] for j in supp)
    if len(supp) == 1:
        if vals == (HALF,):
            return "half", supp
        if vals == (1,):
            return "one", supp
    elif len(supp) == 2:
        if vals == (HALF, -HALF):
            return "half-", supp
        if vals == (HALF, HALF):
            return "half+", supp
        if vals == (1, -1):
            return "one-", supp
    raise ConformanceError("unclassifiable restricted root", v)


def restrict(seq: SOSequence, i: int | None = None) -> RestrictedSystem:
    """Classify the restricted root system of the first ``i`` gammas (default all)."""
    if i is None:
        i = len(seq)
    if not 1 <= i <= len(seq):
        raise ParameterError(f"prefix length must satisfy 1 <= i <= {len(seq)}")
    sub = seq.prefix(i)
    pair = seq.pair
    counts: Counter = Counter()
    zero = 0
    for alpha in pair.K.roots:
        v = restriction(alpha, sub)
        if not any(v):
            zero += 1
        elif _positive(v):
            counts[v] += 1

    tau = seq.branch == "tau"
    by_class: dict[str, list[tuple[tuple, int]]] = {c: [] for c in CLASSES}
    has_half_plus = any(_shape(v)[0] == "half+" for v in counts)
    for v, mult in counts.items():
        kind, supp = _shape(v)
        if kind == "half":
            cls = "b"
        elif kind == "one":
            cls = "C"
        elif kind == "one-":
            cls = "A"
        elif tau:
            cls = "a11+" if kind == "half+" else "a11-"
        elif kind == "half-" and not has_half_plus:
            cls = "a"
        else:
            cls = "d"
        by_class[cls].append((v, mult))

    sig = []
    for cls in CLASSES:
        entries = by_class[cls]
        mults = {m for _, m in entries}
        if len(mults) > 1:
            raise ConformanceError(f"class {cls} has non-uniform multiplicities {sorted(mults)}", entries)
        if entries and len(entries) != _class_size(cls, i):
            raise ConformanceError(f"class {cls} is incomplete ({len(entries)} roots)", entries)
        sig.append(mults.pop() if mults else 0)
    if (sig[0] or sig[1]) and not pair.hermitian:
        raise ConformanceError(f"{pair.family}: a/A classes in a non-Hermitian pair")
    if (sig[0] or sig[1]) and sig[4]:
        raise ConformanceError(f"{pair.family}: a/A classes together with d")
    return RestrictedSystem(
        i=i,
        n=len(seq),
        restricted_roots=tuple(sorted(counts.items())),
        signature=tuple(sig),
        zero_count=zero,
        hermitian=pair.hermitian,
    )


def _class_size(cls: str, n: int) -> int:
    """Number of positive restricted roots in a full class of rank n."""
    pairs = n * (n - 1) // 2
    return {"a": pairs, "A": pairs, "b": n, "C": n, "d": 2 * pairs, "a11+": 1, "a11-": 1}[cls]


_LETTER = {"a": "a", "A": "A", "b": "b", "C": "C", "d": "d"}


def _exp(m: int) -> str:
    s = str(m)
    return s if len(s) == 1 else "{" + s + "}"


def signature_string(rs: RestrictedSystem) -> str:
    parts = []
    for cls, m in zip(CLASSES, rs.signature):
        if not m:
            continue
        if cls.startswith("a11"):
            base = "a_{11," + cls[-1] + "}"
        else:
            sub = str(rs.i)
            base = _LETTER[cls] + "_" + (sub if len(sub) == 1 else "{" + sub + "}")
        parts.append(f"({base})^{_exp(m)}")
    return "".join(parts) or "()"


def normalized_signature(mults: dict[str, int], n: int) -> dict[str, int]:
    """Drop zero exponents and classes that are empty at rank ``n``."""
    return {c: m for c, m in mults.items() if m and not (n < 2 and c in PAIR_CLASSES)}


@dataclass(frozen=True)
class QRS:
    q: int
    r: int
    s: int
    # exponent of 1/2 in the constant of the leading term
    half_power: Fraction
    # number of positive roots of K not orthogonal to gamma_1..gamma_i
    delta_i_size: int


def qrs_from_mults(mults: dict[str, int], n: int, i: int) -> QRS:
    """(q, r, s) and the 1/2-power for prefix length ``i`` of a rank-``n`` signature.

    ``delta_i_size`` is the number of linear factors of the leading term,
    q*i + i(i-1)(r+2s)/2.
    """
    if not 1 <= i <= n:
        raise ParameterError(f"i must satisfy 1 <= i <= {n}")
    get = lambda c: mults.get(c, 0)
    ma, mA, mb, mC, md = get("a"), get("A"), get("b"), get("C"), get("d")
    q = (n - i) * (ma + mA + 2 * md) + (mb + mC)
    r = ma + mA
    s = md
    half_power = Fraction(i * (2 * n - i - 1), 2) * (ma + 2 * md) + i * mb
    size = q * i + i * (i - 1) * (r + 2 * s) // 2
    return QRS(q, r, s, half_power, size)


def qrs_constants(rs: RestrictedSystem, i: int) -> QRS:
    """The exponents (q, r, s) for the prefix of length ``i`` of a full system ``rs``."""
    if rs.i != rs.n:
        raise ParameterError("qrs_constants needs the restricted system of the full sequence")
    if rs.m("a11+") or rs.m("a11-"):
        raise UnsupportedError("(q, r, s) are not defined for the a11 classes")
    qrs = qrs_from_mults(rs.mults, rs.n, i)
    # |Delta_i^+|: positive roots with a nonzero restriction to the first i coordinates
    size = sum(mult for v, mult in rs.restricted_roots if any(v[:i]))
    if size != qrs.delta_i_size:
        raise ConformanceError(
            f"signature predicts {qrs.delta_i_size} contributing roots at i={i}, found {size}"
        )
    return qrs


def dim_formula(q: int, r: int, s: int, i: int) -> int:
    return i * (q + 1) + i * (i - 1) * (r + 2 * s) // 2
