"""Catalogue of the classical symmetric pairs (g, k) with their weight data.

Each family fixes a standard matrix realisation: K is a product of classical
blocks in epsilon-coordinates, and ``p_weights`` is the full t-weight multiset
of p. The realisations are validated against the dimension and
negation-stability invariants when the pair is built.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from mforbits.errors import ConformanceError, ParameterError
from mforbits.rootsys import Block, RootSystemK, Weight, is_dominant

KINDS = ("sl_r", "sl_h", "su", "so2q", "sopq", "sostar", "sp_r", "sppq")

# Which integer parameters each family takes.
PARAMS = {
    "sl_r": ("n",),
    "sl_h": ("n",),
    "su": ("p", "q"),
    "so2q": ("q",),
    "sopq": ("p", "q"),
    "sostar": ("n",),
    "sp_r": ("n",),
    "sppq": ("p", "q"),
}

HERMITIAN_KINDS = frozenset({"su", "so2q", "sostar", "sp_r"})


@dataclass(frozen=True, order=True)
class FamilyId:
    """A classical family together with its integer parameters.

    ``sostar`` with parameter ``n`` denotes SO*(2n); ``so2q`` with ``q`` is SO(2,q).
    """

    kind: str
    n: int | None = None
    p: int | None = None
    q: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ParameterError(f"unknown family {self.kind!r}; expected one of {', '.join(KINDS)}")
        wanted = PARAMS[self.kind]
        for name in ("n", "p", "q"):
            value = getattr(self, name)
            if name in wanted and value is None:
                raise ParameterError(f"{self.kind} requires parameter {name}")
            if name not in wanted and value is not None:
                raise ParameterError(f"{self.kind} does not take parameter {name}")
        k, n, p, q = self.kind, self.n, self.p, self.q
        if k == "sl_r" and n < 3:
            raise ParameterError("SL(n,R) requires n >= 3")
        if k == "sl_h" and n < 2:
            raise ParameterError("SL(n,H) requires n >= 2")
        if k == "su" and not 2 <= p <= q:
            raise ParameterError("SU(p,q) requires 2 <= p <= q")
        if k == "so2q" and q <= 2:
            raise ParameterError("SO(2,q) requires q > 2")
        if k == "sopq" and not 2 < p <= q:
            raise ParameterError("SO(p,q) requires 2 < p <= q")
        if k == "sostar" and n < 3:
            raise ParameterError("SO*(2n) requires n >= 3")
        if k == "sp_r" and n < 2:
            raise ParameterError("Sp(n,R) requires n >= 2")
        if k == "sppq" and not 1 <= p <= q:
            raise ParameterError("Sp(p,q) requires 1 <= p <= q")

    @classmethod
    def make(cls, kind: str, **params) -> FamilyId:
        clean = {k: v for k, v in params.items() if v is not None and k in PARAMS.get(kind, ())}
        extra = {k for k, v in params.items() if v is not None} - set(clean)
        if extra and kind in PARAMS:
            raise ParameterError(f"{kind} does not take parameter(s) {', '.join(sorted(extra))}")
        return cls(kind, **clean)

    @property
    def hermitian(self) -> bool:
        return self.kind in HERMITIAN_KINDS

    def params(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in PARAMS[self.kind]}

    def label(self) -> str:
        k, n, p, q = self.kind, self.n, self.p, self.q
        return {
            "sl_r": f"SL({n},R)",
            "sl_h": f"SL({n},H)",
            "su": f"SU({p},{q})",
            "so2q": f"SO(2,{q})",
            "sopq": f"SO({p},{q})",
            "sostar": f"SO*({2 * n if n else n})",
            "sp_r": f"Sp({n},R)",
            "sppq": f"Sp({p},{q})",
        }[k]

    def __str__(self) -> str:
        return self.label()

    def real_rank(self) -> int:
        k, n, p = self.kind, self.n, self.p
        return {
            "sl_r": lambda: n - 1,
            "sl_h": lambda: n - 1,
            "su": lambda: p,
            "so2q": lambda: 2,
            "sopq": lambda: p,
            "sostar": lambda: n // 2,
            "sp_r": lambda: n,
            "sppq": lambda: p,
        }[k]()

    def p_dimension(self) -> int:
        """Closed-form complex dimension of p."""
        k, n, p, q = self.kind, self.n, self.p, self.q
        return {
            "su": lambda: 2 * p * q,
            "sp_r": lambda: n * (n + 1),
            "sostar": lambda: n * (n - 1),
            "sl_r": lambda: n * (n + 1) // 2 - 1,
            "sl_h": lambda: 2 * n * n - n - 1,
            "sopq": lambda: p * q,
            "so2q": lambda: 2 * q,
            "sppq": lambda: 4 * p * q,
        }[k]()


@dataclass(frozen=True, eq=False)
class SymmetricPair:
    family: FamilyId
    K: RootSystemK
    p_weights: Mapping[Weight, int]
    hermitian: bool
    p_plus: frozenset[Weight] | None
    # Index offset of each block's omega labels in the display; None = no labels.
    display_offsets: tuple[int | None, ...] = field(default=())

    # Instances are determined by their family.
    def __eq__(self, other) -> bool:
        return isinstance(other, SymmetricPair) and other.family == self.family

    def __hash__(self) -> int:
        return hash(self.family)

    @property
    def dim(self) -> int:
        return self.K.dim

    @property
    def k_roots(self) -> frozenset[Weight]:
        return frozenset(self.K.roots)

    def p_dim(self) -> int:
        return sum(self.p_weights.values())

    def multiplicity(self, w: Weight) -> int:
        return self.p_weights.get(w, 0)


def _so_block(name: str, m: int, start: int) -> Block:
    return Block(name, "B" if m % 2 else "D", m // 2, start)


def _vec(dim: int, *pairs) -> Weight:
    v = [0] * dim
    for k, c in pairs:
        v[k] += c
    return Weight(tuple(v))


def _signed_pairs(dim, first, second, counter, plus_pm=True):
    """Add all (+-e_a) + (+-f_b) for a in first, b in second."""
    for a in first:
        for b in second:
            for sa in (1, -1):
                for sb in (1, -1):
                    counter[_vec(dim, (a, sa), (b, sb))] += 1


@lru_cache(maxsize=None)
def build_pair(family: FamilyId) -> SymmetricPair:
    k = family.kind
    p_plus = None
    counter: Counter[Weight] = Counter()

    if k == "su":
        p, q = family.p, family.q
        blocks = [Block("U(p)", "GL", p, 0), Block("U(q)", "GL", q, p)]
        dim = p + q
        plus = [_vec(dim, (i, 1), (p + j, -1)) for i in range(p) for j in range(q)]
        for w in plus:
            counter[w] += 1
            counter[-w] += 1
        p_plus = frozenset(plus)
        offsets = (0, p)
    elif k in ("sp_r", "sostar"):
        n = family.n
        blocks = [Block("U(n)", "GL", n, 0)]
        dim = n
        diag = k == "sp_r"
        plus = [
            _vec(dim, (i, 1), (j, 1))
            for i in range(n)
            for j in range(i if diag else i + 1, n)
        ]
        for w in plus:
            counter[w] += 1
            counter[-w] += 1
        p_plus = frozenset(plus)
        offsets = (0,)
    elif k == "so2q":
        q = family.q
        blocks = [Block("SO(2)", "T", 1, 0), _so_block("SO(q)", q, 1)]
        dim = 1 + q // 2
        plus = [_vec(dim, (0, 1), (1 + j, s)) for j in range(q // 2) for s in (1, -1)]
        if q % 2:
            plus.append(_vec(dim, (0, 1)))
        for w in plus:
            counter[w] += 1
            counter[-w] += 1
        p_plus = frozenset(plus)
        offsets = (None, 0)
    elif k == "sopq":
        p, q = family.p, family.q
        a, b = p // 2, q // 2
        blocks = [_so_block("SO(p)", p, 0), _so_block("SO(q)", q, a)]
        dim = a + b
        _signed_pairs(dim, range(a), range(a, a + b), counter)
        if q % 2:
            for i in range(a):
                counter[_vec(dim, (i, 1))] += 1
                counter[_vec(dim, (i, -1))] += 1
        if p % 2:
            for j in range(a, a + b):
                counter[_vec(dim, (j, 1))] += 1
                counter[_vec(dim, (j, -1))] += 1
        if p % 2 and q % 2:
            counter[Weight.zero(dim)] += 1
        offsets = (0, a)
    elif k == "sl_r":
        n = family.n
        m = n // 2
        blocks = [_so_block("SO(n)", n, 0)]
        dim = m
        for i in range(m):
            for j in range(i + 1, m):
                for si in (1, -1):
                    for sj in (1, -1):
                        counter[_vec(dim, (i, si), (j, sj))] += 1
            counter[_vec(dim, (i, 2))] += 1
            counter[_vec(dim, (i, -2))] += 1
            if n % 2:
                counter[_vec(dim, (i, 1))] += 1
                counter[_vec(dim, (i, -1))] += 1
        zero_mult = m - 1 if n % 2 == 0 else m
        if zero_mult:
            counter[Weight.zero(dim)] += zero_mult
        offsets = (0,)
    elif k == "sl_h":
        n = family.n
        blocks = [Block("Sp(n)", "C", n, 0)]
        dim = n
        for i in range(n):
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        counter[_vec(dim, (i, si), (j, sj))] += 1
        counter[Weight.zero(dim)] += n - 1
        offsets = (0,)
    elif k == "sppq":
        p, q = family.p, family.q
        blocks = [Block("Sp(p)", "C", p, 0), Block("Sp(q)", "C", q, p)]
        dim = p + q
        _signed_pairs(dim, range(p), range(p, p + q), counter)
        offsets = (0, p)
    else:  # pragma: no cover - FamilyId already validates
        raise ParameterError(f"unknown family {k}")

    K = RootSystemK.from_blocks(blocks)
    pair = SymmetricPair(
        family=family,
        K=K,
        p_weights=MappingProxyType(dict(sorted(counter.items()))),
        hermitian=family.hermitian,
        p_plus=p_plus,
        display_offsets=offsets,
    )
    _validate(pair)
    return pair


def _validate(pair: SymmetricPair) -> None:
    if pair.p_dim() != pair.family.p_dimension():
        raise ConformanceError(
            f"{pair.family}: weight multiset has total multiplicity {pair.p_dim()}, "
            f"expected dim p = {pair.family.p_dimension()}"
        )
    for w, m in pair.p_weights.items():
        if pair.p_weights.get(-w, 0) != m:
            raise ConformanceError(f"{pair.family}: p weights not stable under negation", w)


def highest_noncompact_weight(pair: SymmetricPair) -> Weight:
    """The highest weight of K on p (on p_+ for Hermitian pairs)."""
    pool = pair.p_plus if pair.hermitian else [w for w, m in pair.p_weights.items() if m]
    K = pair.K
    dominant = [w for w in pool if not w.is_zero() and is_dominant(w, K)]
    best = max(K.inner(w, K.rho) for w in dominant)
    top = [w for w in dominant if K.inner(w, K.rho) == best]
    if len(top) != 1:
        raise ConformanceError(f"{pair.family}: no unique highest noncompact weight", top)
    return top[0]


def _omega(index: int) -> str:
    return f"ω_{index}" if index < 10 else f"ω_{{{index}}}"


def fundamental_coordinates(pair: SymmetricPair, lam: Weight) -> list[tuple[int, Fraction]]:
    """Nonzero (label index, coefficient) pairs of ``lam`` on the omega basis of [K,K]."""
    K = pair.K
    out = []
    for block, offset in zip(K.blocks, pair.display_offsets):
        if offset is None:
            continue
        simple = [a for a in K.simple_roots if a.support() <= set(block.indices)]
        for k, alpha in enumerate(simple, start=1):
            c = K.coroot_value(lam, alpha)
            if c:
                out.append((offset + k, c))
    return out


def to_fundamental_display(pair: SymmetricPair, lam: Weight) -> str:
    terms = []
    for index, c in fundamental_coordinates(pair, lam):
        if c == 1:
            coef = ""
        elif c == -1:
            coef = "-"
        elif c.denominator == 1:
            coef = str(c.numerator)
        else:
            coef = f"({c})"
        terms.append(coef + _omega(index))
    if not terms:
        return "0"
    text = terms[0]
    for t in terms[1:]:
        text += t if t.startswith("-") else "+" + t
    return text


def central_component(pair: SymmetricPair, lam: Weight) -> Weight:
    """Projection of ``lam`` onto the centre of k (orthogonal to all roots)."""
    coords = [Fraction(0)] * pair.dim
    for block in pair.K.blocks:
        idx = list(block.indices)
        if block.kind == "GL":
            mean = sum((lam[i] for i in idx), Fraction(0)) / len(idx)
            for i in idx:
                coords[i] = mean
        elif block.kind == "T":
            for i in idx:
                coords[i] = lam[i]
    return Weight(tuple(coords))
