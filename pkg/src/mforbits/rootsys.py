"""Exact weights, root systems of the compact factor K, Weyl group action and
the Weyl dimension formula.

Everything here is over ``fractions.Fraction``; there is no floating point.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from mforbits.errors import ContractError

Rational = Fraction


@dataclass(frozen=True, order=True)
class Weight:
    """An exact rational vector in the ambient epsilon-coordinates of t*."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def zero(cls, dim: int) -> Weight:
        return cls((0,) * dim)

    @classmethod
    def unit(cls, dim: int, i: int, c=1) -> Weight:
        v = [0] * dim
        v[i] = c
        return cls(tuple(v))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other: Weight) -> Weight:
        _same_dim(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        _same_dim(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, c) -> Weight:
        c = Fraction(c)
        return Weight(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, c) -> Weight:
        c = Fraction(c)
        return Weight(tuple(a / c for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c)

    def __repr__(self) -> str:
        return "Weight(" + ", ".join(str(c) for c in self.coords) + ")"


def weight(*coords) -> Weight:
    return Weight(tuple(coords))


def weight_sum(ws: Iterable[Weight], dim: int) -> Weight:
    total = [Fraction(0)] * dim
    for w in ws:
        _check_dim(w, dim)
        for k, c in enumerate(w.coords):
            total[k] += c
    return Weight(tuple(total))


def _same_dim(u: Weight, v: Weight) -> None:
    if len(u.coords) != len(v.coords):
        raise ContractError(f"dimension mismatch: {len(u.coords)} vs {len(v.coords)}")


def _check_dim(u: Weight, dim: int) -> None:
    if len(u.coords) != dim:
        raise ContractError(f"dimension mismatch: weight has {len(u.coords)} coords, form has {dim}")


def inner(u: Weight, v: Weight, form: Sequence[Fraction] | None = None) -> Fraction:
    """Exact pairing for a diagonal Gram matrix ``form`` (identity if omitted)."""
    _same_dim(u, v)
    if form is None:
        return sum((a * b for a, b in zip(u.coords, v.coords)), Fraction(0))
    _check_dim(u, len(form))
    return sum((a * b * g for a, b, g in zip(u.coords, v.coords, form)), Fraction(0))


# Simple factors of K. ``kind`` is a Cartan letter for a simple factor, "GL" for a
# U(m) block (type A_{m-1} plus a central direction) or "T" for a one-dimensional
# central torus such as SO(2).
@dataclass(frozen=True)
class Block:
    name: str
    kind: str
    size: int
    start: int

    @property
    def indices(self) -> range:
        return range(self.start, self.start + self.size)


def _block_positive_roots(block: Block, dim: int) -> list[Weight]:
    idx = list(block.indices)
    m = len(idx)
    roots: list[Weight] = []

    def vec(pairs):
        v = [0] * dim
        for k, c in pairs:
            v[k] += c
        return Weight(tuple(v))

    if block.kind in ("GL", "A"):
        for a in range(m):
            for b in range(a + 1, m):
                roots.append(vec([(idx[a], 1), (idx[b], -1)]))
    elif block.kind in ("B", "C", "D"):
        for a in range(m):
            for b in range(a + 1, m):
                roots.append(vec([(idx[a], 1), (idx[b], -1)]))
                roots.append(vec([(idx[a], 1), (idx[b], 1)]))
        if block.kind == "B":
            roots.extend(vec([(idx[a], 1)]) for a in range(m))
        elif block.kind == "C":
            roots.extend(vec([(idx[a], 2)]) for a in range(m))
    elif block.kind == "T":
        pass
    else:
        raise ContractError(f"unknown block kind {block.kind!r}")
    return roots


def _block_simple_roots(block: Block, dim: int) -> list[Weight]:
    idx = list(block.indices)
    m = len(idx)

    def vec(pairs):
        v = [0] * dim
        for k, c in pairs:
            v[k] += c
        return Weight(tuple(v))

    simple = [vec([(idx[a], 1), (idx[a + 1], -1)]) for a in range(m - 1)]
    if block.kind == "B":
        simple.append(vec([(idx[-1], 1)]))
    elif block.kind == "C":
        simple.append(vec([(idx[-1], 2)]))
    elif block.kind == "D" and m >= 2:
        simple.append(vec([(idx[-2], 1), (idx[-1], 1)]))
    elif block.kind == "D" and m == 1:
        simple = []
    elif block.kind == "T":
        simple = []
    return simple


@dataclass(frozen=True)
class RootSystemK:
    """Positive system of the compact factor K with its (diagonal) invariant form."""

    dim: int
    positive_roots: tuple[Weight, ...]
    simple_roots: tuple[Weight, ...]
    rho: Weight
    form: tuple[Fraction, ...]
    blocks: tuple[Block, ...] = ()

    @classmethod
    def from_blocks(cls, blocks: Sequence[Block], form: Sequence | None = None) -> RootSystemK:
        dim = sum(b.size for b in blocks)
        pos: list[Weight] = []
        simple: list[Weight] = []
        for b in blocks:
            pos.extend(_block_positive_roots(b, dim))
            simple.extend(_block_simple_roots(b, dim))
        form_t = tuple(Fraction(g) for g in (form if form is not None else [1] * dim))
        rho = weight_sum(pos, dim) / 2
        return cls(dim, tuple(pos), tuple(simple), rho, form_t, tuple(blocks))

    @classmethod
    def from_positive_roots(
        cls, positive_roots: Sequence[Weight], form: Sequence, blocks: Sequence[Block] = ()
    ) -> RootSystemK:
        """Build from an arbitrary positive system; simple roots are the indecomposables."""
        pos = tuple(positive_roots)
        dim = len(form)
        pos_set = set(pos)
        simple = tuple(
            a for a in pos if not any((a - b) in pos_set for b in pos if b != a)
        )
        rho = weight_sum(pos, dim) / 2
        return cls(dim, pos, simple, rho, tuple(Fraction(g) for g in form), tuple(blocks))

    def scaled(self, c) -> RootSystemK:
        """Same roots with the form multiplied by the positive rational ``c``."""
        c = Fraction(c)
        if c <= 0:
            raise ContractError("form scale must be positive")
        return RootSystemK(
            self.dim, self.positive_roots, self.simple_roots, self.rho,
            tuple(c * g for g in self.form), self.blocks,
        )

    @property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive_roots + tuple(-a for a in self.positive_roots)

    def inner(self, u: Weight, v: Weight) -> Fraction:
        return inner(u, v, self.form)

    def coroot_value(self, lam: Weight, alpha: Weight) -> Fraction:
        return 2 * self.inner(lam, alpha) / self.inner(alpha, alpha)

    def reflect(self, lam: Weight, alpha: Weight) -> Weight:
        return lam - alpha * self.coroot_value(lam, alpha)


def is_dominant(lam: Weight, K: RootSystemK) -> bool:
    return all(K.inner(lam, a) >= 0 for a in K.simple_roots)


def is_integral(lam: Weight, K: RootSystemK) -> bool:
    """Integrality against the coroots of K; central directions are unconstrained."""
    return all(K.coroot_value(lam, a).denominator == 1 for a in K.simple_roots)


def weyl_orbit(lam: Weight, K: RootSystemK) -> frozenset[Weight]:
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for a in K.simple_roots:
            nu = K.reflect(mu, a)
            if nu not in seen:
                seen.add(nu)
                queue.append(nu)
    return frozenset(seen)


def dominant_conjugate(lam: Weight, K: RootSystemK) -> Weight:
    mu = lam
    while True:
        for a in K.simple_roots:
            if K.inner(mu, a) < 0:
                mu = K.reflect(mu, a)
                break
        else:
            return mu


def weyl_dim(lam: Weight, K: RootSystemK) -> int:
    """Dimension of the irreducible K-module of highest weight ``lam``."""
    if not is_dominant(lam, K):
        raise ContractError(f"weyl_dim: {lam!r} is not dominant")
    if not is_integral(lam, K):
        raise ContractError(f"weyl_dim: {lam!r} is not integral")
    shifted = lam + K.rho
    value = Fraction(1)
    for a in K.positive_roots:
        value *= K.inner(shifted, a) / K.inner(K.rho, a)
    if value.denominator != 1 or value <= 0:
        raise ContractError(f"weyl_dim produced non-integer {value}")
    return value.numerator


def weyl_group_order(K: RootSystemK) -> int:
    order = 1
    for b in K.blocks:
        m = b.size
        if b.kind in ("GL", "A"):
            order *= factorial(m)
        elif b.kind in ("B", "C"):
            order *= 2**m * factorial(m)
        elif b.kind == "D":
            order *= 2 ** max(m - 1, 0) * factorial(m)
    return order
