"""K-type highest weights of the coordinate rings of the orbits and their closures.

The K-types are lambda = a_1 gamma_1 + ... + a_i gamma_i with integer
coefficient tuples subject to one of three ruling cases:

* ``standard``: a_1 >= ... >= a_i >= 0.
* ``dn_full`` (i = n, restricted system of pure d-type): a_1 >= ... >= a_{n-1} >= |a_n|.
* ``hermitian_an_An`` (i = n, a- or A-classes present): the closure has the
  standard lattice, the open orbit also admits negative a_n with a_{n-1} >= a_n.

The grading degree of a tuple is sum(a_j), with |a_n| in the dn_full case.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from mforbits.errors import ParameterError
from mforbits.restricted import RestrictedSystem

RULING = ("standard", "dn_full", "hermitian_an_An")


@dataclass(frozen=True)
class LatticeSpec:
    i: int
    n: int
    sigma_class: str = "standard"
    closure: bool = True

    def __post_init__(self) -> None:
        if self.sigma_class not in RULING:
            raise ParameterError(f"unknown ruling case {self.sigma_class!r}")
        if not 0 <= self.i <= self.n:
            raise ParameterError(f"need 0 <= i <= n, got i={self.i}, n={self.n}")
        if self.sigma_class != "standard" and self.i != self.n:
            raise ParameterError(f"{self.sigma_class} only applies when i = n")


def ruling_case(rs: RestrictedSystem, i: int) -> str:
    """Ruling case for the prefix of length ``i`` of the full system ``rs``."""
    m = rs.mults
    if i == rs.n and m["a"] + m["A"] > 0:
        return "hermitian_an_An"
    if i == rs.n and rs.n >= 2 and m["d"] > 0 and m["b"] == 0 and m["C"] == 0:
        return "dn_full"
    return "standard"


def spec_for(rs: RestrictedSystem, i: int, closure: bool = True) -> LatticeSpec:
    return LatticeSpec(i=i, n=rs.n, sigma_class=ruling_case(rs, i), closure=closure)


def admits(spec: LatticeSpec, a) -> bool:
    a = tuple(a)
    if len(a) != spec.i:
        raise ParameterError(f"expected {spec.i} coefficients, got {len(a)}")
    if any(int(x) != x for x in a):
        return False
    if spec.i == 0:
        return True
    head = a[:-1]
    if any(head[k] < head[k + 1] for k in range(len(head) - 1)):
        return False
    last = a[-1]
    prev = head[-1] if head else None
    if spec.sigma_class == "dn_full":
        return prev is None or prev >= abs(last)
    if spec.sigma_class == "hermitian_an_An" and not spec.closure:
        return prev is None or prev >= last
    return last >= 0 and (prev is None or prev >= last)


def tuple_degree(spec: LatticeSpec, a) -> int:
    a = tuple(a)
    if spec.sigma_class == "dn_full" and a:
        return sum(a[:-1]) + abs(a[-1])
    return sum(a)


def _nonincreasing(length: int, cap: int, budget: int, lo: int = 0):
    """Nonincreasing tuples with entries in [lo, cap] and sum <= budget, lex descending."""
    if length == 0:
        yield ()
        return
    for first in range(min(cap, budget), lo - 1, -1):
        for rest in _nonincreasing(length - 1, first, budget - first, lo):
            yield (first,) + rest


def filtration_layer(spec: LatticeSpec, t: int) -> list[tuple[int, ...]]:
    """All admitted closure tuples of degree <= t, lexicographically descending."""
    if t < 0:
        raise ParameterError("t must be nonnegative")
    if not spec.closure:
        raise ParameterError("filtration layers are defined for the closure lattice")
    out = list(_nonincreasing(spec.i, t, t))
    if spec.sigma_class == "dn_full" and spec.i:
        out += [a[:-1] + (-a[-1],) for a in _nonincreasing(spec.i, t, t, lo=1)]
        out.sort(reverse=True)
    return out


def exact_layer(spec: LatticeSpec, k: int) -> list[tuple[int, ...]]:
    """Admitted closure tuples of degree exactly k."""
    return [a for a in filtration_layer(spec, k) if tuple_degree(spec, a) == k]


@lru_cache(maxsize=None)
def _count(length: int, cap: int, budget: int, lo: int) -> int:
    if length == 0:
        return 1
    total = 0
    for first in range(lo, min(cap, budget) + 1):
        total += _count(length - 1, first, budget - first, lo)
    return total


def lattice_count(spec: LatticeSpec, t: int) -> int:
    """|filtration_layer(spec, t)| without materialising the layer."""
    if t < 0:
        raise ParameterError("t must be nonnegative")
    n = _count(spec.i, t, t, 0)
    if spec.sigma_class == "dn_full" and spec.i:
        n += _count(spec.i, t, t, 1)
    return n


def open_orbit_box(spec: LatticeSpec, bound: int) -> list[tuple[int, ...]]:
    """Admitted tuples (for either lattice) with every |a_j| <= bound."""
    return sorted(
        (a for a in product(range(-bound, bound + 1), repeat=spec.i) if admits(spec, a)),
        reverse=True,
    )
