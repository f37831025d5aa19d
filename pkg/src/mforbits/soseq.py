"""Maximal sequences of strongly orthogonal noncompact weights.

A sequence starts at the highest noncompact weight and is extended one weight
at a time by elements of its Weyl orbit that are strongly orthogonal to all
earlier choices and keep every partial sum dominant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from mforbits.errors import ConformanceError, ParameterError
from mforbits.pairs import SymmetricPair, build_pair, highest_noncompact_weight
from mforbits.rootsys import Weight, is_dominant, weight_sum, weyl_orbit


@dataclass(frozen=True)
class SOSequence:
    gammas: tuple[Weight, ...]
    # the pair takes part in equality: equal coordinates in different families
    # are different sequences (results are cached on sequences)
    pair: SymmetricPair = field(repr=False)
    branch: str = "main"

    def __len__(self) -> int:
        return len(self.gammas)

    def __iter__(self):
        return iter(self.gammas)

    def __getitem__(self, j):
        return self.gammas[j]

    def prefix(self, i: int) -> SOSequence:
        return SOSequence(self.gammas[:i], self.pair, self.branch)

    def omega(self, j: int) -> Weight:
        """Partial sum gamma_1 + ... + gamma_j."""
        return weight_sum(self.gammas[:j], self.pair.dim)

    def coroot_value(self, lam: Weight, j: int) -> Fraction:
        """h_j(lam) = 2<lam, gamma_j>/<gamma_j, gamma_j> (j is 0-based)."""
        K = self.pair.K
        g = self.gammas[j]
        return 2 * K.inner(lam, g) / K.inner(g, g)

    def coroot_matrix(self) -> list[list[Fraction]]:
        return [[self.coroot_value(g, j) for j in range(len(self))] for g in self.gammas]

    def combination(self, coeffs) -> Weight:
        """a_1 gamma_1 + ... + a_i gamma_i for the leading len(coeffs) gammas."""
        if len(coeffs) > len(self.gammas):
            raise ParameterError("more coefficients than sequence entries")
        total = Weight.zero(self.pair.dim)
        for a, g in zip(coeffs, self.gammas):
            total = total + g * a
        return total


def _is_weight_or_root(w: Weight, pair: SymmetricPair) -> bool:
    if w.is_zero():
        # the Cartan subalgebra of k has weight zero
        return True
    return pair.multiplicity(w) > 0 or w in _root_set(pair)


@lru_cache(maxsize=None)
def _root_set(pair: SymmetricPair) -> frozenset[Weight]:
    return frozenset(pair.K.roots)


def strongly_orthogonal(g1: Weight, g2: Weight, pair: SymmetricPair) -> bool:
    """Neither g1+g2 nor g1-g2 is a weight of k or of p."""
    if g1 == g2:
        raise ParameterError("strongly_orthogonal requires distinct weights")
    return not (_is_weight_or_root(g1 + g2, pair) or _is_weight_or_root(g1 - g2, pair))


@lru_cache(maxsize=None)
def beta_orbit(pair: SymmetricPair) -> tuple[Weight, ...]:
    return tuple(sorted(weyl_orbit(highest_noncompact_weight(pair), pair.K)))


def extend_candidates(
    pair: SymmetricPair, gammas: tuple[Weight, ...], disjoint: bool = False
) -> list[Weight]:
    """Orbit elements that may be appended to ``gammas``.

    With ``disjoint`` the candidate must also have support disjoint from every
    earlier entry (used for the sigma branch of SO(p,q)).
    """
    K = pair.K
    current = weight_sum(gammas, pair.dim)
    used = set()
    for g in gammas:
        used |= g.support()
    out = []
    for cand in beta_orbit(pair):
        if cand in gammas:
            continue
        if disjoint and cand.support() & used:
            continue
        if not all(strongly_orthogonal(cand, g, pair) for g in gammas):
            continue
        if not is_dominant(current + cand, K):
            continue
        out.append(cand)
    return out


def _search(pair: SymmetricPair, disjoint: bool) -> list[tuple[Weight, ...]]:
    found = []

    def dfs(gammas):
        nxt = extend_candidates(pair, gammas, disjoint)
        if not nxt:
            found.append(gammas)
            return
        for c in nxt:
            dfs(gammas + (c,))

    dfs(())
    return sorted(set(found))


@lru_cache(maxsize=None)
def sequence_branches(pair: SymmetricPair) -> dict[str, tuple[SOSequence, ...]]:
    """Maximal sequences grouped by branch.

    SO(p,q) has two kinds of maximal sequences: ``sigma`` (entries with pairwise
    disjoint support, length p//2) and ``tau`` (length 2, the first two entries
    share their support). Every other family has the single branch ``main``.
    """
    if pair.family.kind == "sopq":
        sigma = _search(pair, disjoint=True)
        tau = [g for g in _search(pair, disjoint=False) if g not in sigma]
        return {
            "sigma": tuple(SOSequence(g, pair, "sigma") for g in sigma),
            "tau": tuple(SOSequence(g, pair, "tau") for g in tau),
        }
    return {"main": tuple(SOSequence(g, pair, "main") for g in _search(pair, False))}


def maximal_sequences(pair: SymmetricPair, branch: str | None = None) -> tuple[SOSequence, ...]:
    branches = sequence_branches(pair)
    if branch is None:
        return tuple(s for name in branches for s in branches[name])
    if branch not in branches:
        raise ParameterError(
            f"{pair.family} has branches {', '.join(branches)}; got {branch!r}"
        )
    return branches[branch]


def default_sequence(pair: SymmetricPair, branch: str | None = None) -> SOSequence:
    """The lexicographically largest maximal sequence of the branch.

    For SO(p,q) the default branch is sigma.
    """
    if branch is None:
        branch = "sigma" if pair.family.kind == "sopq" else "main"
    seqs = maximal_sequences(pair, branch)
    if not seqs:
        raise ConformanceError(f"{pair.family}: branch {branch} has no sequences")
    return seqs[-1]


def verify_sequence(seq: SOSequence) -> None:
    """Re-check orbit membership, strong orthogonality and prefix dominance."""
    pair = seq.pair
    orbit = set(beta_orbit(pair))
    for j, g in enumerate(seq.gammas):
        if g not in orbit:
            raise ConformanceError(f"entry {j + 1} not in the orbit of the highest weight", g)
        for h in seq.gammas[:j]:
            if not strongly_orthogonal(g, h, pair):
                raise ConformanceError(f"entry {j + 1} not strongly orthogonal to {h!r}", g)
        if not is_dominant(seq.omega(j + 1), pair.K):
            raise ConformanceError(f"partial sum {j + 1} not dominant", seq.omega(j + 1))


def k_rank(pair: SymmetricPair) -> int:
    # S(U(p) x U(q)) loses one central direction of the ambient U(p) x U(q)
    return pair.K.dim - (1 if pair.family.kind == "su" else 0)


def sequence_length_law(pair: SymmetricPair) -> int:
    """Expected maximal length: min(rank K, real rank), except n//2 for SL(n,H).

    For SO(p,q) this is only an upper bound; see ``sequence_branches``.
    """
    if pair.family.kind == "sl_h":
        return pair.family.n // 2
    return min(k_rank(pair), pair.family.real_rank())


def sequences_for(family, branch=None) -> tuple[SOSequence, ...]:
    return maximal_sequences(build_pair(family), branch)
