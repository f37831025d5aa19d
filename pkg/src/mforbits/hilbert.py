"""Dimension and degree of orbit closures, computed two independent ways.

Route A interpolates the Hilbert function t -> sum of dim V_lambda over the
K-types of degree <= t. Route B integrates the leading term of the Weyl
dimension polynomial over the simplex {x_1 >= ... >= x_i >= 0, sum x <= 1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from mforbits.errors import ConformanceError, ContractError, ParameterError, ResourceError, UnsupportedError
from mforbits.ktypes import LatticeSpec, filtration_layer, ruling_case, spec_for, tuple_degree
from mforbits.restricted import dim_formula, qrs_constants, qrs_from_mults, restrict
from mforbits.rootsys import weyl_dim
from mforbits.soseq import SOSequence

DEFAULT_TERM_BUDGET = 10**7


@dataclass(frozen=True)
class PolynomialExact:
    """Polynomial with exact rational coefficients in ascending degree."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        c = [Fraction(x) for x in self.coefficients]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c or [Fraction(0)]))

    @property
    def degree(self) -> int:
        if self.coefficients == (0,):
            return -1
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1]

    def __call__(self, t) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * t + c
        return value


@dataclass(frozen=True)
class OrbitGeometry:
    dim: int
    leading_coeff: Fraction
    degree: Fraction
    route: str

    def __post_init__(self) -> None:
        if self.degree != self.leading_coeff * factorial(self.dim):
            raise ContractError("degree must equal leading coefficient times dim!")


# ---------------------------------------------------------------------------
# Route A: brute force


def _spec(seq: SOSequence, i: int) -> LatticeSpec:
    if not 0 <= i <= len(seq):
        raise ParameterError(f"i must satisfy 0 <= i <= {len(seq)}")
    if i == 0:
        return LatticeSpec(0, len(seq))
    return spec_for(restrict(seq), i)


@lru_cache(maxsize=256)
def _layer_sums(seq: SOSequence, i: int, t_max: int) -> tuple[int, ...]:
    """Sum of dim V_lambda over K-types of exact degree k, for k = 0..t_max."""
    spec = _spec(seq, i)
    K = seq.pair.K
    sums = [0] * (t_max + 1)
    for a in filtration_layer(spec, t_max):
        lam = seq.combination(a)
        sums[tuple_degree(spec, a)] += weyl_dim(lam, K)
    return tuple(sums)


def hilbert_values(seq: SOSequence, i: int, t_max: int) -> list[int]:
    """[p(0), ..., p(t_max)] with p(t) the cumulative dimension up to degree t."""
    out, total = [], 0
    for s in _layer_sums(seq, i, t_max):
        total += s
        out.append(total)
    return out


def hilbert_value(seq: SOSequence, i: int, t: int) -> int:
    if t < 0:
        raise ParameterError("t must be nonnegative")
    return hilbert_values(seq, i, t)[t]


def delta_plus(seq: SOSequence, i: int) -> list:
    """Positive roots of K pairing nontrivially with some gamma_1..gamma_i."""
    K = seq.pair.K
    return [a for a in K.positive_roots if any(K.inner(g, a) for g in seq.gammas[:i])]


def degree_bound(seq: SOSequence, i: int) -> int:
    """Upper bound for the Hilbert polynomial degree: i free coefficients plus
    the degree of the Weyl dimension polynomial along the cone."""
    return i + len(delta_plus(seq, i))


def _newton_to_monomial(t0: int, diffs: list[Fraction]) -> PolynomialExact:
    # p(t) = sum_k diffs[k] * binom(t - t0, k)
    coeffs = [Fraction(0)] * len(diffs)
    basis = [Fraction(1)]  # coefficients of prod_{m<k} (t - t0 - m), ascending
    for k, d in enumerate(diffs):
        scale = d / factorial(k)
        for e, c in enumerate(basis):
            coeffs[e] += scale * c
        root = t0 + k
        nxt = [Fraction(0)] * (len(basis) + 1)
        for e, c in enumerate(basis):
            nxt[e + 1] += c
            nxt[e] -= root * c
        basis = nxt
    return PolynomialExact(tuple(coeffs))


def hilbert_polynomial(seq: SOSequence, i: int, t0: int = 2, extra: int = 3) -> PolynomialExact:
    """Exact Hilbert polynomial of the i-th orbit closure.

    Interpolates on D+1 consecutive points from ``t0`` (D = degree_bound) and
    checks ``extra`` further points.
    """
    if i == 0:
        return PolynomialExact((1,))
    if t0 < 0 or extra < 1:
        raise ParameterError("need t0 >= 0 and extra >= 1")
    D = degree_bound(seq, i)
    values = hilbert_values(seq, i, t0 + D + extra)
    window = [Fraction(v) for v in values[t0 : t0 + D + 1]]
    diffs, row = [], window
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    poly = _newton_to_monomial(t0, diffs)
    for t in range(t0 + D + 1, t0 + D + extra + 1):
        if poly(t) != values[t]:
            raise ContractError(f"not yet polynomial at t={t}; increase t_0")
    return poly


def degree_brute_force(seq: SOSequence, i: int, t0: int = 2) -> OrbitGeometry:
    poly = hilbert_polynomial(seq, i, t0)
    d = poly.degree
    return OrbitGeometry(d, poly.leading, poly.leading * factorial(d), "brute_force")


# ---------------------------------------------------------------------------
# Exact simplex integration


def _mul_linear(poly: dict, form: tuple[Fraction, ...], budget: int) -> dict:
    out: dict = {}
    for exps, c in poly.items():
        for k, f in enumerate(form):
            if not f:
                continue
            e = exps[:k] + (exps[k] + 1,) + exps[k + 1 :]
            out[e] = out.get(e, 0) + c * f
    out = {e: c for e, c in out.items() if c}
    if len(out) > budget:
        raise ResourceError(f"monomial expansion exceeded the term budget of {budget}")
    return out


def integrate_linear_forms(forms, i: int, budget: int = DEFAULT_TERM_BUDGET) -> Fraction:
    """Integral of prod_f (sum_j f_j x_j) over {x_1 >= ... >= x_i >= 0, sum x <= 1}.

    Substitutes x_j = y_j + ... + y_i, which maps the region onto
    {y >= 0, sum_k k y_k <= 1} with unit Jacobian, then integrates each
    monomial with the Dirichlet formula.
    """
    if i < 1:
        raise ParameterError("integration needs i >= 1")
    poly = {(0,) * i: Fraction(1)}
    for f in forms:
        f = tuple(Fraction(c) for c in f)
        if len(f) != i:
            raise ParameterError("linear form has the wrong number of variables")
        # coefficient of y_k is f_1 + ... + f_k
        yform, acc = [], Fraction(0)
        for c in f:
            acc += c
            yform.append(acc)
        poly = _mul_linear(poly, tuple(yform), budget)
    total = Fraction(0)
    for exps, c in poly.items():
        value = Fraction(1, factorial(sum(exps) + i))
        for k, m in enumerate(exps, start=1):
            value *= Fraction(factorial(m), k ** (m + 1))
        total += c * value
    return total


def _unit(i, j):
    v = [0] * i
    v[j] = 1
    return v


def simplex_integral(q: int, r: int, s: int, i: int, budget: int = DEFAULT_TERM_BUDGET) -> Fraction:
    """Integral of (prod x_j)^q prod_{j<k} (x_j-x_k)^r (x_j^2-x_k^2)^s over the ordered simplex."""
    if min(q, r, s) < 0:
        raise ParameterError("exponents must be nonnegative")
    forms = []
    for j in range(i):
        forms += [_unit(i, j)] * q
    for j in range(i):
        for k in range(j + 1, i):
            minus = [a - b for a, b in zip(_unit(i, j), _unit(i, k))]
            plus = [a + b for a, b in zip(_unit(i, j), _unit(i, k))]
            forms += [minus] * (r + s) + [plus] * s
    return integrate_linear_forms(forms, i, budget)


# ---------------------------------------------------------------------------
# Route B: closed form


def _closed_checks(seq: SOSequence, i: int):
    if not 1 <= i <= len(seq):
        raise ParameterError(f"i must satisfy 1 <= i <= {len(seq)}")
    if seq.branch == "tau":
        raise UnsupportedError("no (q, r, s) exponents exist for the a11 classes of a tau sequence")
    rs = restrict(seq)
    case = ruling_case(rs, i)
    if case != "standard":
        raise UnsupportedError(f"closed form does not cover the {case} case at i = n")
    return rs


def degree_closed(seq: SOSequence, i: int, budget: int = DEFAULT_TERM_BUDGET) -> OrbitGeometry:
    """Leading coefficient from the Weyl dimension polynomial integrated over the simplex.

    leading = prod_{alpha} 1/<rho, alpha> * int prod_{alpha} <sum x_j gamma_j, alpha> dx
    with alpha over the positive roots that see gamma_1..gamma_i. This pairing
    form is independent of how the invariant form is normalised.
    """
    rs = _closed_checks(seq, i)
    K = seq.pair.K
    roots = delta_plus(seq, i)
    forms = [tuple(K.inner(g, a) for g in seq.gammas[:i]) for a in roots]
    scale = Fraction(1)
    for a in roots:
        scale /= K.inner(K.rho, a)
    leading = scale * integrate_linear_forms(forms, i, budget)
    qrs = qrs_constants(rs, i)
    dim = dim_formula(qrs.q, qrs.r, qrs.s, i)
    if dim != i + len(roots):
        raise ConformanceError(
            f"dimension formula gives {dim} but the integrand has degree {len(roots)} in {i} variables"
        )
    return OrbitGeometry(dim, leading, leading * factorial(dim), "closed_form")


def _gamma_norm(seq: SOSequence, i: int) -> Fraction:
    K = seq.pair.K
    norms = {K.inner(g, g) for g in seq.gammas[:i]}
    if len(norms) != 1:
        raise UnsupportedError("gammas of different lengths")
    return norms.pop()


def _rho_product(seq: SOSequence, i: int) -> Fraction:
    K = seq.pair.K
    value = Fraction(1)
    for a in delta_plus(seq, i):
        value *= K.inner(K.rho, a)
    return value


def leading_constant(seq: SOSequence, i: int, mults: dict[str, int] | None = None) -> Fraction:
    """c_i = 2^{-half_power} / prod_{alpha} <rho, alpha> from signature exponents."""
    rs = _closed_checks(seq, i)
    qrs = qrs_from_mults(rs.mults if mults is None else mults, len(seq), i)
    return Fraction(1, 2) ** qrs.half_power / _rho_product(seq, i)


def degree_from_signature(
    seq: SOSequence, i: int, mults: dict[str, int] | None = None, budget: int = DEFAULT_TERM_BUDGET
) -> OrbitGeometry:
    """Leading coefficient rebuilt from (q, r, s) and the signature constant.

    ``mults`` overrides the computed signature (used to test tabulated ones).
    The signature form assumes <gamma_j, gamma_j> = 1; a factor <gamma, gamma>
    per linear factor of the integrand restores the actual normalisation.
    """
    rs = _closed_checks(seq, i)
    qrs = qrs_from_mults(rs.mults if mults is None else mults, len(seq), i)
    c = leading_constant(seq, i, mults) * _gamma_norm(seq, i) ** qrs.delta_i_size
    leading = c * simplex_integral(qrs.q, qrs.r, qrs.s, i, budget)
    dim = dim_formula(qrs.q, qrs.r, qrs.s, i)
    return OrbitGeometry(dim, leading, leading * factorial(dim), "signature")


def degree_displayed_formula(seq: SOSequence, i: int, budget: int = DEFAULT_TERM_BUDGET) -> Fraction:
    """The degree formula in its usual printed form: c_i / dim! times a second
    product of 1/<rho, alpha> over all positive roots times the integral.

    Kept only to document its disagreement with the routes above.
    """
    rs = _closed_checks(seq, i)
    K = seq.pair.K
    qrs = qrs_constants(rs, i)
    dim = dim_formula(qrs.q, qrs.r, qrs.s, i)
    value = leading_constant(seq, i) / factorial(dim)
    for a in K.positive_roots:
        value /= K.inner(K.rho, a)
    return value * simplex_integral(qrs.q, qrs.r, qrs.s, i, budget)


# ---------------------------------------------------------------------------
# Selberg form and power sums


def _gamma_rational(x: Fraction) -> tuple[Fraction, int]:
    """Gamma(x) for x a positive integer or half-integer, as (rational, power of sqrt(pi))."""
    x = Fraction(x)
    if x <= 0 or (2 * x).denominator != 1:
        raise UnsupportedError(f"gamma evaluated at unsupported point {x}")
    if x.denominator == 1:
        return Fraction(factorial(int(x) - 1)), 0
    m = int(x - Fraction(1, 2))
    # Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
    return Fraction(factorial(2 * m), 4**m * factorial(m)), 1


def selberg_degree(q: int, r: int, i: int) -> Fraction:
    """Integral of (prod x_j)^q prod_{j<k} (x_j - x_k)^r over the ordered simplex
    via the Laguerre form of Selberg's product formula."""
    if min(q, r) < 0 or i < 1:
        raise ParameterError("need q, r >= 0 and i >= 1")
    value, pis = Fraction(1), 0
    half_r = Fraction(r, 2)
    for j in range(i):
        for x, sign in ((q + 1 + j * half_r, 1), (1 + (j + 1) * half_r, 1), (1 + half_r, -1)):
            g, k = _gamma_rational(x)
            value = value * g if sign > 0 else value / g
            pis += sign * k
    d = q * i + r * i * (i - 1) // 2
    value /= factorial(d + i)
    value /= factorial(i)
    if pis:
        raise UnsupportedError("Selberg product is not rational for these parameters")
    return value


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m with B_1 = +1/2."""
    if m == 1:
        return Fraction(1, 2)
    return _bernoulli_minus(m)


@lru_cache(maxsize=None)
def _bernoulli_minus(m: int) -> Fraction:
    # sum_{k=0}^{m} C(m+1, k) B_k = 0 with B_1 = -1/2
    if m == 0:
        return Fraction(1)
    return -sum(comb(m + 1, k) * _bernoulli_minus(k) for k in range(m)) / (m + 1)


def faulhaber_sum(p: int, t: int) -> int:
    """sum_{k=0}^{t} k^p through the Bernoulli expansion (with 0^0 = 1)."""
    if p < 0 or t < 0:
        raise ParameterError("p and t must be nonnegative")
    value = sum(comb(p + 1, j) * bernoulli(j) * Fraction(t) ** (p + 1 - j) for j in range(p + 1))
    value /= p + 1
    if p == 0:
        value += 1
    if value.denominator != 1:
        raise ContractError("power sum is not an integer")
    return value.numerator
