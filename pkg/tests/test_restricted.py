from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from mforbits.errors import ParameterError, UnsupportedError
from mforbits.pairs import FamilyId, build_pair
from mforbits.restricted import (
    dim_formula,
    normalized_signature,
    qrs_constants,
    qrs_from_mults,
    restrict,
    signature_string,
)
from mforbits.soseq import default_sequence, maximal_sequences, sequence_branches


def fam(kind, **kw):
    return FamilyId.make(kind, **kw)


def sig(family, branch=None):
    return signature_string(restrict(default_sequence(build_pair(family), branch)))


@pytest.mark.parametrize(
    "family,expected",
    [
        (fam("su", p=2, q=3), "(a_2)^2(b_2)^1"),
        (fam("su", p=2, q=5), "(a_2)^2(b_2)^3"),
        (fam("su", p=3, q=3), "(a_3)^2"),
        (fam("sp_r", n=3), "(a_3)^1"),
        (fam("sp_r", n=4), "(a_4)^1"),
        (fam("sl_h", n=2), "(C_1)^3"),
        (fam("sl_h", n=4), "(C_2)^3(d_2)^4"),
        (fam("sppq", p=2, q=2), "(C_2)^2(d_2)^2"),
        (fam("sppq", p=1, q=2), "(b_1)^2(C_1)^2"),
        (fam("sl_r", n=4), "(d_2)^1"),
        (fam("sl_r", n=6), "(d_3)^1"),
        (fam("sostar", n=3), "(b_1)^2"),
    ],
)
def test_signatures(family, expected):
    assert sig(family) == expected


def test_so2q_restrictions_are_half_differences():
    # the tabulated A-class letter does not match: the restricted roots are
    # (gamma_1 - gamma_2)/2, which is the a-class
    assert sig(fam("so2q", q=5)) == "(a_2)^3"
    assert sig(fam("so2q", q=6)) == "(a_2)^4"


def test_odd_rank_extra_b_classes():
    assert sig(fam("sl_r", n=5)) == "(b_2)^1(d_2)^1"
    assert sig(fam("sl_h", n=3)) == "(b_1)^4(C_1)^3"
    assert sig(fam("sostar", n=4)) == "(a_2)^4"
    assert sig(fam("sostar", n=5)) == "(a_2)^4(b_2)^2"


@pytest.mark.parametrize("p,q", [(3, 4), (3, 5), (4, 4), (4, 5), (5, 6), (6, 6)])
def test_sopq_sigma_parity_term(p, q):
    rs = restrict(default_sequence(build_pair(fam("sopq", p=p, q=q)), "sigma"))
    n = p // 2
    expected = {"b": q - p + 2 * (p % 2), "d": 2}
    assert normalized_signature(rs.mults, n) == normalized_signature(expected, n)


def test_sopq_tau_classes():
    seqs = sequence_branches(build_pair(fam("sopq", p=3, q=4)))["tau"]
    got = sorted(signature_string(restrict(s)) for s in seqs)
    assert got == ["(a_{11,+})^1(a_{11,-})^2", "(a_{11,+})^2(a_{11,-})^1"]
    with pytest.raises(UnsupportedError):
        qrs_constants(restrict(seqs[0]), 1)


@pytest.mark.parametrize("p,q", [(2, 3), (3, 4), (3, 5)])
def test_qrs_su(p, q):
    rs = restrict(default_sequence(build_pair(fam("su", p=p, q=q))))
    for i in range(1, p + 1):
        c = qrs_constants(rs, i)
        assert (c.q, c.r, c.s) == (p + q - 2 * i, 2, 0)


@pytest.mark.parametrize("n", [4, 6])
def test_qrs_slr(n):
    rs = restrict(default_sequence(build_pair(fam("sl_r", n=n))))
    for i in range(1, n // 2 + 1):
        c = qrs_constants(rs, i)
        assert (c.q, c.r, c.s) == (2 * (n // 2 - i), 0, 1)


@pytest.mark.parametrize("p,q", [(1, 2), (2, 2), (2, 3)])
def test_qrs_sppq(p, q):
    rs = restrict(default_sequence(build_pair(fam("sppq", p=p, q=q))))
    for i in range(1, p + 1):
        c = qrs_constants(rs, i)
        assert c.q == 2 * (p + q - 2 * i + 1)
        if p >= 2:
            # the d-class (and with it s) is empty at rank 1
            assert (c.r, c.s) == (0, 2)


def test_dim_formula_values():
    assert dim_formula(3, 2, 0, 1) == 4
    assert dim_formula(0, 1, 0, 3) == 6
    assert dim_formula(0, 0, 1, 2) == 4


def test_prefix_bounds():
    seq = default_sequence(build_pair(fam("su", p=2, q=3)))
    with pytest.raises(ParameterError):
        restrict(seq, 3)
    with pytest.raises(ParameterError):
        qrs_constants(restrict(seq, 1), 1)


FAMILIES = [
    fam("su", p=2, q=3), fam("su", p=3, q=4), fam("sp_r", n=3), fam("sl_r", n=4), fam("sl_r", n=5),
    fam("sl_r", n=6), fam("sl_h", n=3), fam("sl_h", n=4), fam("so2q", q=5), fam("sopq", p=4, q=5),
    fam("sopq", p=5, q=5), fam("sostar", n=5), fam("sostar", n=6), fam("sppq", p=2, q=3),
]


@pytest.mark.parametrize("family", FAMILIES, ids=str)
def test_signature_independent_of_sequence(family):
    for branch, seqs in sequence_branches(build_pair(family)).items():
        if branch == "tau":
            continue
        assert len({restrict(s).signature for s in seqs}) == 1


@given(st.sampled_from(FAMILIES), st.data())
def test_root_bookkeeping(family, data):
    pair = build_pair(family)
    seq = data.draw(st.sampled_from(maximal_sequences(pair)))
    i = data.draw(st.integers(1, len(seq)))
    rs = restrict(seq, i)
    nonzero = sum(m for _, m in rs.restricted_roots)
    assert rs.zero_count + 2 * nonzero == len(pair.K.roots)
    if seq.branch != "tau":
        full = restrict(seq)
        c = qrs_constants(full, i)
        assert c == qrs_from_mults(full.mults, full.n, i)
        # roots not orthogonal to the first i gammas
        assert c.delta_i_size == sum(
            1 for a in pair.K.positive_roots if any(pair.K.inner(a, g) for g in seq.gammas[:i])
        )
