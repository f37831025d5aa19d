from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from mforbits.errors import ParameterError
from mforbits.pairs import FamilyId, build_pair, highest_noncompact_weight
from mforbits.rootsys import is_dominant, weight, weyl_orbit
from mforbits.soseq import (
    SOSequence,
    extend_candidates,
    maximal_sequences,
    sequence_branches,
    sequence_length_law,
    strongly_orthogonal,
    verify_sequence,
)


def pair_of(kind, **kw):
    return build_pair(FamilyId.make(kind, **kw))


SPR2 = pair_of("sp_r", n=2)

GRID = [
    pair_of(k, **kw)
    for k, kw in [
        ("su", dict(p=2, q=3)), ("su", dict(p=3, q=3)), ("su", dict(p=2, q=4)), ("sp_r", dict(n=3)),
        ("sl_r", dict(n=4)), ("sl_r", dict(n=5)), ("sl_r", dict(n=6)), ("sl_h", dict(n=3)),
        ("sl_h", dict(n=4)), ("so2q", dict(q=5)), ("so2q", dict(q=6)), ("sopq", dict(p=3, q=4)),
        ("sopq", dict(p=4, q=4)), ("sopq", dict(p=5, q=6)), ("sostar", dict(n=5)), ("sostar", dict(n=6)),
        ("sppq", dict(p=1, q=2)), ("sppq", dict(p=2, q=3)),
    ]
]


def independent_so(g1, g2, pair):
    """Strong orthogonality straight from the weight tables."""
    bad = set(pair.K.roots) | {w for w, m in pair.p_weights.items() if m}
    bad.add(g1 * 0)
    return (g1 + g2) not in bad and (g1 - g2) not in bad


def test_strong_orthogonality_examples():
    assert strongly_orthogonal(weight(2, 0), weight(0, 2), SPR2)
    assert not strongly_orthogonal(weight(2, 0), weight(1, 1), SPR2)
    su = pair_of("su", p=2, q=3)
    assert strongly_orthogonal(weight(1, 0, 0, 0, -1), weight(0, 1, 0, -1, 0), su)


def test_opposite_weights_are_not_strongly_orthogonal():
    # g + (-g) = 0 is the weight of the Cartan subalgebra
    assert not strongly_orthogonal(weight(2, 0), weight(-2, 0), SPR2)


def test_equal_weights_rejected():
    with pytest.raises(ParameterError):
        strongly_orthogonal(weight(2, 0), weight(2, 0), SPR2)


def test_candidates_spr():
    assert extend_candidates(SPR2, ()) == [weight(2, 0)]
    assert extend_candidates(SPR2, (weight(2, 0),)) == [weight(0, 2)]
    assert extend_candidates(SPR2, (weight(2, 0), weight(0, 2))) == []


@pytest.mark.parametrize("n", [2, 3, 4])
def test_spr_has_one_sequence(n):
    seqs = maximal_sequences(pair_of("sp_r", n=n))
    assert len(seqs) == 1 and len(seqs[0]) == n
    assert seqs[0].gammas == tuple(weight(*[2 if k == j else 0 for k in range(n)]) for j in range(n))


@pytest.mark.parametrize("k", [2, 3])
def test_slr_even_has_two_terminations(k):
    seqs = maximal_sequences(pair_of("sl_r", n=2 * k))
    assert len(seqs) == 2 and {len(s) for s in seqs} == {k}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_slh_length(n):
    assert {len(s) for s in maximal_sequences(pair_of("sl_h", n=n))} == {n // 2}


def test_length_law_examples():
    assert sequence_length_law(pair_of("su", p=2, q=3)) == 2
    assert sequence_length_law(pair_of("sppq", p=1, q=2)) == 1
    assert sequence_length_law(pair_of("sopq", p=3, q=4)) == 3


def test_sopq_branches():
    br = sequence_branches(pair_of("sopq", p=3, q=4))
    assert {len(s) for s in br["sigma"]} == {1}
    assert {len(s) for s in br["tau"]} == {2} and len(br["tau"]) == 2
    br = sequence_branches(pair_of("sopq", p=4, q=4))
    assert {len(s) for s in br["sigma"]} == {2}
    with pytest.raises(ParameterError):
        maximal_sequences(pair_of("sopq", p=3, q=4), "main")


@pytest.mark.parametrize("pair", GRID, ids=lambda p: p.family.label())
def test_sequences_satisfy_construction_rules(pair):
    orbit = weyl_orbit(highest_noncompact_weight(pair), pair.K)
    for seq in maximal_sequences(pair):
        verify_sequence(seq)
        assert seq.gammas[0] == highest_noncompact_weight(pair)
        for j, g in enumerate(seq.gammas):
            assert g in orbit
            assert all(independent_so(g, h, pair) for h in seq.gammas[:j])
            assert is_dominant(seq.omega(j + 1), pair.K)
        assert extend_candidates(pair, seq.gammas, disjoint=seq.branch == "sigma") == []


@pytest.mark.parametrize("pair", GRID, ids=lambda p: p.family.label())
def test_lengths_follow_law(pair):
    law = sequence_length_law(pair)
    br = sequence_branches(pair)
    if pair.family.kind == "sopq":
        assert {len(s) for s in br["sigma"]} == {pair.family.p // 2}
        assert all(len(s) <= law for s in br["sigma"] + br["tau"])
    else:
        assert {len(s) for s in br["main"]} == {law}


@pytest.mark.parametrize("pair", [p for p in GRID if p.hermitian], ids=lambda p: p.family.label())
def test_hermitian_lengths_equal(pair):
    assert len({len(s) for s in maximal_sequences(pair)}) == 1


@given(st.sampled_from(GRID), st.data())
def test_strong_orthogonality_matches_tables(pair, data):
    orbit = sorted(weyl_orbit(highest_noncompact_weight(pair), pair.K))
    g1 = data.draw(st.sampled_from(orbit))
    g2 = data.draw(st.sampled_from(orbit).filter(lambda g: g != g1))
    assert strongly_orthogonal(g1, g2, pair) == independent_so(g1, g2, pair)
    assert strongly_orthogonal(g1, g2, pair) == strongly_orthogonal(g2, g1, pair)


@given(st.sampled_from(GRID), st.data())
def test_coroot_pairing(pair, data):
    seq = data.draw(st.sampled_from(maximal_sequences(pair)))
    m = seq.coroot_matrix()
    for j in range(len(seq)):
        assert m[j][j] == 2
        for k in range(len(seq)):
            if j != k:
                # strongly orthogonal entries are orthogonal
                assert m[j][k] == 0
    coeffs = data.draw(st.lists(st.integers(0, 4), min_size=len(seq), max_size=len(seq)))
    lam = seq.combination(coeffs)
    assert [seq.coroot_value(lam, j) for j in range(len(seq))] == [2 * c for c in coeffs]


def test_sequence_prefix():
    seq = maximal_sequences(pair_of("sp_r", n=3))[0]
    assert isinstance(seq.prefix(2), SOSequence) and len(seq.prefix(2)) == 2
    assert seq.omega(2) == weight(2, 2, 0)


def test_sequences_of_different_families_are_distinct():
    # Sp(2,R) and SL(4,R) both produce (2e_1, 2e_2) in their own coordinates
    a = maximal_sequences(pair_of("sp_r", n=2))[0]
    b = maximal_sequences(pair_of("sl_r", n=4))[-1]
    assert a.gammas == b.gammas and a != b


def test_cached_hilbert_data_not_shared_between_families():
    from mforbits.hilbert import hilbert_values

    a = maximal_sequences(pair_of("sp_r", n=2))[0]
    b = maximal_sequences(pair_of("sl_r", n=4))[-1]
    assert hilbert_values(a, 1, 3) != hilbert_values(b, 1, 3)
