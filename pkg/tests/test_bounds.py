from fractions import Fraction
from math import ceil, floor

import pytest

from quadembed.bounds import (
    AmalgamCase,
    Tier,
    case_classify,
    global_bounds,
    per_color_bounds,
    sign_case,
)
from quadembed.errors import InputError
from quadembed.params import EmbeddingParams, TheoremCase, check_conditions, color_counts

from conftest import sweep_params


def _floors(p):
    b = global_bounds(p)
    out = [b.iota1, floor(b.rhop1), floor(b.rho1)]
    if b.two_tier:
        out += [b.iota2, floor(b.rhop2), floor(b.rho2)]
    return out


def test_global_bounds_table_rows():
    assert _floors(EmbeddingParams(6, 8, 2, 5, 1)) == [4, 5, 6, 10, 10, 10]
    assert _floors(EmbeddingParams(8, 16, 1, 1, 1)) == [-4, -1, 0, 0, 2, 2]
    assert _floors(EmbeddingParams(9, 12, 4, 11, 1)) == [15, 19, 21, 33, 33, 33]


def test_global_bounds_single_tier_when_counts_match():
    b = global_bounds(EmbeddingParams(6, 8, 2, 7, 1))
    assert not b.two_tier
    assert (b.iota2, b.rho2, b.rhop2) == (None, None, None)
    assert [b.iota1, floor(b.rhop1), floor(b.rho1)] == [8, 9, 10]


def test_global_bounds_rejects_bad_input():
    with pytest.raises(InputError):
        global_bounds(EmbeddingParams(6, 8, 5, 2, 1))  # s < r
    with pytest.raises(InputError):
        global_bounds(EmbeddingParams(5, 8, 2, 5, 1))  # inadmissible inner


def test_per_color_bounds_examples():
    pc = per_color_bounds(EmbeddingParams(6, 8, 2, 5, 1), Tier.OLD, 4)
    assert (pc.iota, pc.rho) == (3, Fraction(3))
    pc = per_color_bounds(EmbeddingParams(6, 9, 2, 4, 1), Tier.OLD, 4)
    assert (pc.iota, pc.rho) == (-2, Fraction(0))
    pc = per_color_bounds(EmbeddingParams(6, 9, 2, 4, 1), Tier.NEW, 6)
    assert (pc.iota, pc.rho) == (3, Fraction(3))


def test_per_color_bounds_rejects_negative_count():
    with pytest.raises(InputError):
        per_color_bounds(EmbeddingParams(6, 8, 2, 5, 1), Tier.OLD, -1)


def test_case_classify_examples():
    assert case_classify(EmbeddingParams(6, 8, 2, 5, 1)) is AmalgamCase.BOTH_FLOORS
    assert case_classify(EmbeddingParams(5, 8, 4, 5, 1)) is AmalgamCase.NEW_FLOOR
    assert case_classify(EmbeddingParams(8, 16, 1, 1, 1)) \
        is AmalgamCase.OLD_PINNED_THRESHOLD
    assert case_classify(EmbeddingParams(6, 8, 2, 5, 1)).code == "5.2"


def test_case_classify_refuses_out_of_scope():
    with pytest.raises(InputError):
        case_classify(EmbeddingParams(8, 9, 5, 8, 1))


def _passing_in_scope(n_hi=25, r_hi=8, s_hi=8, lam_hi=2):
    for p in sweep_params(n_hi, r_hi, s_hi, lam_hi):
        rep = check_conditions(p)
        if rep.all_hold() and rep.theorem_case is not TheoremCase.OUT_OF_SCOPE:
            yield p


def test_bound_chain_invariants_over_sweep():
    seen_rs = False
    for p in _passing_in_scope(n_hi=60, r_hi=20, s_hi=20, lam_hi=3):
        b = global_bounds(p)
        assert b.rho1 >= 0
        assert b.iota1 <= b.rhop1 <= b.rho1
        if b.two_tier:
            assert b.iota2 > b.iota1
            assert b.rho2 > b.rho1
            assert b.rhop2 > b.rhop1
            assert b.iota2 <= b.rhop2 <= b.rho2
        # sign equivalences of the global parameters
        m, n, r, s = p.m, p.n, p.r, p.s
        assert (b.iota1 >= 0) == (n * s <= (2 * s - r) * m)
        assert (b.rhop1 >= 0) == (n * s <= (4 * s - 3 * r) * m)
        if b.two_tier:
            assert (b.iota2 >= 0) == (n <= 2 * m)
            assert (b.rhop2 >= 0) == (n <= 4 * m)
        if r == s:
            seen_rs = True
            assert b.rho1 == 0 and b.rhop1 < 0
            for e_j in range(0, 4):
                pc = per_color_bounds(p, Tier.OLD, e_j)
                assert pc.iota < 0
                assert pc.rho <= 0 and (pc.rho == 0) == (e_j == 0)
    assert seen_rs, "sweep never exercised the r = s regime"


def test_per_color_equivalences_over_sweep():
    for p in _passing_in_scope(n_hi=20, r_hi=6, s_hi=6, lam_hi=1):
        b = global_bounds(p)
        tiers = [(Tier.OLD, b.iota1, b.rho1, b.rhop1)]
        if b.two_tier:
            tiers.append((Tier.NEW, b.iota2, b.rho2, b.rhop2))
        for tier, iota_i, rho_i, rhop_i in tiers:
            for e_j in range(0, floor(rho_i) + 3):
                pc = per_color_bounds(p, tier, e_j)
                assert (pc.rho >= 0) == (e_j <= rho_i)
                assert (pc.iota >= 0) == (e_j <= rhop_i)
                assert (pc.rho >= pc.iota) == (e_j >= iota_i)


def test_six_sign_patterns_partition_the_sweep():
    seen = set()
    for p in _passing_in_scope(n_hi=30, r_hi=10, s_hi=10, lam_hi=2):
        b = global_bounds(p)
        if not b.two_tier:
            continue
        patterns = {
            AmalgamCase.FREE_RANGE: b.iota2 <= 0 and b.rhop2 < 0,
            AmalgamCase.BOTH_FLOORS: 0 <= b.iota1 and 0 <= b.rhop1,
            AmalgamCase.NEW_FLOOR: b.iota1 < 0 <= b.iota2 and 0 <= b.rhop1,
            AmalgamCase.OLD_PINNED_NEW_FLOOR:
                b.iota1 < 0 < b.iota2 and b.rhop1 < 0 <= b.rhop2,
            AmalgamCase.THRESHOLD_SPLIT: b.iota2 < 0 and 0 <= b.rhop1,
            AmalgamCase.OLD_PINNED_THRESHOLD:
                b.iota2 <= 0 and b.rhop1 < 0 <= b.rhop2,
        }
        matches = [case for case, hit in patterns.items() if hit]
        assert len(matches) == 1, (p, matches)
        assert sign_case(b) is matches[0]
        seen.add(matches[0])
    assert AmalgamCase.BOTH_FLOORS in seen and AmalgamCase.NEW_FLOOR in seen


def test_iota_integrality_over_sweep():
    for p in _passing_in_scope(n_hi=20, r_hi=8, s_hi=8, lam_hi=1):
        b = global_bounds(p)
        assert isinstance(b.iota1, int)
        if b.two_tier:
            assert isinstance(b.iota2, int)
        q, k = color_counts(p)
        for tier, count in ((Tier.OLD, q), (Tier.NEW, k - q)):
            if count:
                assert isinstance(per_color_bounds(p, tier, 1).iota, int)
