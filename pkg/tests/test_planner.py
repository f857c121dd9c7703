from collections import Counter

import pytest

from quadembed.bounds import AmalgamCase, global_bounds
from quadembed.errors import InputError, PlanInfeasible
from quadembed.params import EmbeddingParams, check_conditions, color_counts
from quadembed.planner import (
    build_plan,
    extend_plan,
    parse_plan,
    plan_e,
    plan_f,
    plan_to_json,
    render_plan,
    totals,
    verify_plan,
)
from quadembed import sporadic


def test_totals_examples():
    assert totals(EmbeddingParams(6, 9, 2, 4, 1)) == (60, 45, 6, 0)
    assert totals(EmbeddingParams(8, 16, 1, 1, 1)) == (448, 784, 448, 70)
    # n = m + 1 leaves nothing with 3 or 4 new vertices
    e, f, g, h = totals(EmbeddingParams(8, 9, 5, 8, 1))
    assert (g, h) == (0, 0) and e == 56


def test_plan_e_examples():
    p = EmbeddingParams(6, 8, 2, 5, 1)
    e_list, subcase = plan_e(p)
    assert Counter(e_list[:5]) == {4: 5} and Counter(e_list[5:]) == {10: 2}
    assert subcase is None

    p = EmbeddingParams(8, 16, 1, 1, 1)
    e_list, subcase = plan_e(p)
    assert Counter(e_list[:35]) == {0: 35}
    assert Counter(e_list[35:]) == {0: 196, 2: 224}
    assert subcase == "i"

    p = EmbeddingParams(5, 8, 4, 5, 1)
    e_list, _ = plan_e(p)
    assert e_list == [0] + [5] * 6


def test_plan_f_forced_example():
    p = EmbeddingParams(6, 8, 2, 5, 1)
    f_list = plan_f(p, None, [4] * 5 + [10] * 2)
    assert f_list == [3] * 5 + [0] * 2


def test_plan_f_rejects_bad_e_choice():
    # valid e-system solution whose f-system is infeasible (lower bound 48 > 45)
    p = EmbeddingParams(6, 9, 2, 4, 1)
    with pytest.raises(PlanInfeasible):
        plan_f(p, None, [4, 0, 0, 0, 0, 8, 6, 6, 6, 6, 6, 6, 6, 6])


def test_equal_regularity_forces_zero_f_on_old_colors():
    p = EmbeddingParams(8, 16, 1, 1, 1)
    plan = build_plan(p)
    q, _ = color_counts(p)
    assert all(x == 0 for x in plan.e[:q])
    assert all(x == 0 for x in plan.f[:q])
    assert all(x == 0 for x in plan.g[:q])
    # old classes are filled by all-new subsets: h_j = s(n-m)/4
    assert all(x == p.s * (p.n - p.m) // 4 for x in plan.h[:q])


def test_extend_plan_examples():
    p = EmbeddingParams(6, 8, 2, 5, 1)
    plan = extend_plan(p, [4] * 5 + [10] * 2, [3] * 5 + [0] * 2)
    assert plan.g == (0,) * 7 and plan.h == (0,) * 7

    p = EmbeddingParams(6, 9, 2, 4, 1)
    plan = build_plan(p)
    assert sum(plan.g) == 6 and sum(plan.h) == 0


def test_verify_plan_catches_perturbation():
    p = EmbeddingParams(6, 8, 2, 5, 1)
    plan = build_plan(p)
    assert verify_plan(p, plan)
    bumped = plan.__class__(p, plan.case, plan.subcase, plan.via,
                            plan.e, (plan.f[0] + 1,) + plan.f[1:],
                            plan.g, plan.h)
    assert not verify_plan(p, bumped)


def test_verify_plan_rejects_negative_entries():
    p = EmbeddingParams(6, 8, 2, 5, 1)
    plan = build_plan(p)
    bad = plan.__class__(p, plan.case, plan.subcase, plan.via,
                         (-1,) + plan.e[1:], plan.f, plan.g, plan.h)
    assert not verify_plan(p, bad)


def test_build_plan_gates():
    with pytest.raises(InputError):
        build_plan(EmbeddingParams(7, 10, 4, 6, 1))  # N6 fails
    with pytest.raises(InputError):
        build_plan(EmbeddingParams(8, 9, 5, 8, 1))  # out of scope
    plan = build_plan(EmbeddingParams(8, 9, 5, 8, 1), force_out_of_scope=True)
    assert plan.e == (8,) * 7 and plan.f == (0,) * 7
    assert verify_plan(EmbeddingParams(8, 9, 5, 8, 1), plan)


def test_build_plan_fallback_repairs_parity():
    # greedy e-choice leaves an odd color count exceeding the {1 old, 3 new}
    # supply; the exhaustive fallback must find a workable multiset
    p = EmbeddingParams(12, 16, 1, 2, 2)
    plan = build_plan(p)
    assert plan.via == "fallback"
    assert verify_plan(p, plan)


def test_sporadic_registry_rows_are_consistent():
    for (m, n, r, s), _ in sporadic.REGISTRY.items():
        p = EmbeddingParams(m, n, r, s, 1)
        q, k = color_counts(p)
        old_vals, new_vals = sporadic.lookup(m, n, r, s)
        assert len(old_vals) == q and len(new_vals) == k - q
        e_list = old_vals + new_vals
        assert sum(e_list) == totals(p)[0]
        # every registered multiset admits a feasible follow-up system
        f_list = plan_f(p, None, e_list)
        plan = extend_plan(p, e_list, f_list, via="sporadic")
        assert verify_plan(p, plan)


def test_parse_multiset():
    assert sporadic.parse_multiset("0^2,2^3") == [0, 0, 2, 2, 2]
    assert sporadic.parse_multiset("7") == [7]
    with pytest.raises(InputError):
        sporadic.parse_multiset("")


def test_plan_round_trip_text():
    for tup in [(6, 8, 2, 5, 1), (5, 8, 4, 5, 1), (6, 8, 2, 7, 1)]:
        p = EmbeddingParams(*tup)
        plan = build_plan(p)
        again = parse_plan(render_plan(plan))
        assert again == plan
        assert render_plan(again) == render_plan(plan)


def test_plan_json_shape():
    import json
    p = EmbeddingParams(6, 8, 2, 5, 1)
    doc = json.loads(plan_to_json(build_plan(p)))
    assert doc["case"] == "5.2" and doc["q"] == 5 and doc["k"] == 7
    assert doc["colors"][0] == {"j": 1, "tier": "old", "e": 4, "f": 3,
                                "g": 0, "h": 0}
    assert doc["colors"][-1]["tier"] == "new"


def test_case_code_with_subcase():
    plan = build_plan(EmbeddingParams(8, 16, 1, 1, 1))
    assert plan.case is AmalgamCase.OLD_PINNED_THRESHOLD
    assert plan.case_code == "5.6(i)"


def test_threshold_subcase_iii_pins_iota_to_units():
    from quadembed.bounds import Tier, per_color_bounds, sign_case
    from quadembed.params import TheoremCase
    from quadembed.planner import color_tiers
    from conftest import sweep_params

    found = {AmalgamCase.THRESHOLD_SPLIT: 0, AmalgamCase.OLD_PINNED_THRESHOLD: 0}
    for p in sweep_params(n_hi=30, r_hi=12, s_hi=12, lam_hi=1):
        rep = check_conditions(p)
        if not rep.all_hold() or rep.theorem_case is TheoremCase.OUT_OF_SCOPE:
            continue
        b = global_bounds(p)
        case = sign_case(b)
        if case not in found:
            continue
        e_list, subcase = plan_e(p, b)
        if subcase != "iii":
            continue
        found[case] += 1
        q, k = color_counts(p)
        for e_j, tier in zip(e_list, color_tiers(q, k)):
            if case is AmalgamCase.OLD_PINNED_THRESHOLD and tier is Tier.OLD:
                continue  # pinned at 0, below its own threshold
            iota = per_color_bounds(p, tier, e_j).iota
            if case is AmalgamCase.THRESHOLD_SPLIT:
                assert iota in (-1, 0, 1), (p, tier, e_j)
            else:
                assert iota in (-1, 1), (p, tier, e_j)
    assert all(found.values()), found
