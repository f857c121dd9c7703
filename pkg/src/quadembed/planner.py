"""Per-color planning of the amalgam coloring.

A plan assigns every color j a quadruple (e_j, f_j, g_j, h_j): how many
crossing subsets with exactly 3, 2, 1, 0 old vertices the class will carry.
The totals are forced by counting:

    e = lam (n-m) C(m,3)   f = lam C(m,2) C(n-m,2)
    g = lam m C(n-m,3)     h = lam C(n-m,4)

Planning happens in two interval-sum solves.  First the e_j are chosen
inside per-tier intervals dictated by the case tag (see bounds.AmalgamCase);
the threshold cases split further into three subcases by comparing e against
the floor/ceil threshold sums.  Then the f_j are chosen inside the surviving
per-color intervals [iota_ij, rho_ij].  The remaining counts are forced:

    g_j = 2 rho_ij - 2 f_j        h_j = f_j - iota_ij

which makes every class satisfy the degree laws

    3 e_j + 2 f_j + g_j           = m(s-r)   (old tier)   or  sm  (new tier)
    e_j + 2 f_j + 3 g_j + 4 h_j   = s(n-m)   (every color).

The general machinery can pick an e-coloring whose f-system is infeasible
(a parity effect: too many colors with sm + e_j odd when few {1 old, 3 new}
subsets exist).  On such a failure the planner consults the sporadic
registry, then falls back to exhaustive search over e_j multisets within
the master range [max(iota_i, 0), floor(rho_i)].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from . import sporadic
from .bounds import (
    AmalgamCase,
    BoundSet,
    Tier,
    case_classify,
    global_bounds,
    per_color_bounds,
    sign_case,
)
from .combinat import binomial
from .errors import InputError, PlanInfeasible
from .intervals import IntervalSystem
from .params import (
    ConditionReport,
    EmbeddingParams,
    TheoremCase,
    check_conditions,
    color_counts,
)

FALLBACK_CAP = 200_000  # e-multiset candidates tried before giving up


@dataclass(frozen=True)
class AmalgamPlan:
    params: EmbeddingParams
    case: AmalgamCase
    subcase: str | None  # "i" / "ii" / "iii" for the threshold cases
    via: str  # "general", "sporadic" or "fallback"
    e: tuple[int, ...]
    f: tuple[int, ...]
    g: tuple[int, ...]
    h: tuple[int, ...]

    @property
    def case_code(self) -> str:
        if self.subcase in ("i", "ii", "iii"):
            return f"{self.case.code}({self.subcase})"
        return self.case.code


def totals(p: EmbeddingParams) -> tuple[int, int, int, int]:
    """Crossing-subset totals (e, f, g, h) by shape."""
    m, n, lam = p.m, p.n, p.lam
    return (
        lam * (n - m) * binomial(m, 3),
        lam * binomial(m, 2) * binomial(n - m, 2),
        lam * m * binomial(n - m, 3),
        lam * binomial(n - m, 4),
    )


def color_tiers(q: int, k: int) -> list[Tier]:
    return [Tier.OLD] * q + [Tier.NEW] * (k - q)


def _e_intervals(p, b: BoundSet, case: AmalgamCase, e_total: int, q: int, k: int):
    """Per-tier (lo, hi) for the e-system plus the subcase that fired."""
    zero = Fraction(0)
    if case is AmalgamCase.FREE_RANGE:
        return (0, b.rho1), (0, b.rho2) if b.two_tier else None, None
    if case is AmalgamCase.BOTH_FLOORS:
        return (b.iota1, b.rhop1), (b.iota2, b.rhop2) if b.two_tier else None, None
    if case is AmalgamCase.NEW_FLOOR:
        return (0, b.rhop1), (b.iota2, b.rhop2) if b.two_tier else None, None
    if case is AmalgamCase.OLD_PINNED_NEW_FLOOR:
        return (0, zero), (b.iota2, b.rhop2), None
    if case is AmalgamCase.THRESHOLD_SPLIT:
        t_lo = q * floor(b.rhop1) + (k - q) * floor(b.rhop2)
        t_hi = q * ceil(b.rhop1) + (k - q) * ceil(b.rhop2)
        if e_total <= t_lo:
            return (0, b.rhop1), (0, b.rhop2), "i"
        if e_total >= t_hi:
            return (ceil(b.rhop1), b.rho1), (ceil(b.rhop2), b.rho2), "ii"
        return (floor(b.rhop1), Fraction(ceil(b.rhop1))), \
               (floor(b.rhop2), Fraction(ceil(b.rhop2))), "iii"
    if case is AmalgamCase.OLD_PINNED_THRESHOLD:
        t_lo = (k - q) * floor(b.rhop2)
        t_hi = (k - q) * ceil(b.rhop2)
        if e_total <= t_lo:
            return (0, zero), (0, b.rhop2), "i"
        if e_total >= t_hi:
            return (0, b.rho1), (ceil(b.rhop2), b.rho2), "ii"
        return (0, zero), (floor(b.rhop2), Fraction(ceil(b.rhop2))), "iii"
    raise AssertionError(f"unhandled case {case}")


def plan_e(p: EmbeddingParams, b: BoundSet | None = None) -> tuple[list[int], str | None]:
    """Choose per-color e_j by the case discipline; (values, subcase)."""
    b = b if b is not None else global_bounds(p)
    q, k = color_counts(p)
    case = sign_case(b)
    e_total = totals(p)[0]
    iv1, iv2, subcase = _e_intervals(p, b, case, e_total, q, k)
    entries = [iv1] * q + ([iv2] * (k - q) if iv2 is not None else [])
    try:
        system = IntervalSystem(e_total, entries)
    except InputError as exc:
        raise PlanInfeasible(f"e-system malformed for case {case.code}: {exc}") from exc
    xs = system.solve()
    if xs is None:
        raise PlanInfeasible(
            f"e-system infeasible for case {case.code}"
            f" (target {e_total} outside [{system.lower_bound()}, {system.upper_bound()}])"
        )
    return xs, subcase


def plan_f(p: EmbeddingParams, b: BoundSet | None, e_list: list[int]) -> list[int]:
    """Choose per-color f_j inside [iota_ij, rho_ij]; raises PlanInfeasible."""
    q, k = color_counts(p)
    if len(e_list) != k:
        raise InputError(f"expected {k} e-values, got {len(e_list)}")
    f_total = totals(p)[1]
    entries = []
    for e_j, tier in zip(e_list, color_tiers(q, k)):
        pc = per_color_bounds(p, tier, e_j)
        entries.append((pc.iota, pc.rho))
    try:
        system = IntervalSystem(f_total, entries)
    except InputError as exc:
        raise PlanInfeasible(f"f-system malformed: {exc}") from exc
    xs = system.solve()
    if xs is None:
        raise PlanInfeasible(
            f"f-system infeasible (target {f_total} outside"
            f" [{system.lower_bound()}, {system.upper_bound()}])"
        )
    return xs


def extend_plan(
    p: EmbeddingParams,
    e_list: list[int],
    f_list: list[int],
    case: AmalgamCase | None = None,
    subcase: str | None = None,
    via: str = "general",
) -> AmalgamPlan:
    """Force g_j and h_j from (e_j, f_j) and assert every plan invariant."""
    q, k = color_counts(p)
    if case is None:
        case = sign_case(global_bounds(p))
    g_list, h_list = [], []
    for e_j, f_j, tier in zip(e_list, f_list, color_tiers(q, k)):
        pc = per_color_bounds(p, tier, e_j)
        two_rho = 2 * pc.rho
        assert two_rho.denominator == 1
        g_j = int(two_rho) - 2 * f_j
        h_j = f_j - pc.iota
        assert g_j >= 0, f"f_j={f_j} above rho for e_j={e_j}"
        assert h_j >= 0, f"f_j={f_j} below iota for e_j={e_j}"
        g_list.append(g_j)
        h_list.append(h_j)
    plan = AmalgamPlan(p, case, subcase, via,
                       tuple(e_list), tuple(f_list), tuple(g_list), tuple(h_list))
    assert verify_plan(p, plan), "constructed plan fails independent verification"
    return plan


def verify_plan(p: EmbeddingParams, plan: AmalgamPlan) -> bool:
    """Recompute the four totals and both degree laws from scratch."""
    try:
        q, k = color_counts(p)
    except InputError:
        return False
    cols = (plan.e, plan.f, plan.g, plan.h)
    if any(len(col) != k for col in cols):
        return False
    if any(x < 0 for col in cols for x in col):
        return False
    if tuple(sum(col) for col in cols) != totals(p):
        return False
    m, n, r, s = p.m, p.n, p.r, p.s
    for j in range(k):
        e_j, f_j, g_j, h_j = plan.e[j], plan.f[j], plan.g[j], plan.h[j]
        old_degree = 3 * e_j + 2 * f_j + g_j
        if old_degree != (m * (s - r) if j < q else s * m):
            return False
        if e_j + 2 * f_j + 3 * g_j + 4 * h_j != s * (n - m):
            return False
    return True


def _multiset_lists(values: list[int], slots: int, total: int):
    """All length-``slots`` multisets over ``values`` with the given sum."""
    if slots == 0:
        if total == 0:
            yield []
        return
    if not values:
        return
    v, rest = values[0], values[1:]
    lo = min(rest) if rest else None
    hi = max(rest) if rest else None
    for count in range(slots, -1, -1):
        remaining = total - count * v
        left = slots - count
        if left == 0:
            if remaining == 0:
                yield [v] * count
            continue
        if lo is None or not (left * lo <= remaining <= left * hi):
            continue
        for tail in _multiset_lists(rest, left, remaining):
            yield [v] * count + tail


def _fallback_candidates(p, b: BoundSet, q: int, k: int, e_total: int):
    """e-multisets within the master range, parity-friendly values first."""
    sm = p.s * p.m

    def tier_values(iota, rho):
        lo, hi = max(iota, 0), floor(rho)
        vals = list(range(lo, hi + 1))
        return sorted(vals, key=lambda v: ((sm + v) % 2, v))

    vals1 = tier_values(b.iota1, b.rho1)
    if not b.two_tier:
        for ms in _multiset_lists(vals1, q, e_total):
            yield ms
        return
    vals2 = tier_values(b.iota2, b.rho2)
    lo2, hi2 = (k - q) * min(vals2), (k - q) * max(vals2)
    for s1 in range(max(q * min(vals1), e_total - hi2),
                    min(q * max(vals1), e_total - lo2) + 1):
        for ms1 in _multiset_lists(vals1, q, s1):
            for ms2 in _multiset_lists(vals2, k - q, e_total - s1):
                yield ms1 + ms2


def build_plan(p: EmbeddingParams, report: ConditionReport | None = None,
               force_out_of_scope: bool = False) -> AmalgamPlan:
    """Full planning pipeline: general machinery, then registry, then fallback.

    Out-of-scope parameters are refused by default (no feasibility guarantee
    exists there).  With ``force_out_of_scope`` the pipeline still runs: the
    master interval system is exact regardless of regime, so a returned plan
    is sound, but failure to find one proves nothing.  Failing necessary
    conditions are never bypassed.
    """
    report = report if report is not None else check_conditions(p)
    if not report.all_hold():
        raise InputError("necessary conditions fail: " + ", ".join(report.failing()))
    if report.theorem_case is TheoremCase.OUT_OF_SCOPE and not force_out_of_scope:
        raise InputError("parameters out of scope; refusing to plan")
    b = global_bounds(p)
    q, k = color_counts(p)
    case = sign_case(b)

    try:
        e_list, subcase = plan_e(p, b)
        f_list = plan_f(p, b, e_list)
        return extend_plan(p, e_list, f_list, case, subcase)
    except PlanInfeasible:
        pass

    if p.lam == 1:
        reg = sporadic.lookup(p.m, p.n, p.r, p.s)
        if reg is not None:
            old_vals, new_vals = reg
            if len(old_vals) == q and len(new_vals) == k - q:
                try:
                    e_list = old_vals + new_vals
                    f_list = plan_f(p, b, e_list)
                    return extend_plan(p, e_list, f_list, case, None, via="sporadic")
                except PlanInfeasible:
                    pass

    e_total = totals(p)[0]
    for tried, e_list in enumerate(_fallback_candidates(p, b, q, k, e_total)):
        if tried >= FALLBACK_CAP:
            raise PlanInfeasible(f"fallback cap of {FALLBACK_CAP} e-multisets exhausted")
        try:
            f_list = plan_f(p, b, e_list)
            return extend_plan(p, e_list, f_list, case, None, via="fallback")
        except PlanInfeasible:
            continue
    raise PlanInfeasible("no feasible e-multiset in the master range")


def render_plan(plan: AmalgamPlan) -> str:
    p = plan.params
    q, _ = color_counts(p)
    head = (f"{p.m} {p.n} {p.r} {p.s} {p.lam} {q} {len(plan.e)}"
            f" {plan.case.code} {plan.subcase or '-'} {plan.via}")
    lines = [head]
    for j in range(len(plan.e)):
        tier = "old" if j < q else "new"
        lines.append(f"{j + 1} {tier} {plan.e[j]} {plan.f[j]} {plan.g[j]} {plan.h[j]}")
    return "\n".join(lines) + "\n"


def parse_plan(text: str) -> AmalgamPlan:
    from .errors import FormatError

    lines = [ln for ln in text.splitlines()]
    if not lines:
        raise FormatError("empty plan file", 1)
    head = lines[0].split()
    if len(head) != 10:
        raise FormatError(f"expected 10 header fields, got {len(head)}", 1)
    try:
        m, n, r, s, lam, q, k = (int(x) for x in head[:7])
    except ValueError as exc:
        raise FormatError(f"bad header: {exc}", 1) from exc
    case = AmalgamCase(head[7])
    subcase = None if head[8] == "-" else head[8]
    via = head[9]
    p = EmbeddingParams(m, n, r, s, lam)
    rows = [ln for ln in lines[1:] if ln.strip()]
    if len(rows) != k:
        raise FormatError(f"expected {k} color rows, got {len(rows)}", len(lines))
    e, f, g, h = [], [], [], []
    for offset, ln in enumerate(rows):
        parts = ln.split()
        lineno = offset + 2
        if len(parts) != 6:
            raise FormatError(f"expected 6 fields, got {len(parts)}", lineno)
        j = int(parts[0])
        if j != offset + 1:
            raise FormatError(f"color index {j} out of order", lineno)
        want_tier = "old" if offset < q else "new"
        if parts[1] != want_tier:
            raise FormatError(f"color {j} should be tier {want_tier}", lineno)
        e.append(int(parts[2]))
        f.append(int(parts[3]))
        g.append(int(parts[4]))
        h.append(int(parts[5]))
    return AmalgamPlan(p, case, subcase, via, tuple(e), tuple(f), tuple(g), tuple(h))


def plan_to_json(plan: AmalgamPlan) -> str:
    p = plan.params
    q, _ = color_counts(p)
    doc = {
        "m": p.m, "n": p.n, "r": p.r, "s": p.s, "lambda": p.lam,
        "q": q, "k": len(plan.e),
        "case": plan.case.code, "subcase": plan.subcase, "via": plan.via,
        "colors": [
            {"j": j + 1, "tier": "old" if j < q else "new",
             "e": plan.e[j], "f": plan.f[j], "g": plan.g[j], "h": plan.h[j]}
            for j in range(len(plan.e))
        ],
    }
    return json.dumps(doc, indent=2)
