#!/usr/bin/env python3
"""Recompute every column of the sporadic-case table from scratch.

For each registered tuple: color counts, the six global bounds (floored),
the crossing-subset totals, the case tag, and a check that the registered
e_j multiset feeds a feasible follow-up system.
"""

from math import floor

from quadembed.bounds import global_bounds, sign_case
from quadembed.params import EmbeddingParams, check_conditions
from quadembed.planner import plan_e, plan_f, totals
from quadembed.sporadic import REGISTRY, lookup


def fmt(x):
    return "NA" if x is None else str(x)


def main() -> int:
    header = ["m", "n", "r", "s", "q", "k", "k-q", "i1", "rp1", "r1",
              "i2", "rp2", "r2", "e", "f", "g", "case", "ej ok"]
    print(" ".join(f"{h:>5}" for h in header))
    for (m, n, r, s), _ in sorted(REGISTRY.items()):
        p = EmbeddingParams(m, n, r, s, 1)
        rep = check_conditions(p)
        assert rep.all_hold(), (m, n, r, s)
        b = global_bounds(p)
        e, f, g, _h = totals(p)
        case = sign_case(b)
        _, subcase = plan_e(p, b)
        code = f"{case.code}({subcase})" if subcase else case.code
        old_vals, new_vals = lookup(m, n, r, s)
        feasible = sum(old_vals + new_vals) == e
        if feasible:
            try:
                plan_f(p, b, old_vals + new_vals)
            except Exception:
                feasible = False
        row = [m, n, r, s, rep.q, rep.k, rep.k - rep.q,
               b.iota1, floor(b.rhop1), floor(b.rho1),
               fmt(b.iota2),
               fmt(floor(b.rhop2) if b.two_tier else None),
               fmt(floor(b.rho2) if b.two_tier else None),
               e, f, g, code, "yes" if feasible else "NO"]
        print(" ".join(f"{str(x):>5}" for x in row))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
