"""Global and per-color bound calculus for the amalgam coloring.

Six exact parameters govern how many crossing edges of each shape a color
class may carry (all with the abbreviations sm = s*m, sn = s*n, rm = r*m):

    iota1 = sm - sn/2 - rm/2        rho1 = (sm - rm)/3      rhop1 = sm/2 - sn/8 - 3rm/8
    iota2 = sm - sn/2               rho2 = sm/3             rhop2 = sm/2 - sn/8

The tier-2 values exist only when there are new colors (k > q).  iota1 and
iota2 are integers whenever both triples are admissible.  Once a color j is
assigned its count e_j of {3 old, 1 new} subsets, the surviving freedom for
its {2 old, 2 new} count is the interval [iota_ij, rho_ij]:

    tier 1:  iota_1j = sm - sn/4 - 2 e_j - 3rm/4     rho_1j = sm/2 - (3/2) e_j - rm/2
    tier 2:  iota_2j = sm - sn/4 - 2 e_j             rho_2j = sm/2 - (3/2) e_j

Sign equivalences tying the two levels together (i = 1, 2):

    rho_ij >= 0        <=>  e_j <= rho_i
    iota_ij >= 0       <=>  e_j <= rhop_i
    rho_ij >= iota_ij  <=>  e_j >= iota_i

The signs of (iota1, iota2, rhop1, rhop2) split the admissible space into
six regimes (case codes "5.1".."5.6"); the planner dispatches on the tag.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import InputError
from .params import EmbeddingParams, TheoremCase, color_counts, theorem_case


class Tier(enum.Enum):
    OLD = "old"  # kappa1: colors carrying the inner factorization
    NEW = "new"  # kappa2: colors used only on crossing/new subsets


@dataclass(frozen=True)
class BoundSet:
    """Global bounds; tier-2 fields are None when there are no new colors."""

    iota1: int
    rho1: Fraction
    rhop1: Fraction
    iota2: int | None
    rho2: Fraction | None
    rhop2: Fraction | None

    @property
    def two_tier(self) -> bool:
        return self.iota2 is not None


@dataclass(frozen=True)
class PerColorBounds:
    iota: int
    rho: Fraction
    tier: Tier


class AmalgamCase(enum.Enum):
    """Sign regime of (iota1, iota2, rhop1, rhop2); value is the case code.

    FREE_RANGE            iota2 <= 0, rhop2 < 0           (n > 4m)
    BOTH_FLOORS           0 <= iota1, 0 <= rhop1          (n <= (2 - r/s) m)
    NEW_FLOOR             iota1 < 0 <= iota2, 0 <= rhop1
    OLD_PINNED_NEW_FLOOR  iota2 > 0, rhop1 < 0 <= rhop2
    THRESHOLD_SPLIT       iota2 < 0, 0 <= rhop1
    OLD_PINNED_THRESHOLD  iota2 <= 0, rhop1 < 0 <= rhop2

    With no new colors the classification collapses to the inner-tier signs:
    iota1 >= 0 -> BOTH_FLOORS, else rhop1 >= 0 -> NEW_FLOOR, else FREE_RANGE.
    """

    FREE_RANGE = "5.1"
    BOTH_FLOORS = "5.2"
    NEW_FLOOR = "5.3"
    OLD_PINNED_NEW_FLOOR = "5.4"
    THRESHOLD_SPLIT = "5.5"
    OLD_PINNED_THRESHOLD = "5.6"

    @property
    def code(self) -> str:
        return self.value


def global_bounds(p: EmbeddingParams) -> BoundSet:
    """Exact global bounds; requires both triples admissible and s >= r."""
    q, k = color_counts(p)  # raises on inadmissible input
    if p.s < p.r:
        raise InputError(f"bounds need s >= r, got r={p.r}, s={p.s}")
    m, n, r, s = p.m, p.n, p.r, p.s
    sm, sn, rm = s * m, s * n, r * m

    iota1 = Fraction(sm) - Fraction(sn, 2) - Fraction(rm, 2)
    if iota1.denominator != 1:
        raise InputError("iota1 not integral; input not admissible")
    rho1 = Fraction(sm - rm, 3)
    rhop1 = Fraction(sm, 2) - Fraction(sn, 8) - Fraction(3 * rm, 8)

    if k == q:
        return BoundSet(int(iota1), rho1, rhop1, None, None, None)

    iota2 = Fraction(sm) - Fraction(sn, 2)
    if iota2.denominator != 1:
        raise InputError("iota2 not integral; input not admissible")
    return BoundSet(int(iota1), rho1, rhop1, int(iota2),
                    Fraction(sm, 3), Fraction(sm, 2) - Fraction(sn, 8))


def per_color_bounds(p: EmbeddingParams, tier: Tier, e_j: int) -> PerColorBounds:
    """Bounds on the {2 old, 2 new} count of one color given its e_j."""
    if e_j < 0:
        raise InputError(f"e_j must be nonnegative, got {e_j}")
    m, n, r, s = p.m, p.n, p.r, p.s
    sm, sn, rm = s * m, s * n, r * m
    if tier is Tier.OLD:
        iota = Fraction(sm) - Fraction(sn, 4) - 2 * e_j - Fraction(3 * rm, 4)
        rho = Fraction(sm, 2) - Fraction(3 * e_j, 2) - Fraction(rm, 2)
    else:
        iota = Fraction(sm) - Fraction(sn, 4) - 2 * e_j
        rho = Fraction(sm, 2) - Fraction(3 * e_j, 2)
    if iota.denominator != 1:
        raise InputError("per-color lower bound not integral; input not admissible")
    return PerColorBounds(int(iota), rho, tier)


def case_classify(p: EmbeddingParams, bounds: BoundSet | None = None) -> AmalgamCase:
    """The unique sign regime of p; refuses out-of-scope parameters."""
    if theorem_case(p) is TheoremCase.OUT_OF_SCOPE:
        raise InputError("parameters out of scope: no case applies")
    b = bounds if bounds is not None else global_bounds(p)
    return sign_case(b)


def sign_case(b: BoundSet) -> AmalgamCase:
    """Sign classification alone, with no scope gate (see case_classify)."""
    if not b.two_tier:
        if b.iota1 >= 0:
            return AmalgamCase.BOTH_FLOORS
        if b.rhop1 >= 0:
            return AmalgamCase.NEW_FLOOR
        return AmalgamCase.FREE_RANGE
    if b.rhop2 < 0:
        return AmalgamCase.FREE_RANGE
    if b.rhop1 >= 0:
        if b.iota1 >= 0:
            return AmalgamCase.BOTH_FLOORS
        if b.iota2 >= 0:
            return AmalgamCase.NEW_FLOOR
        return AmalgamCase.THRESHOLD_SPLIT
    if b.iota2 > 0:
        return AmalgamCase.OLD_PINNED_NEW_FLOOR
    return AmalgamCase.OLD_PINNED_THRESHOLD


def floors(b: BoundSet) -> dict[str, int | None]:
    """Floor snapshot (iota1, |rhop1|, |rho1|, iota2, |rhop2|, |rho2|) for reports."""
    return {
        "iota1": b.iota1,
        "rhop1_floor": floor(b.rhop1),
        "rho1_floor": floor(b.rho1),
        "iota2": b.iota2,
        "rhop2_floor": floor(b.rhop2) if b.two_tier else None,
        "rho2_floor": floor(b.rho2) if b.two_tier else None,
    }
