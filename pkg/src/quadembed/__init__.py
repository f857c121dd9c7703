"""Embeddings of regular 4-set systems.

Given an r-factorization of the lam-fold complete 4-uniform system on m
vertices, decide whether it extends to an s-factorization on n vertices,
plan the extension color by color, and construct an explicit certificate.
"""

from .bounds import (
    AmalgamCase,
    BoundSet,
    PerColorBounds,
    Tier,
    case_classify,
    global_bounds,
    per_color_bounds,
)
from .combinat import binomial, frc, identity_a, identity_b, identity_c
from .detach import DEFAULT_NODE_BUDGET, detach, generate_base
from .errors import FormatError, InputError, PlanInfeasible, SearchExhausted
from .factorization import (
    EmbeddingCertificate,
    Factorization,
    certificate_issues,
    crossing_profile,
    factorization_issues,
    is_valid_factorization,
    parse_factorization,
    read_factorization,
    render_factorization,
    verify_certificate,
    write_factorization,
)
from .intervals import IntervalSystem
from .params import (
    ConditionReport,
    EmbeddingParams,
    TheoremCase,
    Verdict,
    check_conditions,
    check_structural_facts,
    color_counts,
    is_admissible,
)
from .planner import (
    AmalgamPlan,
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

__version__ = "0.1.0"
