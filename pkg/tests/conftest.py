from pathlib import Path

from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

from quadembed.combinat import binomial
from quadembed.params import EmbeddingParams

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def admissible_regularities(v: int, lam: int, hi: int) -> list[int]:
    return [
        r for r in range(1, hi + 1)
        if (r * v) % 4 == 0 and (lam * binomial(v - 1, 3)) % r == 0
    ]


def sweep_params(n_hi: int, r_hi: int, s_hi: int, lam_hi: int):
    """All admissible-triple tuples with 4 <= m < n <= n_hi, minus excluded inputs."""
    for lam in range(1, lam_hi + 1):
        for m in range(4, n_hi):
            rs = admissible_regularities(m, lam, r_hi)
            if not rs:
                continue
            for n in range(m + 1, n_hi + 1):
                ss = admissible_regularities(n, lam, s_hi)
                for r in rs:
                    if m == 4 and (r < 2 or lam < 2):
                        continue
                    for s in ss:
                        yield EmbeddingParams(m, n, r, s, lam)
