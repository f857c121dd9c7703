"""Exception types shared across the package."""


class InputError(ValueError):
    """Parameters outside the supported domain (bad ranges, excluded tuples)."""


class FormatError(ValueError):
    """Malformed plan/factorization file; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PlanInfeasible(RuntimeError):
    """No per-color assignment found (general machinery, registry and fallback all failed)."""


class SearchExhausted(RuntimeError):
    """Backtracking search gave up: node budget hit, or space exhausted with no solution.

    ``complete`` is True when the whole space was searched (a genuine
    non-existence certificate at this scale), False when the node budget ran
    out first (inconclusive).
    """

    def __init__(self, message: str, complete: bool = False):
        self.complete = complete
        super().__init__(message)
