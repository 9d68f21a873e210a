"""Exception types shared across the package."""

import os

DEFAULT_BUDGET = 2 ** 26


class ParameterError(ValueError):
    """Parameters violate a construction or operation precondition."""


class BudgetExceeded(RuntimeError):
    """An exhaustive computation would exceed the evaluation budget."""


class DecodeError(ValueError):
    """A product could not be factored; the input is not of the expected form."""


class SearchExhausted(RuntimeError):
    """A search ran out of candidates or trials without success."""


class VerificationFailure(RuntimeError):
    """A claimed property failed its independent re-check (internal error)."""


def budget_limit():
    """Evaluation budget; the SIDON_BUDGET environment variable overrides it."""
    value = os.environ.get("SIDON_BUDGET")
    if value:
        return int(value, 0)
    return DEFAULT_BUDGET


def check_budget(cost, what, force=False):
    limit = budget_limit()
    if not force and cost > limit:
        raise BudgetExceeded(f"{what}: {cost} evaluations exceeds budget {limit}")
