"""Ceilings, budgets and the exceptions raised when they are exceeded."""
from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """A search would visit more trace states than the configured budget."""

    def __init__(self, estimate: int, budget: int, what: str = "search"):
        self.estimate = estimate
        self.budget = budget
        super().__init__(f"{what}: estimated {estimate} trace states exceeds budget {budget}")


class CeilingExceeded(ValueError):
    """An enumeration was asked for a size above its configured ceiling."""


@dataclass
class Limits:
    census_ceiling: int = 7
    canonical_ceiling: int = 8
    minor_ceiling: int = 6
    budget: int = DEFAULT_BUDGET


def env_budget() -> int:
    raw = os.environ.get("GENUSLAB_BUDGET")
    if not raw:
        return DEFAULT_BUDGET
    return int(float(raw))


LIMITS = Limits(budget=env_budget())


def resolve_budget(budget: int | None) -> int:
    return LIMITS.budget if budget is None else int(budget)
