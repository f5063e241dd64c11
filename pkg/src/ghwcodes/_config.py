"""Runtime knobs shared by the enumeration layers.

Environment variables
---------------------
GHWCODES_BUDGET
    Maximum number of subspaces or codewords a single enumeration may visit.
GHWCODES_DISABLE_NUMBA
    Set to ``1`` to route every hot kernel through the pure-numpy path.
"""

from __future__ import annotations

import os

DEFAULT_BUDGET = 10**7
MAX_FIELD_ORDER = 2**20
# add/mul lookup tables are q*q int64 arrays
MAX_TABLE_ORDER = 1024


class BudgetExceededError(RuntimeError):
    """An exact enumeration would visit more objects than the budget allows."""

    def __init__(self, needed: int, budget: int, what: str = "objects") -> None:
        super().__init__(f"enumeration needs {needed} {what}, budget is {budget}")
        self.needed = needed
        self.budget = budget


def default_budget() -> int:
    raw = os.environ.get("GHWCODES_BUDGET")
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET
    value = int(raw)
    if value < 1:
        raise ValueError("GHWCODES_BUDGET must be >= 1")
    return value


def resolve_budget(budget: int | None) -> int:
    if budget is None:
        return default_budget()
    if budget < 1:
        raise ValueError("budget must be >= 1")
    return int(budget)


def check_budget(needed: int, budget: int | None, what: str = "objects") -> None:
    limit = resolve_budget(budget)
    if needed > limit:
        raise BudgetExceededError(needed, limit, what)


def numba_disabled() -> bool:
    return os.environ.get("GHWCODES_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}
