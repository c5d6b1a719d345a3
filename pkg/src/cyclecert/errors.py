"""Shared exception types for budget-guarded searches."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """A search ran out of its node or time budget before reaching an answer.

    Distinct from a negative answer: the caller learns nothing about
    existence when this is raised.
    """


class IsomorphismBudgetError(BudgetExceededError):
    """The isomorphism backtracker hit its node cap; the answer is unknown."""
