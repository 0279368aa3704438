"""
Structured events raised by theorem checks instead of exceptions.
"""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class ViolationEvent(BaseModel):
    """A claim that failed on a concrete graph; replayable from graph6 alone."""

    model_config = ConfigDict(frozen=True)

    graph6: str
    check: str
    detail: str
    witness: dict[str, Any] = Field(default_factory=dict)


class BudgetEvent(BaseModel):
    """A check that stopped early because it ran out of budget."""

    model_config = ConfigDict(frozen=True)

    graph6: str
    check: str
    detail: str
