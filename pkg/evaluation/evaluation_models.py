"""
Shared models for evaluation.
"""
from typing import Any

from pydantic import BaseModel


class Criterion(BaseModel):
    criterion_id: int
    name: str
    runtime_budget_seconds: float | None = None


class CriterionResult(BaseModel):
    criterion_id: int
    name: str

    # Outcome
    passed: bool
    checked_cases: int = 0
    failures: list[str] = []
    details: dict[str, Any] = {}

    # Metadata
    runtime_seconds: float | None
    runtime_budget_seconds: float | None = None
    within_budget: bool | None = None
    error: str | None = None
