"""Solver tunables, validated at startup."""

from pydantic import BaseModel, Field


class SolverConfig(BaseModel):
    # exact search is exponential in n; the limit is soft and can be raised per call
    limit_n: int = Field(default=20, ge=1)
