"""Bounds tunables, validated at startup."""

from pydantic import BaseModel, Field


class BoundsConfig(BaseModel):
    # binomial reciprocals with top argument up to this value are exact rationals
    exact_argument_limit: int = Field(default=60, ge=2)
