"""Construction and enumeration tunables."""

from pydantic import BaseModel, Field


class PartitionsConfig(BaseModel):
    # number of full d-partitions exact_N may enumerate
    enumeration_budget: int = Field(default=1_000_000, ge=1)
    # random_qi_family stops after rejection_factor * target_t consecutive rejections
    rejection_factor: int = Field(default=200, ge=1)
