"""Pydantic schemas for weight matrices and bound reports."""

from enum import StrEnum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from partitions.schemas import PartitionFamily


class LogBase(StrEnum):
    TWO = "2"
    E = "e"


class WeightMatrix(BaseModel):
    """k[i][j] = |A_i^j|; column d wraps to column 0."""

    model_config = ConfigDict(frozen=True)

    k: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def shape_must_be_valid(self) -> "WeightMatrix":
        if len(self.k) < 2:
            raise ValueError(f"need t >= 2 rows, got {len(self.k)}")
        widths = {len(row) for row in self.k}
        if len(widths) != 1:
            raise ValueError(f"rows have different lengths: {sorted(widths)}")
        if widths.pop() < 2:
            raise ValueError("need d >= 2 columns")
        if any(x < 0 for row in self.k for x in row):
            raise ValueError("entries must be nonnegative")
        return self

    @classmethod
    def from_family(cls, f: PartitionFamily) -> "WeightMatrix":
        return cls(k=tuple(tuple(len(block) for block in row.classes) for row in f.rows))

    @property
    def t(self) -> int:
        return len(self.k)

    @property
    def d(self) -> int:
        return len(self.k[0])

    def to_array(self) -> np.ndarray:
        return np.asarray(self.k, dtype=np.int64)

    @property
    def total(self) -> int:
        return int(self.to_array().sum())


class BollobasSum(BaseModel):
    columns: tuple[int, int]
    value: float
    exact: str | None = Field(default=None, description="Exact rational value when computed exactly")
    ok: bool


class ChainReport(BaseModel):
    """Every inequality of the lower-bound argument, evaluated literally.

    Verdicts that rely on the family hypothesis are None for raw matrices.
    The relaxation through f (termwise, relaxed total, mean bound) is reported
    but not part of all_ok: for odd m >= 5 the linear extension exceeds
    C(m, m // 2)^-1. The 2^-m relaxation carries the final bound instead.
    """

    t: int
    d: int
    family_hypothesis: bool
    pair_sums: list[BollobasSum]
    bollobas_total: float
    bollobas_total_ok: bool | None
    binary_total: float
    binary_total_ok: bool | None
    termwise_relaxation_ok: bool
    relaxed_total: float
    relaxed_total_ok: bool | None
    total_weight: int
    jensen_lhs: float
    jensen_rhs: float
    jensen_ok: bool
    mean_bound_ok: bool | None
    final_bound: float
    final_ok: bool

    @computed_field
    @property
    def all_ok(self) -> bool:
        verdicts = [self.bollobas_total_ok, self.binary_total_ok, self.jensen_ok, self.final_ok]
        return all(v for v in verdicts if v is not None)


class BoundReport(BaseModel):
    """Closed-form values for K_t(d), n = t*d vertices."""

    t: int
    d: int
    n: int
    lower_bound_log2: float
    lower_bound_ln: float
    djo_upper: float
    katona_tarjan: int
    egp: int
    multipartite_lower: int
    multipartite_exact: int | None
    conjectured_scale: float
