"""Experiment row schemas. Field order is the CSV column order."""

from typing import Literal

from pydantic import BaseModel


class ExperimentRow(BaseModel):
    """scc of K_t(d) against its bounds; weights are None when not computed."""

    t: int
    d: int
    n_vertices: int
    exact_scc: int | None = None
    greedy_weight: int | None = None
    construction_kind: Literal["random", "mols"] | None = None
    construction_n: int | None = None
    construction_weight: int | None = None
    cover_valid: bool | None = None
    lower_bound_log2: float
    lower_bound_ln: float
    djo_upper: float
    conjectured_scale: float
    ratio: float | None = None
    sandwich_ok: bool
    status: str = "ok"


class RateRow(BaseModel):
    n: int
    d: int
    exact_n: int | None = None
    rate_log2: float | None = None
    rate_ln: float | None = None
    target_rate_log2: float
    status: str = "ok"
