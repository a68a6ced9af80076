"""scc(K_t(d)) against its bounds, and the rate of N(n, d).

Each t gets the exact solver when K_t(d) is small enough, a greedy cover when
it is moderately small, and a family construction: the first t rows of the
Latin-square family when requested and available, otherwise random families
on the smallest ground set the n search reaches. Every random draw is seeded
from (seed, n, t), so rows do not depend on evaluation order.
"""

import logging
from collections.abc import Callable

import numpy as np
import pandas as pd
from pydantic import BaseModel

from bounds.classical import (
    conjectured_scale,
    djo_upper_bound,
    lower_bound_scc_multipartite,
    qi_rate,
    qi_target_rate,
)
from bounds.schemas import LogBase
from common.errors import InvalidArgumentError, ResourceLimitError
from covers.greedy import greedy_cover
from covers.solver import solve_cover
from covers.verification import cover_weight, verify_cover
from experiment.config import LabConfig
from experiment.schemas import ExperimentRow, RateRow
from graphs.generators import balanced_multipartite
from partitions.constructions import is_prime, mols_family, random_qi_family
from partitions.conversion import family_to_cover
from partitions.enumeration import exact_N
from partitions.schemas import PartitionFamily

logger = logging.getLogger(__name__)


def derived_seed(seed: int, n: int, t: int) -> int:
    return int(np.random.SeedSequence([seed, n, t]).generate_state(1)[0])


def search_smallest_n(
    reaches: Callable[[int], PartitionFamily | None], start: int, max_n: int
) -> tuple[int, PartitionFamily] | None:
    """Doubling from start, then bisection between the last miss and the first hit."""
    miss, n = start - 1, start
    while True:
        found = reaches(n)
        if found is not None:
            break
        if n >= max_n:
            return None
        miss, n = n, min(2 * n, max_n)

    best = (n, found)
    low, high = miss, n
    while high - low > 1:
        mid = (low + high) // 2
        family = reaches(mid)
        if family is not None:
            high, best = mid, (mid, family)
        else:
            low = mid
    return best


def _construct(t: int, d: int, seed: int, config: LabConfig) -> tuple[str, PartitionFamily] | None:
    if config.experiment.use_mols and is_prime(d) and t <= d + 1:
        full = mols_family(d)
        return "mols", full.model_copy(update={"rows": full.rows[:t]})

    def reaches(n: int) -> PartitionFamily | None:
        family = random_qi_family(n, d, t, derived_seed(seed, n, t), config=config.partitions)
        return family if family.t == t else None

    found = search_smallest_n(reaches, start=d, max_n=config.experiment.max_ground_n)
    if found is None:
        return None
    return "random", found[1]


def experiment_row(t: int, d: int, seed: int, config: LabConfig) -> ExperimentRow:
    n_vertices = t * d
    lower = lower_bound_scc_multipartite(t, d)
    upper = djo_upper_bound(n_vertices, d)
    row = ExperimentRow(
        t=t,
        d=d,
        n_vertices=n_vertices,
        lower_bound_log2=lower,
        lower_bound_ln=lower_bound_scc_multipartite(t, d, LogBase.E),
        djo_upper=upper,
        conjectured_scale=conjectured_scale(t, d),
        sandwich_ok=True,
    )
    problems: list[str] = []
    g = balanced_multipartite(t, d)

    if n_vertices <= config.experiment.exact_limit_n:
        try:
            row.exact_scc = solve_cover(g, config=config.solver).optimum
        except ResourceLimitError as e:
            problems.append(f"exact: {e}")
    if n_vertices <= config.experiment.greedy_limit_n:
        row.greedy_weight = cover_weight(greedy_cover(g))

    constructed = _construct(t, d, seed, config)
    if constructed is None:
        problems.append(f"construction: no family of {t} rows for n <= {config.experiment.max_ground_n}")
    else:
        kind, family = constructed
        _, cover = family_to_cover(family)
        row.construction_kind = kind
        row.construction_n = family.ground_n
        row.construction_weight = cover_weight(cover)
        row.cover_valid = verify_cover(g, cover).valid
        row.ratio = row.construction_weight / lower

    weights = [w for w in (row.exact_scc, row.construction_weight) if w is not None]
    row.sandwich_ok = all(lower <= w <= upper for w in weights)
    if row.exact_scc is not None and row.greedy_weight is not None:
        row.sandwich_ok = row.sandwich_ok and row.exact_scc <= row.greedy_weight
    if problems:
        row.status = "; ".join(problems)

    logger.info(
        "[EXPERIMENT] t=%d d=%d exact=%s greedy=%s construction=%s (n=%s) lower=%.2f",
        t, d, row.exact_scc, row.greedy_weight, row.construction_weight, row.construction_n, lower,
    )
    return row


def run_experiment(
    d: int, t_values: list[int], seed: int, config: LabConfig | None = None
) -> list[ExperimentRow]:
    if d < 2:
        raise InvalidArgumentError(f"d must be >= 2, got {d}")
    if not t_values:
        raise InvalidArgumentError("t_values must not be empty")
    if any(t < 2 for t in t_values):
        raise InvalidArgumentError(f"every t must be >= 2, got {t_values}")

    config = config or LabConfig()
    return [experiment_row(t, d, seed, config) for t in t_values]


def run_rate_table(d: int, n_values: list[int], config: LabConfig | None = None) -> list[RateRow]:
    if d < 2:
        raise InvalidArgumentError(f"d must be >= 2, got {d}")
    if any(n < d for n in n_values):
        raise InvalidArgumentError(f"every n must be >= d={d}, got {n_values}")

    config = config or LabConfig()
    target = qi_target_rate(d)
    rows = []
    for n in n_values:
        try:
            size = exact_N(n, d, config.partitions)
        except ResourceLimitError as e:
            rows.append(RateRow(n=n, d=d, target_rate_log2=target, status=f"budget: {e}"))
            continue
        rows.append(
            RateRow(
                n=n,
                d=d,
                exact_n=size,
                rate_log2=qi_rate(n, size),
                rate_ln=qi_rate(n, size, LogBase.E),
                target_rate_log2=target,
            )
        )
    return rows


def rows_to_frame(rows: list[BaseModel], model: type[BaseModel] = ExperimentRow) -> pd.DataFrame:
    columns = list(model.model_fields)
    return pd.DataFrame([row.model_dump() for row in rows], columns=columns)
