"""Step-by-step evaluation of the lower-bound argument for scc(K_t(d)).

For a family with the disjointness property every pair of columns j, j' gives
set pairs (A_i^j, A_i^j') meeting the two-families hypothesis, so
sum_i C(k_ij + k_ij', k_ij)^-1 <= 1. Summing over the d cyclic column pairs,
relaxing each term to 2^-(k_ij + k_i,j+1) (or to f of the same argument),
applying Jensen to the convex relaxation and taking logarithms gives
S >= (td/2) log2 t.
"""

import logging
import math
from fractions import Fraction

from bounds.binomials import (
    EXACT_ARGUMENT_LIMIT,
    Real,
    at_most,
    f_value,
    inverse_binomial,
    render_exact,
)
from bounds.schemas import BollobasSum, ChainReport, WeightMatrix
from common.errors import InvalidArgumentError
from partitions.qi import verify_family_property
from partitions.schemas import PartitionFamily

logger = logging.getLogger(__name__)


def _check_columns(k: WeightMatrix, j: int, j2: int) -> None:
    if j == j2:
        raise InvalidArgumentError(f"columns must differ, got j={j} twice")
    if not (0 <= j < k.d and 0 <= j2 < k.d):
        raise InvalidArgumentError(f"columns must lie in 0..{k.d - 1}, got {j}, {j2}")


def _pair_total(k: WeightMatrix, j: int, j2: int, exact_limit: int) -> Real:
    return sum(
        (inverse_binomial(row[j] + row[j2], row[j], exact_limit) for row in k.k),
        start=Fraction(0),
    )


def bollobas_sum(
    k: WeightMatrix, j: int, j2: int, exact_limit: int = EXACT_ARGUMENT_LIMIT
) -> BollobasSum:
    _check_columns(k, j, j2)
    total = _pair_total(k, j, j2, exact_limit)
    return BollobasSum(
        columns=(j, j2),
        value=float(total),
        exact=render_exact(total),
        ok=at_most(total, Fraction(1)),
    )


def _require_family(f: PartitionFamily) -> WeightMatrix:
    report = verify_family_property(f)
    if not report.valid:
        raise InvalidArgumentError(
            f"family property fails ({len(report.violations)} violations), "
            "the two-families hypothesis does not hold"
        )
    if f.t < 2 or f.d < 2:
        raise InvalidArgumentError(f"need t >= 2 and d >= 2, got t={f.t}, d={f.d}")
    return WeightMatrix.from_family(f)


def bollobas_check(
    f: PartitionFamily, j: int, j2: int, exact_limit: int = EXACT_ARGUMENT_LIMIT
) -> BollobasSum:
    return bollobas_sum(_require_family(f), j, j2, exact_limit)


def jensen_chain_check(
    k: WeightMatrix, family_hypothesis: bool = False, exact_limit: int = EXACT_ARGUMENT_LIMIT
) -> ChainReport:
    t, d = k.t, k.d
    cyclic = [(j, (j + 1) % d) for j in range(d)]
    # d = 2 visits the single column pair twice, once per direction
    pair_sums = [bollobas_sum(k, j, j2, exact_limit) for j, j2 in cyclic]
    bollobas_total = sum(
        (_pair_total(k, j, j2, exact_limit) for j, j2 in cyclic), start=Fraction(0)
    )

    pairs = [(row[j], row[j2]) for row in k.k for j, j2 in cyclic]
    arguments = [a + b for a, b in pairs]
    termwise_ok = all(
        at_most(f_value(a + b, exact_limit), inverse_binomial(a + b, a, exact_limit))
        for a, b in pairs
    )
    relaxed_total = sum((f_value(m, exact_limit) for m in arguments), start=Fraction(0))
    binary_total = sum((Fraction(1, 2**m) for m in arguments), start=Fraction(0))

    total_weight = k.total
    jensen_lhs = f_value(Fraction(2 * total_weight, t * d), exact_limit)
    jensen_rhs = relaxed_total / (t * d)
    final_bound = t * d / 2 * math.log2(t)

    report = ChainReport(
        t=t,
        d=d,
        family_hypothesis=family_hypothesis,
        pair_sums=pair_sums,
        bollobas_total=float(bollobas_total),
        bollobas_total_ok=at_most(bollobas_total, Fraction(d)) if family_hypothesis else None,
        binary_total=float(binary_total),
        binary_total_ok=binary_total <= d if family_hypothesis else None,
        termwise_relaxation_ok=termwise_ok,
        relaxed_total=float(relaxed_total),
        relaxed_total_ok=at_most(relaxed_total, Fraction(d)) if family_hypothesis else None,
        total_weight=total_weight,
        jensen_lhs=float(jensen_lhs),
        jensen_rhs=float(jensen_rhs),
        jensen_ok=at_most(jensen_lhs, jensen_rhs),
        mean_bound_ok=at_most(jensen_lhs, Fraction(1, t)) if family_hypothesis else None,
        final_bound=final_bound,
        final_ok=total_weight >= final_bound - 1e-9,
    )
    logger.debug(
        "[CHAIN] t=%d d=%d S=%d bound=%.3f all_ok=%s", t, d, total_weight, final_bound, report.all_ok
    )
    return report


def chain_check_family(
    f: PartitionFamily, exact_limit: int = EXACT_ARGUMENT_LIMIT
) -> ChainReport:
    return jensen_chain_check(_require_family(f), family_hypothesis=True, exact_limit=exact_limit)
