"""Closed-form bounds on covers of complete multipartite graphs."""

import math

from bounds.schemas import BoundReport, LogBase
from common.errors import InvalidArgumentError
from graphs.schemas import PartSpec
from partitions.constructions import is_prime_power


def log_in(x: float, base: LogBase = LogBase.TWO) -> float:
    return math.log2(x) if base is LogBase.TWO else math.log(x)


def _require_t_d(t: int, d: int) -> None:
    if t < 2 or d < 2:
        raise InvalidArgumentError(f"need t >= 2 and d >= 2, got t={t}, d={d}")


def egp_bound(n: int) -> int:
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    return n * n // 4


def katona_tarjan_bound(n: int) -> int:
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    return n * n // 2


def djo_upper_bound(n: int, d: int) -> float:
    """(e^2 + 1) n d ceil(ln((n - 1)/(d - 1))) for graphs of max degree n - d."""
    if d < 2 or n <= d:
        raise InvalidArgumentError(f"need n > d >= 2, got n={n}, d={d}")
    return (math.e**2 + 1) * n * d * math.ceil(math.log((n - 1) / (d - 1)))


def lower_bound_scc_multipartite(t: int, d: int, base: LogBase = LogBase.TWO) -> float:
    _require_t_d(t, d)
    return d / 2 * t * log_in(t, base)


def djo_multipartite_lower_bound(sizes: list[int] | tuple[int, ...]) -> int:
    """scc >= n*d when n >= 2d and at least two parts have the maximum size d."""
    spec = PartSpec.from_sizes(sizes)
    d = spec.d
    if spec.n < 2 * d or spec.sizes.count(d) < 2:
        raise InvalidArgumentError(
            f"sizes {list(spec.sizes)} need n >= 2d and two parts of size d={d}"
        )
    return spec.n * d


def djo_multipartite_exact(sizes: list[int] | tuple[int, ...]) -> int | None:
    spec = PartSpec.from_sizes(sizes)
    lower = djo_multipartite_lower_bound(spec.sizes)
    if is_prime_power(spec.d) and spec.n <= spec.d * (spec.d + 1):
        return lower
    return None


def conjectured_scale(t: int, d: int) -> float:
    _require_t_d(t, d)
    return d * d * t * math.log2(t)


def qi_rate(n: int, family_size: int, base: LogBase = LogBase.TWO) -> float:
    """(1/n) log N; tends to 2/d for d-partitions."""
    if n < 1 or family_size < 1:
        raise InvalidArgumentError(f"need n >= 1 and family_size >= 1, got {n}, {family_size}")
    return log_in(family_size, base) / n


def qi_target_rate(d: int, base: LogBase = LogBase.TWO) -> float:
    if d < 2:
        raise InvalidArgumentError(f"d must be >= 2, got {d}")
    return 2 / d if base is LogBase.TWO else 2 / d * math.log(2)


def upper_constant(n: int, d: int, t: int, base: LogBase = LogBase.TWO) -> float:
    """C with t*n = C * d * t * log t."""
    _require_t_d(t, d)
    return n / (d * log_in(t, base))


def bound_report(t: int, d: int) -> BoundReport:
    _require_t_d(t, d)
    n = t * d
    return BoundReport(
        t=t,
        d=d,
        n=n,
        lower_bound_log2=lower_bound_scc_multipartite(t, d),
        lower_bound_ln=lower_bound_scc_multipartite(t, d, LogBase.E),
        djo_upper=djo_upper_bound(n, d),
        katona_tarjan=katona_tarjan_bound(n),
        egp=egp_bound(n),
        multipartite_lower=djo_multipartite_lower_bound([d] * t),
        multipartite_exact=djo_multipartite_exact([d] * t),
        conjectured_scale=conjectured_scale(t, d),
    )
