"""Families of pairwise qualitatively independent d-partitions.

random_qi_family realizes the probabilistic existence argument greedily: draw
uniformly random d-partitions and keep each one that is independent of every
partition kept so far. mols_family is the affine-plane construction over Z_d
for prime d: the d + 1 parallel classes of lines on the d x d grid.
"""

import logging

import numpy as np

from common.errors import InvalidArgumentError, UnsupportedError
from partitions.config import PartitionsConfig
from partitions.qi import masks_independent
from partitions.schemas import DPartition, PartitionFamily

logger = logging.getLogger(__name__)


def is_prime(d: int) -> bool:
    if d < 2:
        return False
    return all(d % p for p in range(2, int(d**0.5) + 1))


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(p for p in range(2, q + 1) if q % p == 0)
    while q % p == 0:
        q //= p
    return q == 1


def _sample_partition(rng: np.random.Generator, n: int, d: int) -> tuple[int, ...]:
    """Uniform class per element, redrawn until no class is empty."""
    while True:
        assignment = rng.integers(0, d, size=n)
        if np.bincount(assignment, minlength=d).min() > 0:
            break
    masks = [0] * d
    for element, j in enumerate(assignment.tolist()):
        masks[j] |= 1 << element
    return tuple(masks)


def family_from_masks(n: int, d: int, rows: list[tuple[int, ...]]) -> PartitionFamily:
    partitions = tuple(
        DPartition(
            ground_n=n,
            classes=tuple(frozenset(x for x in range(n) if mask >> x & 1) for mask in row),
        )
        for row in rows
    )
    return PartitionFamily(ground_n=n, d=d, rows=partitions)


def random_qi_family(
    n: int,
    d: int,
    target_t: int,
    seed: int,
    max_rejections: int | None = None,
    config: PartitionsConfig | None = None,
) -> PartitionFamily:
    if d < 2:
        raise InvalidArgumentError(f"d must be >= 2, got d={d}")
    if n < d:
        raise InvalidArgumentError(f"a {d}-partition needs n >= d, got n={n}")
    if target_t < 0:
        raise InvalidArgumentError(f"target_t must be >= 0, got {target_t}")

    config = config or PartitionsConfig()
    cutoff = max_rejections if max_rejections is not None else config.rejection_factor * target_t
    rng = np.random.default_rng(seed)

    kept: list[tuple[int, ...]] = []
    rejections = 0
    draws = 0
    while len(kept) < target_t and (rejections < cutoff or not kept):
        candidate = _sample_partition(rng, n, d)
        draws += 1
        if all(masks_independent(candidate, row) for row in kept):
            kept.append(candidate)
            rejections = 0
        else:
            rejections += 1

    logger.debug(
        "[CONSTRUCT] random n=%d d=%d: kept %d/%d after %d draws", n, d, len(kept), target_t, draws
    )
    return family_from_masks(n, d, kept)


def mols_family(d: int) -> PartitionFamily:
    """d + 1 partitions of the grid Z_d x Z_d, point (x, y) encoded as x*d + y.

    Rows: lines x = c, lines y = c, and for each slope k in 1..d-1 the lines
    y = kx + c. Any two classes from different partitions meet in exactly one point.
    """
    if d < 2:
        raise InvalidArgumentError(f"d must be >= 2, got d={d}")
    if not is_prime(d):
        raise UnsupportedError(f"Latin-square construction implemented for prime d only, got d={d}")

    points = [(x, y) for x in range(d) for y in range(d)]
    pencils = [lambda x, y: x, lambda x, y: y]
    pencils += [lambda x, y, k=k: (y - k * x) % d for k in range(1, d)]

    rows = []
    for line_of in pencils:
        classes = [set() for _ in range(d)]
        for x, y in points:
            classes[line_of(x, y)].add(x * d + y)
        rows.append(DPartition(ground_n=d * d, classes=tuple(frozenset(c) for c in classes)))
    return PartitionFamily(ground_n=d * d, d=d, rows=tuple(rows))
