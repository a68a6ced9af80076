"""Qualitative independence, the family property and partial-family completion."""

from common.errors import InvalidArgumentError
from partitions.schemas import (
    DPartition,
    FamilyReport,
    FamilyViolation,
    PartitionFamily,
)


def masks_independent(p: tuple[int, ...], q: tuple[int, ...]) -> bool:
    return all(a & b for a in p for b in q)


def is_qualitatively_independent(p: DPartition, q: DPartition) -> bool:
    """Every class of p meets every class of q."""
    if p.partial or q.partial:
        raise InvalidArgumentError("qualitative independence is defined for full partitions only")
    if p.ground_n != q.ground_n:
        raise InvalidArgumentError(
            f"partitions over different ground sets: {p.ground_n} vs {q.ground_n} elements"
        )
    return masks_independent(p.masks, q.masks)


def verify_family_property(f: PartitionFamily) -> FamilyReport:
    """A_i^j and A_i'^j' are disjoint exactly when i = i' and j != j'.

    The pair of a cell with itself is included, so an empty cell is reported
    as should-intersect.
    """
    masks = [row.masks for row in f.rows]
    violations: list[FamilyViolation] = []
    cells = [(i, j) for i in range(f.t) for j in range(f.d)]

    for a, (i, j) in enumerate(cells):
        for i2, j2 in cells[a:]:
            disjoint = not masks[i][j] & masks[i2][j2]
            should_be_disjoint = i == i2 and j != j2
            if disjoint and not should_be_disjoint:
                violations.append(FamilyViolation(i=i, j=j, i2=i2, j2=j2, kind="should-intersect"))
            elif should_be_disjoint and not disjoint:
                violations.append(FamilyViolation(i=i, j=j, i2=i2, j2=j2, kind="should-be-disjoint"))

    return FamilyReport(valid=not violations, violations=violations)


def family_weight(f: PartitionFamily) -> int:
    return sum(len(block) for row in f.rows for block in row.classes)


def complete_family(f: PartitionFamily) -> PartitionFamily:
    """Extend each row to a full partition of X, the union of all cells, via its last class.

    When X is not {0..n-1} its elements are relabelled to 0..|X|-1 in
    increasing order, so cells come back under new names: with X = {1, 2, 3}
    the row ({1}, {2, 3}) is returned as ({0}, {1, 2}). The relabelling is
    the rank of each element in sorted(X).
    """
    report = verify_family_property(f)
    if not report.valid:
        raise InvalidArgumentError(
            f"family property fails ({len(report.violations)} violations, "
            f"first {report.violations[0].model_dump()})"
        )

    ground = sorted(set().union(*(block for row in f.rows for block in row.classes)))
    relabel = {x: k for k, x in enumerate(ground)}
    everything = frozenset(range(len(ground)))

    rows: list[DPartition] = []
    for row in f.rows:
        head = [frozenset(relabel[x] for x in block) for block in row.classes[:-1]]
        tail = everything.difference(*head)
        rows.append(DPartition(ground_n=len(ground), classes=(*head, tail), partial=False))

    return PartitionFamily(ground_n=len(ground), d=f.d, rows=tuple(rows))
