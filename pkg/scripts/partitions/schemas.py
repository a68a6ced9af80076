"""Pydantic schemas for d-partitions and partition families.

Ground sets are {0, ..., ground_n - 1}. Classes keep their order: cell j of
row i is A_i^j. Qualitative independence treats partitions as unordered.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class DPartition(BaseModel):
    """Ordered classes of a (possibly partial) partition of the ground set."""

    model_config = ConfigDict(frozen=True)

    ground_n: int = Field(ge=0)
    classes: tuple[frozenset[int], ...] = Field(min_length=1)
    partial: bool = False

    @model_validator(mode="after")
    def classes_must_partition(self) -> "DPartition":
        seen: set[int] = set()
        for j, block in enumerate(self.classes):
            outside = [x for x in block if not 0 <= x < self.ground_n]
            if outside:
                raise ValueError(f"class {j} has elements outside 0..{self.ground_n - 1}: {sorted(outside)}")
            if seen & block:
                raise ValueError(f"class {j} overlaps an earlier class on {sorted(seen & block)}")
            seen |= block
        if not self.partial:
            if len(seen) != self.ground_n:
                raise ValueError(
                    f"full partition must cover all {self.ground_n} elements, covers {len(seen)}"
                )
            if any(not block for block in self.classes):
                raise ValueError("full partition has an empty class")
        return self

    @classmethod
    def from_classes(
        cls, ground_n: int, classes: list[list[int]] | tuple[frozenset[int], ...]
    ) -> "DPartition":
        """Infers the partial flag from coverage and emptiness."""
        sets = tuple(frozenset(c) for c in classes)
        covered = sum(len(c) for c in sets)
        partial = covered != ground_n or any(not c for c in sets)
        return cls(ground_n=ground_n, classes=sets, partial=partial)

    @property
    def d(self) -> int:
        return len(self.classes)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << x for x in block) for block in self.classes)

    def canonical_key(self) -> tuple[tuple[int, ...], ...]:
        """Class order forgotten: classes sorted by minimum element."""
        return tuple(sorted(tuple(sorted(c)) for c in self.classes if c))

    def class_lists(self) -> list[list[int]]:
        return [sorted(c) for c in self.classes]


class PartitionFamily(BaseModel):
    """t rows of d cells each over one ground set."""

    model_config = ConfigDict(frozen=True)

    ground_n: int = Field(ge=0)
    d: int = Field(ge=1)
    rows: tuple[DPartition, ...] = ()

    @model_validator(mode="after")
    def rows_must_match(self) -> "PartitionFamily":
        for i, row in enumerate(self.rows):
            if row.d != self.d:
                raise ValueError(f"row {i} has {row.d} cells, family has d={self.d}")
            if row.ground_n != self.ground_n:
                raise ValueError(
                    f"row {i} is over {row.ground_n} elements, family over {self.ground_n}"
                )
        return self

    @computed_field
    @property
    def t(self) -> int:
        return len(self.rows)

    @property
    def is_full(self) -> bool:
        return all(not row.partial for row in self.rows)

    def to_payload(self) -> "FamilyPayload":
        return FamilyPayload(
            n=self.ground_n, t=self.t, d=self.d, rows=[row.class_lists() for row in self.rows]
        )


class FamilyPayload(BaseModel):
    """Family JSON file: {"n": int, "t": int, "d": int, "rows": [[[cell]...d]...t]}."""

    n: int = Field(ge=0)
    t: int = Field(ge=0)
    d: int = Field(ge=1)
    rows: list[list[list[int]]] = Field(default_factory=list)

    @model_validator(mode="after")
    def shape_must_match(self) -> "FamilyPayload":
        if len(self.rows) != self.t:
            raise ValueError(f"t={self.t} but {len(self.rows)} rows given")
        for i, row in enumerate(self.rows):
            if len(row) != self.d:
                raise ValueError(f"row {i} has {len(row)} cells, expected d={self.d}")
        return self

    def to_family(self) -> PartitionFamily:
        return PartitionFamily(
            ground_n=self.n,
            d=self.d,
            rows=tuple(DPartition.from_classes(self.n, row) for row in self.rows),
        )


class FamilyViolation(BaseModel):
    i: int
    j: int
    i2: int
    j2: int
    kind: Literal["should-intersect", "should-be-disjoint"]


class FamilyReport(BaseModel):
    valid: bool
    violations: list[FamilyViolation] = Field(default_factory=list)
