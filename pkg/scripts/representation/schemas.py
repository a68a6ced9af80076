"""Set intersection representations: one finite label set per vertex."""

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Representation(BaseModel):
    """R(v) for v = 0..n-1; labels are relabelled densely to 0..|L|-1 on construction."""

    model_config = ConfigDict(frozen=True)

    labels: tuple[frozenset[int], ...] = Field(min_length=1)

    @field_validator("labels")
    @classmethod
    def labels_must_be_dense(cls, v: tuple[frozenset[int], ...]) -> tuple[frozenset[int], ...]:
        universe = sorted(set().union(*v))
        rank = {label: i for i, label in enumerate(universe)}
        return tuple(frozenset(rank[label] for label in row) for row in v)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def universe_size(self) -> int:
        return len(set().union(*self.labels))

    @property
    def weight(self) -> int:
        return sum(len(row) for row in self.labels)

    def to_payload(self) -> "RepresentationPayload":
        return RepresentationPayload(labels=[sorted(row) for row in self.labels])


class RepresentationPayload(BaseModel):
    """Representation JSON file: {"labels": [[label ids of vertex 0], ...]}."""

    labels: list[list[int]] = Field(min_length=1)

    def to_representation(self) -> Representation:
        return Representation(labels=tuple(frozenset(row) for row in self.labels))


class RepresentationReport(BaseModel):
    valid: bool
    wrong_pairs: list[tuple[int, int]] = Field(default_factory=list)
