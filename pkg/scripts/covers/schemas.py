"""Pydantic schemas for clique covers and solver results."""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, field_validator

from graphs.schemas import Clique


class CoverMode(StrEnum):
    COVER = "cover"
    PARTITION = "partition"


class Objective(StrEnum):
    """count minimizes the number of cliques, weight the sum of their sizes."""

    COUNT = "count"
    WEIGHT = "weight"


class CliqueCover(BaseModel):
    model_config = ConfigDict(frozen=True)

    cliques: tuple[Clique, ...] = ()
    mode: CoverMode = CoverMode.COVER

    @field_validator("cliques")
    @classmethod
    def cliques_must_cover_edges(cls, v: tuple[Clique, ...]) -> tuple[Clique, ...]:
        for clique in v:
            if clique.size < 2:
                raise ValueError(
                    f"clique {list(clique.vertices)} has size 1 and covers no edge"
                )
        return v

    @classmethod
    def from_vertex_lists(
        cls, cliques: list[list[int]], mode: CoverMode = CoverMode.COVER
    ) -> "CliqueCover":
        return cls(
            cliques=tuple(Clique(vertices=tuple(sorted(c))) for c in cliques),
            mode=mode,
        )

    def vertex_lists(self) -> list[list[int]]:
        return [list(c.vertices) for c in self.cliques]


class CoverReport(BaseModel):
    valid: bool
    uncovered: list[tuple[int, int]] = Field(default_factory=list)
    multiply_covered: list[tuple[int, int]] = Field(default_factory=list)
    non_edges: list[tuple[int, int]] = Field(
        default_factory=list,
        description="Vertex pairs inside a listed clique that are not edges of the graph",
    )


class SolveResult(BaseModel):
    optimum: int = Field(ge=0)
    witness: CliqueCover
    nodes_explored: int = Field(ge=0)
    objective: Objective
    mode: CoverMode


class GraphParameters(BaseModel):
    """cc, cp, scc and scp of one graph."""

    cc: int
    cp: int
    scc: int
    scp: int


class CoverPayload(BaseModel):
    """Cover JSON file: {"mode": "cover"|"partition", "cliques": [[...], ...]}."""

    mode: CoverMode = CoverMode.COVER
    cliques: list[list[int]] = Field(default_factory=list)

    def to_cover(self) -> CliqueCover:
        return CliqueCover.from_vertex_lists(self.cliques, self.mode)

    @classmethod
    def from_cover(cls, cover: CliqueCover) -> "CoverPayload":
        return cls(mode=cover.mode, cliques=cover.vertex_lists())
