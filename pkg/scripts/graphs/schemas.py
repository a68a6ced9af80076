"""Pydantic models for graphs, part specifications and cliques.

Adjacency is stored as one Python int bitset per vertex, so intersections of
neighbourhoods are single `&` operations regardless of n.
"""

from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from common.errors import InvalidArgumentError


class Graph(BaseModel):
    """Simple undirected graph on vertices 0..n-1."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    adjacency: tuple[int, ...]

    @model_validator(mode="after")
    def adjacency_must_be_simple(self) -> "Graph":
        if len(self.adjacency) != self.n:
            raise ValueError(
                f"adjacency has {len(self.adjacency)} rows, expected {self.n}"
            )
        limit = 1 << self.n
        for v, mask in enumerate(self.adjacency):
            if mask < 0 or mask >= limit:
                raise ValueError(f"adjacency row {v} references vertices outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(mask):
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric for pair ({v}, {u})")
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise InvalidArgumentError(f"graph needs at least one vertex, got n={n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n=n, adjacency=tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def is_isolated(self, v: int) -> bool:
        return self.adjacency[v] == 0

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adjacency[u] >> (u + 1) << (u + 1))]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        members = list(vertices)
        mask = 0
        for v in members:
            mask |= 1 << v
        return all((self.adjacency[v] | 1 << v) & mask == mask for v in members)


class PartSpec(BaseModel):
    """Part sizes of a complete multipartite graph."""

    model_config = ConfigDict(frozen=True)

    sizes: tuple[int, ...] = Field(min_length=1)

    @field_validator("sizes")
    @classmethod
    def sizes_must_be_positive(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(s < 1 for s in v):
            raise ValueError(f"part sizes must be >= 1, got {list(v)}")
        return v

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> "PartSpec":
        """Canonical form: sizes sorted nonincreasing."""
        return cls(sizes=tuple(sorted(sizes, reverse=True)))

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def d(self) -> int:
        return max(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def part_of(self, vertex: int) -> int:
        start = 0
        for index, size in enumerate(self.sizes):
            if vertex < start + size:
                return index
            start += size
        raise InvalidArgumentError(f"vertex {vertex} outside 0..{self.n - 1}")


class Clique(BaseModel):
    """Sorted vertex set; completeness is checked against a host graph elsewhere."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...] = Field(min_length=1)

    @field_validator("vertices")
    @classmethod
    def vertices_must_be_sorted(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if v[0] < 0:
            raise ValueError(f"negative vertex in clique {list(v)}")
        if any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError(f"clique vertices must be strictly increasing, got {list(v)}")
        return v

    @classmethod
    def from_mask(cls, mask: int) -> "Clique":
        return cls(vertices=tuple(_bits(mask)))

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m


class GraphPayload(BaseModel):
    """Graph JSON file: {"n": int, "edges": [[u, v], ...]}."""

    n: int = Field(ge=1)
    edges: list[tuple[int, int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def edges_must_be_canonical(self) -> "GraphPayload":
        seen: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge [{u}, {v}] must satisfy 0 <= u < v < {self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge [{u}, {v}]")
            seen.add((u, v))
        return self


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

