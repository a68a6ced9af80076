from representation.conversion import (
    cover_to_representation,
    intersection_graph,
    is_partition_representation,
    representation_to_cover,
    representation_weight,
    universe_size,
    verify_representation,
)
from representation.oracle import brute_force_intersection_number
from representation.schemas import Representation, RepresentationReport

__all__ = [
    "Representation",
    "RepresentationReport",
    "brute_force_intersection_number",
    "cover_to_representation",
    "intersection_graph",
    "is_partition_representation",
    "representation_to_cover",
    "representation_weight",
    "universe_size",
    "verify_representation",
]
