from partitions.config import PartitionsConfig
from partitions.constructions import mols_family, random_qi_family
from partitions.conversion import cover_to_family, family_to_cover
from partitions.enumeration import clique_size_bound, exact_N, family_weight_bound, maximum_qi_family
from partitions.qi import (
    complete_family,
    family_weight,
    is_qualitatively_independent,
    verify_family_property,
)
from partitions.schemas import DPartition, FamilyReport, PartitionFamily

__all__ = [
    "DPartition",
    "FamilyReport",
    "PartitionFamily",
    "PartitionsConfig",
    "clique_size_bound",
    "complete_family",
    "cover_to_family",
    "exact_N",
    "family_to_cover",
    "family_weight_bound",
    "family_weight",
    "is_qualitatively_independent",
    "maximum_qi_family",
    "mols_family",
    "random_qi_family",
    "verify_family_property",
]
