from graphs.cliques import enumerate_cliques, iter_clique_masks
from graphs.generators import balanced_multipartite, complete_multipartite
from graphs.operations import complement, max_degree
from graphs.schemas import Clique, Graph, PartSpec

__all__ = [
    "Clique",
    "Graph",
    "PartSpec",
    "balanced_multipartite",
    "complement",
    "complete_multipartite",
    "enumerate_cliques",
    "iter_clique_masks",
    "max_degree",
]
