"""Graph JSON files and networkx interop."""

import json
from pathlib import Path

import networkx as nx

from common.errors import InvalidArgumentError
from graphs.schemas import Graph, GraphPayload


def graph_from_payload(payload: GraphPayload) -> Graph:
    return Graph.from_edges(payload.n, payload.edges)


def graph_to_payload(g: Graph) -> GraphPayload:
    return GraphPayload(n=g.n, edges=g.edges())


def load_graph(path: Path) -> Graph:
    if not path.exists():
        raise FileNotFoundError(f"Graph file not found: {path}")
    payload = GraphPayload.model_validate(json.loads(path.read_text()))
    return graph_from_payload(payload)


def save_graph(g: Graph, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(graph_to_payload(g).model_dump_json())
    return path


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def from_networkx(G: nx.Graph) -> Graph:
    """Relabels nodes to 0..n-1 in sorted node order."""
    if G.number_of_nodes() == 0:
        raise InvalidArgumentError("networkx graph has no nodes")
    if nx.number_of_selfloops(G):
        raise InvalidArgumentError("networkx graph has self-loops")
    index = {node: i for i, node in enumerate(sorted(G.nodes()))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in G.edges()])
