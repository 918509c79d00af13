"""
JSON instance documents:

    {"graph": {"n": 3, "edges": [[0, 1], [1, 2]]},
     "lists": [[0, 1], [1, 2], [0, 2]],          optional, defaults to full lists
     "target": {"k": 3}}                          or {"n": ..., "edges": [...]}

Indices are 0-based and a loop is written [u, u]. {"k": k} is the loopless
complete graph K_k.
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from listhom.errors import InvalidInput
from listhom.graph_core import Graph, build_graph, complete_graph, full_lists, normalize_lists
from listhom.instance_gen import Instance


class GraphModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=0, description="Vertex count; vertices are 0..n-1")
    edges: List[Tuple[int, int]] = Field(default_factory=list, description="Edges [u, v]; [u, u] is a loop")

    def to_graph(self) -> Graph:
        return build_graph(self.n, self.edges)

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphModel":
        return cls(n=g.n, edges=[list(edge) for edge in g.sorted_edges()])


class CompleteTargetModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    k: int = Field(..., ge=0, description="Loopless complete graph K_k")

    def to_graph(self) -> Graph:
        return complete_graph(self.k)


class InstanceDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphModel
    lists: Optional[List[List[int]]] = Field(default=None, description="One colour list per vertex")
    target: Union[GraphModel, CompleteTargetModel]

    def to_instance(self) -> Instance:
        g = self.graph.to_graph()
        h = self.target.to_graph()
        if self.lists is None:
            lists = full_lists(g.n, h.n)
        else:
            lists = normalize_lists(self.lists, g.n, h.n)
        return Instance(g, lists, h)

    @classmethod
    def from_instance(cls, instance: Instance) -> "InstanceDocument":
        h = instance.target
        if h == complete_graph(h.n):
            target = CompleteTargetModel(k=h.n)
        else:
            target = GraphModel.from_graph(h)
        return cls(
            graph=GraphModel.from_graph(instance.graph),
            lists=[sorted(allowed) for allowed in instance.lists],
            target=target,
        )


class SolveReport(BaseModel):
    """Output of `solve --json` and `oracle --json`."""

    result: bool
    witness: Optional[List[int]] = None
    count: Optional[int] = None
    stats: Optional[dict] = None


def parse_instance(text: str) -> Instance:
    """
    Raises:
        InvalidInput: the text is not a schema-valid instance document
    """
    try:
        document = InstanceDocument.model_validate_json(text)
    except ValidationError as exc:
        raise InvalidInput(f"Instance document is not valid: {exc}") from exc
    return document.to_instance()


def load_instance(path: Union[str, Path]) -> Instance:
    """
    Read and validate an instance document.

    Raises:
        InvalidInput: unreadable file or schema error
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"Cannot read instance file {path}: {exc}") from exc
    return parse_instance(text)


def dump_instance(instance: Instance) -> str:
    """Canonical JSON text for an instance (sorted edges and lists)."""
    return InstanceDocument.from_instance(instance).model_dump_json(exclude_none=True)
