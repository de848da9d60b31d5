"""Output container shared by the instance generators."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import Graph


@dataclass(frozen=True)
class ReductionOutput:
    """A generated instance ``(graph, k, c)`` with one role label per vertex."""

    graph: Graph
    k: int
    c: int
    vertex_names: tuple[str, ...]
    extra: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(self.vertex_names) != self.graph.n:
            raise ValueError("name map must cover every vertex")

    def index(self, name: str) -> int:
        lookup = self.extra.get("_index")
        if lookup is None:
            lookup = {nm: i for i, nm in enumerate(self.vertex_names)}
            self.extra["_index"] = lookup
        return lookup[name]
