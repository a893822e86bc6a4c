"""Finite graph generators and their JSON interchange format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices 0..m-1 with normalized edges (i < j)."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    kind: str = "explicit"

    def __post_init__(self) -> None:
        for (a, b) in self.edges:
            if not (0 <= a < b < self.vertex_count):
                raise ValueError(f"edge {(a, b)} is not normalized or out of range")

    @staticmethod
    def explicit(m: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = frozenset((min(a, b), max(a, b)) for a, b in edges if a != b)
        return Graph(m, norm, "explicit")

    @staticmethod
    def interval(m: int, width: int) -> "Graph":
        """Vertices adjacent when their distance is positive but below width."""
        if width < 1:
            raise ValueError("width must be positive")
        edges = frozenset((i, l) for i in range(m) for l in range(i + 1, m)
                          if l - i < width)
        return Graph(m, edges, "interval")

    @staticmethod
    def clique_union(clique_size: int, blocks: int) -> "Graph":
        """Disjoint union of ``blocks`` cliques of ``clique_size`` vertices."""
        if clique_size < 1 or blocks < 1:
            raise ValueError("clique size and block count must be positive")
        edges = set()
        for b in range(blocks):
            lo = b * clique_size
            for i in range(lo, lo + clique_size):
                for j in range(i + 1, lo + clique_size):
                    edges.add((i, j))
        return Graph(clique_size * blocks, frozenset(edges), "clique_union")

    @staticmethod
    def complete(m: int) -> "Graph":
        return Graph.explicit(m, [(i, j) for i in range(m) for j in range(i + 1, m)])

    @staticmethod
    def edgeless(m: int) -> "Graph":
        return Graph(m, frozenset(), "explicit")

    def adjacent(self, a: int, b: int) -> bool:
        if a == b:
            return False
        return (min(a, b), max(a, b)) in self.edges

    def to_json(self) -> dict:
        return {"kind": "explicit", "m": self.vertex_count,
                "edges": sorted(list(e) for e in self.edges)}

    @staticmethod
    def from_json(obj: dict) -> "Graph":
        if "kind" not in obj:
            raise ValueError('graph object is missing the "kind" field')
        kind = obj["kind"]
        if kind == "explicit":
            return Graph.explicit(obj["m"], [tuple(e) for e in obj["edges"]])
        if kind == "interval":
            return Graph.interval(obj["m"], obj["N"])
        if kind == "clique_union":
            return Graph.clique_union(obj["N"], obj["blocks"])
        raise ValueError(f"unknown graph kind {kind!r}")

    @staticmethod
    def load(path: str) -> "Graph":
        with open(path, "r", encoding="utf-8") as fh:
            return Graph.from_json(json.load(fh))
