"""Labeled simple undirected graphs and local complementation.

Vertices carry string labels and a fixed position (0..n-1); every bit and
ket convention downstream keys off the position, with position 0 the most
significant bit.  Adjacency is stored as one bitmask per vertex.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

MAX_VERTICES = 32  # adjacency rows must fit one machine word


@dataclass(frozen=True)
class QubitLabel:
    """A named vertex/qubit with its fixed position in ket order."""

    name: str
    position: int


@dataclass(frozen=True)
class Graph:
    """Immutable labeled simple graph.

    `rows[i]` has bit j set iff vertices i and j share an edge.
    """

    names: tuple[str, ...]
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.names)
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        if len(set(self.names)) != n:
            raise ValueError("vertex labels must be unique")
        if len(self.rows) != n:
            raise ValueError("adjacency rows must match vertex count")
        for i, row in enumerate(self.rows):
            if row >> n:
                raise ValueError(f"adjacency row {i} addresses unknown vertices")
            if row >> i & 1:
                raise ValueError(f"self-loop on {self.names[i]!r}")
            for j in range(n):
                if (row >> j & 1) != (self.rows[j] >> i & 1):
                    raise ValueError("adjacency must be symmetric")

    @classmethod
    def from_edges(cls, names: Iterable[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        names = tuple(names)
        index = {name: i for i, name in enumerate(names)}
        if len(index) != len(names):
            raise ValueError("vertex labels must be unique")
        rows = [0] * len(names)
        seen: set[frozenset[str]] = set()
        for a, b in edges:
            for name in (a, b):
                if name not in index:
                    raise ValueError(f"unknown qubit label {name!r}")
            if a == b:
                raise ValueError(f"self-loop on {a!r}")
            pair = frozenset((a, b))
            if pair in seen:
                raise ValueError(f"duplicate edge {sorted(pair)}")
            seen.add(pair)
            rows[index[a]] |= 1 << index[b]
            rows[index[b]] |= 1 << index[a]
        return cls(names, tuple(rows))

    @classmethod
    def empty(cls, names: Iterable[str]) -> "Graph":
        return cls.from_edges(names, [])

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def qubits(self) -> tuple[QubitLabel, ...]:
        return tuple(QubitLabel(name, i) for i, name in enumerate(self.names))

    def position(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown qubit label {name!r}") from None

    def has_edge(self, a: str, b: str) -> bool:
        return bool(self.rows[self.position(a)] >> self.position(b) & 1)

    def degree(self, a: str) -> int:
        return self.rows[self.position(a)].bit_count()

    def edges(self) -> tuple[tuple[str, str], ...]:
        """Edges as name pairs, ordered by position (i < j, row-major)."""
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.rows[i] >> j & 1:
                    out.append((self.names[i], self.names[j]))
        return tuple(out)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2


def neighbors(g: Graph, a: str) -> frozenset[str]:
    """Vertices adjacent to `a`."""
    row = g.rows[g.position(a)]
    return frozenset(g.names[j] for j in range(g.n) if row >> j & 1)


def local_complement(g: Graph, a: str) -> Graph:
    """Toggle every edge between two neighbors of `a`; everything else unchanged."""
    nb = g.rows[g.position(a)]
    rows = list(g.rows)
    for i in range(g.n):
        if nb >> i & 1:
            rows[i] ^= nb & ~(1 << i)
    return Graph(g.names, tuple(rows))


def canonical_key(g: Graph) -> int:
    """Upper-triangular adjacency bits packed row-major.

    Equal keys <=> equal edge sets, for graphs sharing one vertex label order.
    """
    key = 0
    bit = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.rows[i] >> j & 1:
                key |= 1 << bit
            bit += 1
    return key


# --- JSON / DOT interchange ---

def graph_to_dict(g: Graph) -> dict:
    return {"vertices": list(g.names), "edges": [list(e) for e in g.edges()]}


def graph_from_dict(data: object) -> Graph:
    if not isinstance(data, dict):
        raise ValueError("graph document must be a JSON object")
    try:
        vertices = data["vertices"]
        edges = data["edges"]
    except KeyError as exc:
        raise ValueError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ValueError("field 'vertices' must be a list of strings")
    if not isinstance(edges, list):
        raise ValueError("field 'edges' must be a list of pairs")
    pairs = []
    for k, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e)):
            raise ValueError(f"edges[{k}]: expected a pair of labels")
        pairs.append((e[0], e[1]))
    try:
        return Graph.from_edges(vertices, pairs)
    except ValueError as exc:
        raise ValueError(f"edges/vertices: {exc}") from None


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), indent=2)


def _dot_id(name: str) -> str:
    if name and (name[0].isalpha() or name[0] == "_") and all(c.isalnum() or c == "_" for c in name):
        return name
    return '"' + name.replace('"', '\\"') + '"'


def graph_to_dot(g: Graph, graph_name: str = "") -> str:
    lines = [f"graph {graph_name}{{" if not graph_name else f"graph {graph_name} {{"]
    for name in g.names:
        lines.append(f"  {_dot_id(name)};")
    for a, b in g.edges():
        lines.append(f"  {_dot_id(a)} -- {_dot_id(b)};")
    lines.append("}")
    return "\n".join(lines)
