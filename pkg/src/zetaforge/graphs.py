"""Finite partially directed multigraphs and their walk matrices.

A graph mixes undirected edges (loops allowed, multiplicity via repeated
pairs) with directed arrows.  The normalization convention replaces every
arrow self-loop by an undirected loop and every mutually reciprocal arrow
pair by a single edge, so that arrows carry only genuinely one-way
adjacency.  Everything is immutable and hashable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple


class GraphFormatError(ValueError):
    """A graph document is malformed."""


@dataclass(frozen=True)
class MixedGraph:
    node_count: int
    edges: tuple[tuple[int, int], ...] = ()
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.node_count, int) or self.node_count < 1:
            raise GraphFormatError("node_count must be a positive integer")
        canon_edges = []
        for pair in self.edges:
            i, j = pair
            self._check(i), self._check(j)
            canon_edges.append((i, j) if i <= j else (j, i))
        canon_arrows = []
        for pair in self.arrows:
            i, j = pair
            self._check(i), self._check(j)
            canon_arrows.append((i, j))
        object.__setattr__(self, "edges", tuple(sorted(canon_edges)))
        object.__setattr__(self, "arrows", tuple(sorted(canon_arrows)))

    def _check(self, i):
        if not isinstance(i, int) or not 0 <= i < self.node_count:
            raise GraphFormatError(
                f"node index {i!r} outside [0, {self.node_count})")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def is_directed_only(self) -> bool:
        return not self.edges

    @property
    def is_undirected(self) -> bool:
        return not self.arrows

    @classmethod
    def from_dict(cls, doc) -> "MixedGraph":
        if not isinstance(doc, dict):
            raise GraphFormatError("graph document must be an object")
        try:
            nodes = doc["nodes"]
        except KeyError:
            raise GraphFormatError("missing 'nodes' field") from None
        edges = doc.get("edges", [])
        arrows = doc.get("arrows", [])
        for name, pairs in (("edges", edges), ("arrows", arrows)):
            if not isinstance(pairs, list) or any(
                    not isinstance(p, (list, tuple)) or len(p) != 2
                    for p in pairs):
                raise GraphFormatError(f"'{name}' must be a list of [i, j] pairs")
        return cls(nodes, tuple(tuple(p) for p in edges),
                   tuple(tuple(p) for p in arrows))

    def to_dict(self) -> dict:
        return {"nodes": self.node_count,
                "edges": [list(p) for p in self.edges],
                "arrows": [list(p) for p in self.arrows]}


@dataclass(frozen=True)
class MatrixBundle:
    """Walk matrices of a normalized graph.

    adjacency[i][j] counts length-one walks i->j along edges or arrows,
    with diagonal entries twice the loop count; arrows[i][j] counts arrows
    only.  degree_diag[i] is the undirected degree (loops count twice)
    minus one.  exponent is node count minus edge count and equals
    -(sum(degree_diag) - n)/2 identically.
    """

    adjacency: tuple[tuple[int, ...], ...]
    arrows: tuple[tuple[int, ...], ...]
    degree_diag: tuple[int, ...]
    exponent: int


class DegreeProfile(NamedTuple):
    min_degree: int
    max_degree: int
    is_regular: bool


def normalize(g: MixedGraph) -> MixedGraph:
    """Fold arrow self-loops into loops and reciprocal arrow pairs into
    edges, greedily by multiplicity.  Edges are untouched."""
    edges = list(g.edges)
    counts = Counter(g.arrows)
    arrows = []
    for (i, j), c in sorted(counts.items()):
        if i == j:
            edges.extend([(i, i)] * c)
            counts[(i, j)] = 0
        elif i < j:
            back = counts.get((j, i), 0)
            paired = min(c, back)
            edges.extend([(i, j)] * paired)
            counts[(i, j)] = c - paired
            counts[(j, i)] = back - paired
    for (i, j), c in sorted(counts.items()):
        arrows.extend([(i, j)] * c)
    return MixedGraph(g.node_count, tuple(edges), tuple(arrows))


def matrices(g: MixedGraph) -> MatrixBundle:
    """Extract the walk matrices; the graph must carry no arrow self-loops
    (normalize() first)."""
    n = g.node_count
    for i, j in g.arrows:
        if i == j:
            raise GraphFormatError(
                f"arrow self-loop at node {i}; call normalize() first")
    adj = [[0] * n for _ in range(n)]
    arr = [[0] * n for _ in range(n)]
    for i, j in g.edges:
        if i == j:
            adj[i][i] += 2
        else:
            adj[i][j] += 1
            adj[j][i] += 1
    for i, j in g.arrows:
        adj[i][j] += 1
        arr[i][j] += 1
    degrees = [sum(adj[i][j] - arr[i][j] for j in range(n)) for i in range(n)]
    exponent = n - len(g.edges)
    assert exponent == -(sum(degrees) - 2 * n) // 2
    return MatrixBundle(tuple(tuple(r) for r in adj),
                        tuple(tuple(r) for r in arr),
                        tuple(d - 1 for d in degrees),
                        exponent)


def total_degrees(g: MixedGraph) -> list[int]:
    """Undirected degree (loops twice) plus arrow in- and out-degree."""
    n = g.node_count
    deg = [0] * n
    for i, j in g.edges:
        if i == j:
            deg[i] += 2
        else:
            deg[i] += 1
            deg[j] += 1
    for i, j in g.arrows:
        deg[i] += 1
        deg[j] += 1
    return deg


def degree_profile(g: MixedGraph) -> DegreeProfile:
    deg = total_degrees(g)
    lo, hi = min(deg), max(deg)
    return DegreeProfile(lo, hi, lo == hi)


def _neighbours(g: MixedGraph) -> list[set[int]]:
    nbr: list[set[int]] = [set() for _ in range(g.node_count)]
    for i, j in list(g.edges) + list(g.arrows):
        nbr[i].add(j)
        nbr[j].add(i)
    return nbr


def bipartition(g: MixedGraph) -> tuple[int, ...] | None:
    """Two-coloring of the undirected support (arrows count as adjacency),
    or None if an odd cycle or a loop makes one impossible."""
    if any(i == j for i, j in list(g.edges) + list(g.arrows)):
        return None
    nbr = _neighbours(g)
    color = [-1] * g.node_count
    for start in range(g.node_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in nbr[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return tuple(color)


def is_connected(g: MixedGraph) -> bool:
    nbr = _neighbours(g)
    seen = {0}
    queue = [0]
    while queue:
        v = queue.pop()
        for w in nbr[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.node_count
