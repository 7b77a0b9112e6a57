"""Immutable graph core: construction, BFS distances, the truncated metric, twin classes.

Vertices are dense integers 0..n-1.  Graphs are simple, undirected and
connected; connectivity is checked at construction time.  All structures here
are frozen and safe to share between threads.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .errors import DisconnectedError, LoopEdgeError, VertexRangeError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_tree(self) -> bool:
        # connectivity is a construction invariant
        return len(self.edges) == self.n - 1

    def relabel(self, perm: tuple[int, ...]) -> "Graph":
        """Graph with vertex i renamed perm[i] (used by automorphism checks)."""
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        labels = None
        if self.labels is not None:
            new = [""] * self.n
            for i, lab in enumerate(self.labels):
                new[perm[i]] = lab
            labels = tuple(new)
        return build_graph(self.n, edges, labels=labels)


def build_graph(n: int, edges, labels=None) -> Graph:
    """Validate and build a Graph; duplicate edges are dropped with a log line."""
    if n < 1:
        raise VertexRangeError(f"vertex count must be >= 1, got {n}")
    seen: set[tuple[int, int]] = set()
    adjacency: list[set[int]] = [set() for _ in range(n)]
    duplicates = 0
    for u, v in edges:
        if u == v:
            raise LoopEdgeError(f"loop edge at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        adjacency[u].add(v)
        adjacency[v].add(u)
    if duplicates:
        log.warning("dropped %d duplicate edge(s)", duplicates)
    _check_connected(n, adjacency)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise VertexRangeError(f"expected {n} labels, got {len(labels)}")
    return Graph(
        n=n,
        edges=frozenset(seen),
        adjacency=tuple(frozenset(a) for a in adjacency),
        labels=labels,
    )


def _check_connected(n: int, adjacency) -> None:
    reached = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if len(reached) != n:
        missing = sorted(set(range(n)) - reached)
        raise DisconnectedError(f"graph is disconnected; unreachable from 0: {missing}")


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts with the graph diameter."""

    n: int
    dist: tuple[tuple[int, ...], ...]
    diameter: int

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.dist[u][v]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; exact hop counts."""
    rows = []
    diameter = 0
    for s in range(g.n):
        row = [-1] * g.n
        row[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = row[u]
            for w in g.adjacency[u]:
                if row[w] < 0:
                    row[w] = du + 1
                    queue.append(w)
        diameter = max(diameter, max(row))
        rows.append(tuple(row))
    return DistanceMatrix(n=g.n, dist=tuple(rows), diameter=diameter)


def truncated_distance(dm: DistanceMatrix, k: int, u: int, v: int) -> int:
    """min(d(u,v), k+1): distances beyond k are indistinguishable."""
    if k < 1:
        raise ValueError(f"truncation parameter k must be >= 1, got {k}")
    d = dm.dist[u][v]
    return d if d <= k else k + 1


class TwinClassKind(Enum):
    SINGLETON = "singleton"
    CLIQUE = "clique"
    INDEPENDENT = "independent"


@dataclass(frozen=True)
class TwinPartition:
    """Partition of V into twin classes, each tagged clique/independent/singleton."""

    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[TwinClassKind, ...]

    def classes_of_size(self, minimum: int) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c in self.classes if len(c) >= minimum)

    def dimension_lower_bound(self) -> int:
        """Every resolving set misses at most one vertex per class."""
        return sum(len(c) - 1 for c in self.classes)


def are_twins(g: Graph, u: int, w: int) -> bool:
    """True iff N(u)-{w} = N(w)-{u}."""
    return (g.adjacency[u] - {w}) == (g.adjacency[w] - {u})


def twin_partition(g: Graph) -> TwinPartition:
    """Group vertices by the twin equivalence relation."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(g.n):
        for w in range(u + 1, g.n):
            if are_twins(g, u, w):
                ru, rw = find(u), find(w)
                if ru != rw:
                    parent[rw] = ru

    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    classes = tuple(sorted(tuple(sorted(c)) for c in groups.values()))

    kinds = []
    for cls in classes:
        if len(cls) == 1:
            kinds.append(TwinClassKind.SINGLETON)
        elif all(b in g.adjacency[a] for i, a in enumerate(cls) for b in cls[i + 1:]):
            kinds.append(TwinClassKind.CLIQUE)
        else:
            # the twin relation forces each class to induce a clique or an
            # independent set, so "not all adjacent" means "none adjacent"
            assert not any(b in g.adjacency[a] for i, a in enumerate(cls) for b in cls[i + 1:])
            kinds.append(TwinClassKind.INDEPENDENT)
    return TwinPartition(classes=classes, kinds=tuple(kinds))
