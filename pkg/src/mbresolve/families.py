"""Graph family generators, closed-form outcome predictors, tree classification.

Every generator documents its vertex labeling through Graph.labels so named
vertices map to fixed integer ids.  Predictors return the set of outcome
symbols the closed form allows (usually a singleton); instances with no
closed form raise NotCoveredError.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

import networkx as nx

from .errors import (
    DisconnectedError,
    FamilyParameterError,
    NotATreeError,
    NotCoveredError,
    TreeHypothesisError,
)
from .game import OutcomeSymbol
from .graph import Graph, all_pairs_distances, build_graph
from .resolve import pair_resolver_set

B, N, M = OutcomeSymbol.B, OutcomeSymbol.N, OutcomeSymbol.M


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer (or integer-tuple) parameters."""

    family: str
    params: tuple[tuple[str, object], ...] = ()

    @classmethod
    def make(cls, family: str, **params) -> "FamilySpec":
        return cls(family=family, params=tuple(sorted(params.items())))

    def get(self, name: str, default=None):
        for key, value in self.params:
            if key == name:
                return value
        return default

    def describe(self) -> str:
        if not self.params:
            return self.family
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})"


@dataclass(frozen=True)
class GeneratedGraph:
    graph: Graph
    spec: FamilySpec
    automorphism_generators: tuple[tuple[int, ...], ...] = ()


def _int_param(spec: FamilySpec, name: str, minimum: int) -> int:
    value = spec.get(name)
    if not isinstance(value, int) or value < minimum:
        raise FamilyParameterError(f"{spec.family} needs integer {name} >= {minimum}, got {value!r}")
    return value


# -- generators ---------------------------------------------------------------


def _gen_path(spec: FamilySpec) -> GeneratedGraph:
    n = _int_param(spec, "n", 1)
    g = build_graph(n, [(i, i + 1) for i in range(n - 1)], labels=[f"v{i + 1}" for i in range(n)])
    return GeneratedGraph(g, spec)


def _gen_cycle(spec: FamilySpec) -> GeneratedGraph:
    n = _int_param(spec, "n", 3)
    g = build_graph(n, [(i, (i + 1) % n) for i in range(n)], labels=[f"u{i + 1}" for i in range(n)])
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((-i) % n for i in range(n))
    return GeneratedGraph(g, spec, automorphism_generators=(rotation, reflection))


def _gen_complete(spec: FamilySpec) -> GeneratedGraph:
    n = _int_param(spec, "n", 1)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    g = build_graph(n, edges, labels=[f"v{i + 1}" for i in range(n)])
    return GeneratedGraph(g, spec)


def _gen_star(spec: FamilySpec) -> GeneratedGraph:
    beta = _int_param(spec, "beta", 1)
    g = build_graph(
        beta + 1,
        [(0, i) for i in range(1, beta + 1)],
        labels=["c"] + [f"l{i}" for i in range(1, beta + 1)],
    )
    return GeneratedGraph(g, spec)


def _multipartite_parts(spec: FamilySpec) -> tuple[int, ...]:
    parts = spec.get("parts")
    if (
        not isinstance(parts, tuple)
        or len(parts) < 2
        or not all(isinstance(a, int) and a >= 1 for a in parts)
    ):
        raise FamilyParameterError(f"multipartite needs a tuple of >= 2 part sizes >= 1, got {parts!r}")
    return parts


def _gen_multipartite(spec: FamilySpec) -> GeneratedGraph:
    parts = _multipartite_parts(spec)
    offsets = [0]
    for a in parts:
        offsets.append(offsets[-1] + a)
    n = offsets[-1]
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in range(offsets[i], offsets[i + 1]):
                for v in range(offsets[j], offsets[j + 1]):
                    edges.append((u, v))
    labels = [f"p{i + 1}_{j + 1}" for i, a in enumerate(parts) for j in range(a)]
    return GeneratedGraph(build_graph(n, edges, labels=labels), spec)


def _gen_wheel(spec: FamilySpec) -> GeneratedGraph:
    n = _int_param(spec, "n", 3)
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    g = build_graph(n + 1, edges, labels=[f"u{i + 1}" for i in range(n)] + ["hub"])
    rotation = tuple((i + 1) % n for i in range(n)) + (n,)
    reflection = tuple((-i) % n for i in range(n)) + (n,)
    return GeneratedGraph(g, spec, automorphism_generators=(rotation, reflection))


def _gen_petersen(spec: FamilySpec) -> GeneratedGraph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer 5-cycle
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        edges.append((i, 5 + i))                # spokes
    labels = [f"o{i}" for i in range(5)] + [f"i{i}" for i in range(5)]
    return GeneratedGraph(build_graph(10, edges, labels=labels), spec)


def _gen_thm_a(spec: FamilySpec) -> GeneratedGraph:
    # star on alpha leaves with all but two edges subdivided once:
    # hub 0; subdivision vertices s_i = i (i in 1..alpha-2) carrying leaf
    # l_i = alpha-2+i; leaves l_{alpha-1}, l_alpha hang on the hub directly
    alpha = _int_param(spec, "alpha", 3)
    edges = []
    labels = ["v"]
    for i in range(1, alpha - 1):
        edges.append((0, i))
        edges.append((i, alpha - 2 + i))
        labels.append(f"s{i}")
    for i in range(1, alpha + 1):
        labels.append(f"l{i}")
    for leaf in (2 * alpha - 3, 2 * alpha - 2):
        edges.append((0, leaf))
    return GeneratedGraph(build_graph(2 * alpha - 1, edges, labels=labels), spec)


def _gen_thm_b(spec: FamilySpec) -> GeneratedGraph:
    # star on alpha leaves with all but three edges subdivided once
    alpha = _int_param(spec, "alpha", 4)
    edges = []
    labels = ["v"]
    for i in range(1, alpha - 2):
        edges.append((0, i))
        edges.append((i, alpha - 3 + i))
        labels.append(f"s{i}")
    for i in range(1, alpha + 1):
        labels.append(f"l{i}")
    for leaf in (2 * alpha - 5, 2 * alpha - 4, 2 * alpha - 3):
        edges.append((0, leaf))
    return GeneratedGraph(build_graph(2 * alpha - 2, edges, labels=labels), spec)


def _gen_thm_d(spec: FamilySpec) -> GeneratedGraph:
    # 3-vertex spine, two leaves per spine vertex
    edges = [(0, 1), (1, 2)]
    labels = ["v1", "v2", "v3"]
    for i in range(3):
        a, b = 3 + 2 * i, 4 + 2 * i
        edges += [(i, a), (i, b)]
        labels += [f"l{i + 1}", f"l{i + 1}p"]
    return GeneratedGraph(build_graph(9, edges, labels=labels), spec)


def _gen_thm_e(spec: FamilySpec) -> GeneratedGraph:
    # alpha-vertex spine; two leaves per spine vertex, three on the last
    alpha = _int_param(spec, "alpha", 3)
    edges = [(i, i + 1) for i in range(alpha - 1)]
    labels = [f"v{i + 1}" for i in range(alpha)]
    nxt = alpha
    for i in range(alpha - 1):
        edges += [(i, nxt), (i, nxt + 1)]
        labels += [f"l{i + 1}a", f"l{i + 1}b"]
        nxt += 2
    edges += [(alpha - 1, nxt), (alpha - 1, nxt + 1), (alpha - 1, nxt + 2)]
    labels += [f"l{alpha}a", f"l{alpha}b", f"l{alpha}c"]
    return GeneratedGraph(build_graph(3 * alpha + 1, edges, labels=labels), spec)


def _gen_thm_f(spec: FamilySpec) -> GeneratedGraph:
    # alpha-vertex spine with exactly two leaves per spine vertex
    alpha = _int_param(spec, "alpha", 4)
    edges = [(i, i + 1) for i in range(alpha - 1)]
    labels = [f"v{i + 1}" for i in range(alpha)]
    nxt = alpha
    for i in range(alpha):
        edges += [(i, nxt), (i, nxt + 1)]
        labels += [f"l{i + 1}a", f"l{i + 1}b"]
        nxt += 2
    return GeneratedGraph(build_graph(3 * alpha, edges, labels=labels), spec)


def _gen_fig1(spec: FamilySpec) -> GeneratedGraph:
    # alpha branches on a spine; branch i carries paired leaves l_i,l_i',
    # paired supports s_i,s_i' and a hub x_i joining both supports; every hub
    # meets a shared vertex y whose pendant is z
    alpha = _int_param(spec, "alpha", 2)
    edges = []
    labels = []
    for i in range(alpha):
        base = 6 * i
        v, l1, l2, s1, s2, x = base, base + 1, base + 2, base + 3, base + 4, base + 5
        labels += [f"v{i + 1}", f"l{i + 1}", f"l{i + 1}p", f"s{i + 1}", f"s{i + 1}p", f"x{i + 1}"]
        edges += [(v, l1), (v, l2), (v, s1), (v, s2), (s1, x), (s2, x)]
        if i + 1 < alpha:
            edges.append((v, v + 6))
        edges.append((x, 6 * alpha))
    y, z = 6 * alpha, 6 * alpha + 1
    labels += ["y", "z"]
    edges.append((y, z))
    g = build_graph(6 * alpha + 2, edges, labels=labels)
    _check_fig1_structure(g, alpha)
    return GeneratedGraph(g, spec)


def _check_fig1_structure(g: Graph, alpha: int) -> None:
    # guard against a mislabeled construction: each branch's second
    # leaf/support pair must be separated by exactly {pair, hub} at k=1,
    # plus y at k=2, plus z from k=3 on
    dm = all_pairs_distances(g)
    y, z = 6 * alpha, 6 * alpha + 1
    for i in range(alpha):
        l2, s2, x = 6 * i + 2, 6 * i + 4, 6 * i + 5
        assert pair_resolver_set(dm, 1, l2, s2) == {l2, s2, x}
        assert pair_resolver_set(dm, 2, l2, s2) == {l2, s2, x, y}
        assert pair_resolver_set(dm, 3, l2, s2) >= {l2, s2, x, y, z}


# -- outcome predictors --------------------------------------------------------


def _multipartite_symbol(parts: tuple[int, ...]) -> OutcomeSymbol:
    singles = sum(1 for a in parts if a == 1)
    if singles >= 4 or max(parts) >= 4:
        return B
    threes = sum(1 for a in parts if a == 3)
    if threes >= 2:
        return B
    if singles == 3:
        return B if threes == 1 else N
    if threes == 1:
        return N
    return M


def _predict_cycle(spec: FamilySpec, k: int) -> frozenset[OutcomeSymbol]:
    n = _int_param(spec, "n", 3)
    if n == 3:
        return frozenset({N})
    if n % 2 == 0 or k >= 2:
        return frozenset({M})
    # k == 1, odd n: verified for n in {5,7,9}; larger n only conjectured
    if n <= 9:
        return frozenset({M})
    raise NotCoveredError(f"level-1 outcome on the odd cycle of order {n} has no confirmed closed form")


def _predict_wheel(spec: FamilySpec, k: int) -> frozenset[OutcomeSymbol]:
    n = _int_param(spec, "n", 3)
    if n == 3:
        return frozenset({B})
    if n <= 8 or n % 2 == 0:
        return frozenset({M})
    return frozenset({M, N})


def _predict_multipartite(spec: FamilySpec, k: int) -> frozenset[OutcomeSymbol]:
    return frozenset({_multipartite_symbol(_multipartite_parts(spec))})


def _predict_star(spec: FamilySpec, k: int) -> frozenset[OutcomeSymbol]:
    beta = _int_param(spec, "beta", 1)
    return frozenset({_multipartite_symbol((1, beta))})


def _predict_complete(spec: FamilySpec, k: int) -> frozenset[OutcomeSymbol]:
    n = _int_param(spec, "n", 1)
    if n == 1:
        raise NotCoveredError("single-vertex graph has no closed form")
    return frozenset({_multipartite_symbol(tuple([1] * n))})


def _predict_petersen(spec: FamilySpec, k: int) -> frozenset[OutcomeSymbol]:
    return frozenset({M})


def _steps(k: int, at_1: OutcomeSymbol, later: OutcomeSymbol, at_2: OutcomeSymbol | None = None):
    if k == 1:
        return frozenset({at_1})
    if at_2 is not None and k == 2:
        return frozenset({at_2})
    return frozenset({later})


PREDICTORS: dict[str, Callable[[FamilySpec, int], frozenset[OutcomeSymbol]]] = {
    "cycle": _predict_cycle,
    "complete": _predict_complete,
    "star": _predict_star,
    "multipartite": _predict_multipartite,
    "wheel": _predict_wheel,
    "petersen": _predict_petersen,
    "thm_a": lambda spec, k: frozenset({M}),
    "thm_b": lambda spec, k: frozenset({N}),
    "thm_d": lambda spec, k: _steps(k, N, M),
    "thm_e": lambda spec, k: _steps(k, B, N),
    "thm_f": lambda spec, k: _steps(k, B, M),
    "fig1": lambda spec, k: _steps(k, B, M, at_2=N),
}

GENERATORS: dict[str, Callable[[FamilySpec], GeneratedGraph]] = {
    "path": _gen_path,
    "cycle": _gen_cycle,
    "complete": _gen_complete,
    "star": _gen_star,
    "multipartite": _gen_multipartite,
    "wheel": _gen_wheel,
    "petersen": _gen_petersen,
    "thm_a": _gen_thm_a,
    "thm_b": _gen_thm_b,
    "thm_d": _gen_thm_d,
    "thm_e": _gen_thm_e,
    "thm_f": _gen_thm_f,
    "fig1": _gen_fig1,
}

FAMILY_DESCRIPTIONS: dict[str, str] = {
    "path": "path on n vertices",
    "cycle": "cycle on n vertices",
    "complete": "complete graph on n vertices",
    "star": "star with beta leaves",
    "multipartite": "complete multipartite graph with the given part sizes",
    "wheel": "n-cycle joined to a hub",
    "petersen": "the Petersen graph",
    "thm_a": "star on alpha leaves with all but two edges subdivided once",
    "thm_b": "star on alpha leaves with all but three edges subdivided once",
    "thm_d": "3-vertex spine with two leaves per spine vertex",
    "thm_e": "alpha-vertex spine, two leaves per spine vertex and three on the last",
    "thm_f": "alpha-vertex spine with two leaves per spine vertex",
    "fig1": "alpha branches (paired leaves, paired supports, hub) sharing a tailed center",
}


def family_names() -> tuple[str, ...]:
    return tuple(sorted(GENERATORS))


def gen_family(spec: FamilySpec) -> GeneratedGraph:
    gen = GENERATORS.get(spec.family)
    if gen is None:
        raise FamilyParameterError(f"unknown family {spec.family!r}; known: {', '.join(family_names())}")
    return gen(spec)


def predict_outcome(spec: FamilySpec, k: int) -> frozenset[OutcomeSymbol]:
    """Closed-form outcome symbols for a covered family instance at level k."""
    if k < 1:
        raise ValueError(f"truncation parameter k must be >= 1, got {k}")
    predictor = PREDICTORS.get(spec.family)
    if predictor is None:
        raise NotCoveredError(f"family {spec.family!r} has no closed-form outcome")
    return predictor(spec, k)


def predicted_counts(spec: FamilySpec, k: int, dim_value: int | None = None) -> dict[str, int] | None:
    """Known exact move counts for the few families with closed forms."""
    if spec.family == "petersen":
        return {"mrk": 3, "mprime_rk": 3}
    if spec.family in ("multipartite", "star", "complete"):
        if spec.family == "multipartite":
            parts = _multipartite_parts(spec)
        elif spec.family == "star":
            parts = (1, _int_param(spec, "beta", 1))
        else:
            parts = tuple([1] * _int_param(spec, "n", 2))
        symbol = _multipartite_symbol(parts)
        if symbol is B:
            return {"brk": 2, "bprime_rk": 2}
        if symbol is M:
            if dim_value is None:
                return None
            return {"mrk": dim_value, "mprime_rk": dim_value}
        if dim_value is None:
            return None
        return {"nrk": dim_value, "nprime_rk": 2}
    return None


# -- tree classification --------------------------------------------------------


@dataclass(frozen=True)
class TreeProfile:
    """Exterior major vertices grouped by terminal degree, plus eligibility flags."""

    n: int
    terminal_degrees: tuple[tuple[int, int], ...]  # (major vertex, terminal degree)
    leaves: tuple[int, ...]
    m1: tuple[int, ...]
    m2: tuple[int, ...]
    m3: tuple[int, ...]
    m4: tuple[int, ...]  # terminal degree >= 4
    has_degree_two_vertex: bool
    has_zero_terminal_major: bool
    is_path: bool

    @property
    def eligible(self) -> bool:
        return not (self.is_path or self.has_degree_two_vertex or self.has_zero_terminal_major)


def classify_tree(g: Graph) -> TreeProfile:
    """Terminal-degree profile of a tree's major (degree >= 3) vertices."""
    if not g.is_tree():
        raise NotATreeError(f"graph with {g.edge_count} edges on {g.n} vertices is not a tree")
    degrees = [g.degree(v) for v in range(g.n)]
    majors = [v for v in range(g.n) if degrees[v] >= 3]
    leaves = [v for v in range(g.n) if degrees[v] == 1]
    dm = all_pairs_distances(g)
    ter = {v: 0 for v in majors}
    for leaf in leaves:
        if majors:
            closest = min(majors, key=lambda v: dm.dist[leaf][v])
            # in a tree the first major vertex on the walk from a leaf is
            # strictly closer than every other major vertex
            ter[closest] += 1
    buckets: dict[int, list[int]] = {1: [], 2: [], 3: [], 4: []}
    for v in majors:
        t = ter[v]
        if t >= 4:
            buckets[4].append(v)
        elif t >= 1:
            buckets[t].append(v)
    return TreeProfile(
        n=g.n,
        terminal_degrees=tuple(sorted(ter.items())),
        leaves=tuple(leaves),
        m1=tuple(buckets[1]),
        m2=tuple(buckets[2]),
        m3=tuple(buckets[3]),
        m4=tuple(buckets[4]),
        has_degree_two_vertex=any(d == 2 for d in degrees),
        has_zero_terminal_major=any(t == 0 for t in ter.values()),
        is_path=all(d <= 2 for d in degrees),
    )


def predict_tree_outcome(tp: TreeProfile, k: int) -> OutcomeSymbol:
    """Closed-form outcome for trees whose vertices are all leaves or exterior majors."""
    if k < 1:
        raise ValueError(f"truncation parameter k must be >= 1, got {k}")
    if not tp.eligible:
        raise TreeHypothesisError(
            "tree must avoid degree-two vertices and zero-terminal majors, and not be a path"
        )
    m2, m3, m4 = len(tp.m2), len(tp.m3), len(tp.m4)
    if m4 >= 1 or m3 >= 2:
        return B
    if m3 == 1:
        if k >= 2:
            return N
        return N if m2 <= 1 else B
    # no majors of terminal degree >= 3; eligibility forces m2 >= 2
    if k >= 2:
        return M
    if m2 == 2:
        return M
    if m2 == 3:
        return N
    return B


# -- enumeration and sampling helpers -------------------------------------------


def all_free_trees(n: int) -> Iterator[Graph]:
    """All free trees on n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError(f"tree order must be >= 1, got {n}")
    if n == 1:
        yield build_graph(1, [])
        return
    if n == 2:
        yield build_graph(2, [(0, 1)])
        return
    for t in nx.nonisomorphic_trees(n):
        yield build_graph(n, list(t.edges()))


def connected_graph_atlas(max_n: int = 7, min_n: int = 1) -> list[Graph]:
    """All connected graphs with min_n <= order <= max_n, one per isomorphism class."""
    if not 1 <= min_n <= max_n <= 7:
        raise ValueError("atlas covers orders 1..7")
    out = []
    for ag in nx.generators.atlas.graph_atlas_g():
        n = ag.number_of_nodes()
        if min_n <= n <= max_n and nx.is_connected(ag):
            out.append(build_graph(n, list(ag.edges())))
    return out


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Uniform edge sampling with retry until connected; seeded and deterministic."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(200):
        edges = [e for e in pairs if rng.random() < p]
        try:
            return build_graph(n, edges)
        except DisconnectedError:
            continue
    # dense fallback keeps the helper total for tiny p
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[i], perm[i + 1]) for i in range(n - 1)]
    edges += [e for e in pairs if rng.random() < p]
    return build_graph(n, edges)
