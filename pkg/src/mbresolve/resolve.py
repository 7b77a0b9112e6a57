"""Distance-k resolving machinery.

Code maps, resolving checks via partition refinement, pair-resolver sets,
exact distance-k metric dimension, pair systems (pairing / quasi-pairing)
and the cycle gap conditions.

A landmark set S resolves at truncation k exactly when it intersects the
pair-resolver set R_k{x,y} of every vertex pair, so most hot paths here work
on precomputed bitmasks of those sets.

Quantifier note: a quasi-pairing system requires one fixed completion vertex
that works for every transversal (exists-v for-all-Z); the weaker for-all-Z
exists-v reading is deliberately not implemented.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CycleTooSmallError,
    EmptyLandmarkSetError,
    PairsOverlapError,
    SameVertexError,
    SizeCapError,
    TooManyPairsError,
)
from .graph import DistanceMatrix, truncated_distance

DEFAULT_SIZE_CAP = 18
MAX_PAIR_SYSTEM = 20


def code_vector(dm: DistanceMatrix, k: int, landmarks: Sequence[int], v: int) -> tuple[int, ...]:
    """Truncated distances from v to the landmarks, in landmark order."""
    if not landmarks:
        raise EmptyLandmarkSetError("code vector needs at least one landmark")
    return tuple(truncated_distance(dm, k, v, u) for u in landmarks)


@dataclass(frozen=True)
class ResolutionPartition:
    """Partition of V where two vertices share a block iff their codes agree."""

    blocks: tuple[tuple[int, ...], ...]
    landmarks: tuple[int, ...]
    k: int

    @property
    def discrete(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)


def _refine(dm: DistanceMatrix, k: int, landmarks: Iterable[int]) -> list[list[int]]:
    blocks = [list(range(dm.n))]
    cap = k + 1
    for u in landmarks:
        row = dm.dist[u]
        new_blocks = []
        for block in blocks:
            if len(block) == 1:
                new_blocks.append(block)
                continue
            groups: dict[int, list[int]] = {}
            for v in block:
                d = row[v]
                groups.setdefault(d if d <= k else cap, []).append(v)
            new_blocks.extend(groups.values())
        blocks = new_blocks
    return blocks


def resolution_partition(dm: DistanceMatrix, k: int, landmarks: Iterable[int]) -> ResolutionPartition:
    """Split V by truncated distance to each landmark in turn."""
    if k < 1:
        raise ValueError(f"truncation parameter k must be >= 1, got {k}")
    landmarks = tuple(sorted(set(landmarks)))
    blocks = _refine(dm, k, landmarks)
    return ResolutionPartition(
        blocks=tuple(sorted(tuple(sorted(b)) for b in blocks)),
        landmarks=landmarks,
        k=k,
    )


class ResolveCheck(NamedTuple):
    ok: bool
    unresolved: tuple[int, int] | None


def is_resolving(dm: DistanceMatrix, k: int, landmarks: Iterable[int]) -> ResolveCheck:
    """True iff the code map is injective; on failure returns one unresolved pair."""
    if k < 1:
        raise ValueError(f"truncation parameter k must be >= 1, got {k}")
    blocks = _refine(dm, k, sorted(set(landmarks)))
    witness = None
    for block in blocks:
        if len(block) > 1:
            a, b = sorted(block)[:2]
            if witness is None or (a, b) < witness:
                witness = (a, b)
    if witness is not None:
        return ResolveCheck(False, witness)
    return ResolveCheck(True, None)


def pair_resolver_set(dm: DistanceMatrix, k: int, x: int, y: int) -> frozenset[int]:
    """Vertices whose truncated distance separates x from y."""
    if x == y:
        raise SameVertexError(f"pair must be two distinct vertices, got ({x},{y})")
    return frozenset(
        z for z in range(dm.n)
        if truncated_distance(dm, k, x, z) != truncated_distance(dm, k, y, z)
    )


@lru_cache(maxsize=256)
def minimal_pair_masks(dm: DistanceMatrix, k: int) -> tuple[int, ...]:
    """Inclusion-minimal pair-resolver sets as bitmasks, smallest first.

    A set S resolves at truncation k iff it intersects every one of these
    masks; the masks are also exactly the minimal vertex sets whose removal
    (capture by a blocker) makes resolution impossible.
    """
    if k < 1:
        raise ValueError(f"truncation parameter k must be >= 1, got {k}")
    n = dm.n
    cap = k + 1
    trunc = [tuple(d if d <= k else cap for d in row) for row in dm.dist]
    masks = set()
    for x in range(n):
        tx = trunc[x]
        for y in range(x + 1, n):
            ty = trunc[y]
            m = 0
            for z in range(n):
                if tx[z] != ty[z]:
                    m |= 1 << z
            masks.add(m)
    ordered = sorted(masks, key=lambda m: (m.bit_count(), m))
    minimal: list[int] = []
    for m in ordered:
        if not any(kept & ~m == 0 for kept in minimal):
            minimal.append(m)
    return tuple(minimal)


def mask_resolves(masks: Sequence[int], set_mask: int) -> bool:
    """True iff set_mask hits every minimal pair mask."""
    for m in masks:
        if not m & set_mask:
            return False
    return True


class DimResult(NamedTuple):
    value: int
    witness: tuple[int, ...]


def metric_dimension_k(dm: DistanceMatrix, k: int, *, size_cap: int | None = None) -> DimResult:
    """Exact distance-k metric dimension with the lexicographically least witness.

    Searches cardinalities upward from the twin lower bound; feasibility at
    each size is a branch-and-bound on the smallest unhit pair mask.
    """
    cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
    if dm.n > cap:
        raise SizeCapError(dm.n, cap)
    masks = minimal_pair_masks(dm, k)
    if not masks:
        return DimResult(0, ())
    # greedy packing of pairwise-disjoint masks lower-bounds the hitting
    # number; the twin bound (all but one vertex per twin class) is sharper
    # for classes of three or more
    packing = 0
    packed = 0
    for m in masks:
        if not m & packed:
            packing += 1
            packed |= m
    lower = max(packing, _twin_lower_bound(dm))
    for size in range(lower, dm.n):
        if _hitting_exists(masks, size):
            witness = _lex_min_hitting(masks, dm.n, size)
            assert witness is not None
            return DimResult(size, witness)
    # every (n-1)-subset resolves, so the loop always returns
    raise AssertionError("unreachable: V minus one vertex always resolves")


def _twin_lower_bound(dm: DistanceMatrix) -> int:
    """Sum of (size - 1) over twin classes, read off the distance matrix."""
    n = dm.n
    assigned = [False] * n
    bound = 0
    for u in range(n):
        if assigned[u]:
            continue
        size = 1
        for w in range(u + 1, n):
            if assigned[w]:
                continue
            if all(
                (dm.dist[u][z] == 1) == (dm.dist[w][z] == 1)
                for z in range(n)
                if z != u and z != w
            ):
                assigned[w] = True
                size += 1
        bound += size - 1
    return bound


def _hitting_exists(masks: Sequence[int], budget: int, hit: int = 0) -> bool:
    pending = [m for m in masks if not m & hit]
    if not pending:
        return True
    if budget == 0:
        return False
    branch = min(pending, key=lambda m: m.bit_count())
    m = branch
    while m:
        bit = m & -m
        if _hitting_exists(pending, budget - 1, hit | bit):
            return True
        m ^= bit
    return False


def _lex_min_hitting(masks: Sequence[int], n: int, size: int) -> tuple[int, ...] | None:
    for combo in combinations(range(n), size):
        s = 0
        for v in combo:
            s |= 1 << v
        if mask_resolves(masks, s):
            return combo
    return None


class PairSystemKind(Enum):
    PAIRING = "pairing"
    QUASI_PAIRING = "quasi-pairing"
    NEITHER = "neither"


@dataclass(frozen=True)
class PairSystem:
    """Disjoint unordered vertex pairs used as a one-per-pair claiming plan."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        flat = [v for p in self.pairs for v in p]
        if len(set(flat)) != len(flat):
            raise PairsOverlapError(f"pair system vertices overlap: {self.pairs}")

    @classmethod
    def of(cls, pairs: Iterable[Iterable[int]]) -> "PairSystem":
        norm = tuple(tuple(sorted(p)) for p in pairs)
        for p in norm:
            if len(p) != 2:
                raise PairsOverlapError(f"each pair needs exactly two vertices, got {p}")
            if p[0] == p[1]:
                raise SameVertexError(f"pair repeats vertex {p[0]}")
        return cls(pairs=tuple(sorted(norm)))

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for p in self.pairs for v in p)


@dataclass(frozen=True)
class PairSystemCheck:
    kind: PairSystemKind
    witnesses: tuple[int, ...] = ()

    @property
    def witness(self) -> int | None:
        return self.witnesses[0] if self.witnesses else None


def _transversal_masks(pairs: Sequence[tuple[int, int]]):
    a = len(pairs)
    for choice in range(1 << a):
        s = 0
        for i, (u, w) in enumerate(pairs):
            s |= 1 << (w if choice >> i & 1 else u)
        yield s


def check_pair_system(dm: DistanceMatrix, k: int, pairs, *, max_pairs: int = MAX_PAIR_SYSTEM) -> PairSystemCheck:
    """Classify a pair system by exhausting its transversals.

    pairing: every transversal resolves.  quasi-pairing: no transversal
    resolves but some single outside vertex completes all of them (all such
    witnesses are returned, ascending).  neither: anything else.
    """
    ps = pairs if isinstance(pairs, PairSystem) else PairSystem.of(pairs)
    if len(ps.pairs) > max_pairs:
        raise TooManyPairsError(f"{len(ps.pairs)} pairs exceed the cap of {max_pairs}")
    if not ps.pairs:
        raise PairsOverlapError("pair system needs at least one pair")
    out_of_range = [v for v in ps.vertex_set if not 0 <= v < dm.n]
    if out_of_range:
        raise ValueError(f"pair vertices outside 0..{dm.n - 1}: {sorted(out_of_range)}")
    masks = minimal_pair_masks(dm, k)
    any_resolves = False
    all_resolve = True
    for t in _transversal_masks(ps.pairs):
        if mask_resolves(masks, t):
            any_resolves = True
        else:
            all_resolve = False
        if any_resolves and not all_resolve:
            return PairSystemCheck(PairSystemKind.NEITHER)
    if all_resolve:
        return PairSystemCheck(PairSystemKind.PAIRING)
    used = ps.vertex_set
    witnesses = []
    for v in range(dm.n):
        if v in used:
            continue
        bit = 1 << v
        if all(mask_resolves(masks, t | bit) for t in _transversal_masks(ps.pairs)):
            witnesses.append(v)
    if witnesses:
        return PairSystemCheck(PairSystemKind.QUASI_PAIRING, tuple(witnesses))
    return PairSystemCheck(PairSystemKind.NEITHER)


def _first_failing_transversal(masks, pairs) -> int | None:
    """A transversal that fails to resolve, or None if all resolve."""
    for t in _transversal_masks(pairs):
        if not mask_resolves(masks, t):
            return t
    return None


def search_pair_system(
    dm: DistanceMatrix,
    k: int,
    *,
    budget: int = 400,
) -> tuple[PairSystem, PairSystemCheck] | None:
    """Budgeted search for a pairing (preferred) or quasi-pairing system.

    Seeds with pairs inside twin classes, then repairs failing transversals by
    adding a pair drawn from an unhit pair-resolver mask: any transversal must
    then take one of the two, which hits that mask.
    """
    masks = minimal_pair_masks(dm, k)
    if not masks:
        return None
    seed: list[tuple[int, int]] = []
    used = 0
    # twin pairs are forced structure: both sides of a 2-mask resolve the pair
    for m in masks:
        if m.bit_count() == 2 and not m & used:
            u = (m & -m).bit_length() - 1
            w = (m ^ (m & -m)).bit_length() - 1
            seed.append((u, w))
            used |= m
    visited: list[tuple[tuple[int, int], ...]] = []
    seen: set[tuple[tuple[int, int], ...]] = set()
    state = {"budget": budget}

    def extend(pairs: tuple[tuple[int, int], ...], used: int) -> PairSystem | None:
        if state["budget"] <= 0 or len(pairs) > dm.n // 2 or pairs in seen:
            return None
        seen.add(pairs)
        state["budget"] -= 1
        if pairs:
            failing = _first_failing_transversal(masks, pairs)
            if failing is None:
                return PairSystem(pairs=pairs)
            visited.append(pairs)
            unhit_masks = [m for m in masks if not m & failing]
        else:
            unhit_masks = [masks[0]]
        tried: set[tuple[int, int]] = set()
        for unhit in unhit_masks:
            free = unhit & ~used
            candidates = []
            while free:
                bit = free & -free
                candidates.append(bit.bit_length() - 1)
                free ^= bit
            for u, w in combinations(candidates, 2):
                if (u, w) in tried:
                    continue
                tried.add((u, w))
                result = extend(tuple(sorted(pairs + ((u, w),))), used | (1 << u) | (1 << w))
                if result is not None:
                    return result
        return None

    found = extend(tuple(sorted(seed)), used)
    if found is not None:
        return found, PairSystemCheck(PairSystemKind.PAIRING)
    # no pairing within budget: retest dead-end systems for quasi-pairing
    for pairs in visited:
        check = check_pair_system(dm, k, PairSystem(pairs=pairs))
        if check.kind is PairSystemKind.QUASI_PAIRING:
            return PairSystem(pairs=pairs), check
    return None


@dataclass(frozen=True)
class GapProfile:
    """Landmark positions on a cycle and the runs of free vertices between them."""

    n: int
    landmarks: tuple[int, ...]
    gaps: tuple[int, ...]

    @classmethod
    def from_landmarks(cls, n: int, landmarks: Iterable[int]) -> "GapProfile":
        marks = tuple(sorted(set(landmarks)))
        if not marks:
            raise ValueError("gap profile needs at least one landmark")
        if marks[0] < 0 or marks[-1] >= n:
            raise ValueError(f"landmarks outside 0..{n - 1}: {marks}")
        gaps = []
        for i, u in enumerate(marks):
            nxt = marks[(i + 1) % len(marks)]
            gaps.append((nxt - u - 1) % n if len(marks) > 1 else n - 1)
        return cls(n=n, landmarks=marks, gaps=tuple(gaps))


def cycle_gap_check(gp: GapProfile, k: int) -> bool:
    """Sufficient gap conditions for a landmark set to resolve a cycle.

    (1) every gap holds at most 2k+1 vertices and at most one gap holds
    exactly 2k+1; (2) a gap holding at least k+1 vertices has neighboring
    gaps holding at most k.  One-directional: False does not imply
    non-resolving.
    """
    if k < 1:
        raise ValueError(f"truncation parameter k must be >= 1, got {k}")
    if gp.n < 2 * k + 3:
        raise CycleTooSmallError(f"gap conditions need n >= {2 * k + 3}, got n={gp.n}")
    big = 2 * k + 1
    if any(g > big for g in gp.gaps):
        return False
    if sum(1 for g in gp.gaps if g == big) > 1:
        return False
    r = len(gp.gaps)
    for i, g in enumerate(gp.gaps):
        if g >= k + 1:
            left = gp.gaps[(i - 1) % r] if r > 1 else g
            right = gp.gaps[(i + 1) % r] if r > 1 else g
            if left > k or right > k:
                return False
    return True
