"""Exhaustive solver for the Maker-Breaker distance-k resolving game.

Maker and Breaker alternately claim unclaimed vertices; Maker wins once his
vertices form a distance-k resolving set, Breaker wins by preventing that
forever.  Both win conditions reduce to the inclusion-minimal pair-resolver
masks: Maker wins iff his set hits every mask, Breaker has won for good iff
she owns some mask outright.

The search is a memoized boolean minimax over (maker, breaker) bitmask pairs;
the side to move is derived from the claim counts, so the transposition key
needs no turn bit.  Move generation restricts to vertices of still-unhit
masks (claiming anything else helps neither side); move-count search iterates
every legal move, with the winner restricted to win-preserving moves and the
loser free to maximize delay.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, IntEnum

from .errors import CountUndefinedError, SizeCapError
from .graph import DistanceMatrix, Graph, twin_partition
from .resolve import (
    DEFAULT_SIZE_CAP,
    PairSystem,
    PairSystemKind,
    metric_dimension_k,
    minimal_pair_masks,
    search_pair_system,
)

DEFAULT_TT_LIMIT = 8_000_000


class Player(Enum):
    MAKER = "Maker"
    BREAKER = "Breaker"


class OutcomeSymbol(IntEnum):
    B = -1
    N = 0
    M = 1

    @property
    def letter(self) -> str:
        return self.name


@dataclass(frozen=True)
class GamePosition:
    """Disjoint claimed-vertex sets plus the player who moved first."""

    maker_set: frozenset[int]
    breaker_set: frozenset[int]
    first_player: Player = Player.MAKER

    def __post_init__(self):
        overlap = self.maker_set & self.breaker_set
        if overlap:
            raise ValueError(f"maker and breaker sets overlap: {sorted(overlap)}")

    @property
    def player_to_move(self) -> Player:
        # no skipped turns: the first player is on move again whenever the
        # claim counts are equal
        a, b = len(self.maker_set), len(self.breaker_set)
        if self.first_player is Player.MAKER:
            return Player.MAKER if a == b else Player.BREAKER
        return Player.BREAKER if a == b else Player.MAKER

    def validate_reachable(self) -> None:
        a, b = len(self.maker_set), len(self.breaker_set)
        diff = a - b if self.first_player is Player.MAKER else b - a
        if diff not in (0, 1):
            raise ValueError(
                f"position unreachable with {self.first_player.value} moving first: |maker|={a}, |breaker|={b}"
            )


@dataclass(frozen=True)
class GameOutcome:
    """Winners of both games and the combined symbol (B < N < M)."""

    symbol: OutcomeSymbol
    m_game_winner: Player
    b_game_winner: Player


@dataclass(frozen=True)
class MoveCounts:
    """Optimal winner move counts; a field is None when that side loses that game."""

    mrk: int | None = None
    mprime_rk: int | None = None
    brk: int | None = None
    bprime_rk: int | None = None
    nrk: int | None = None
    nprime_rk: int | None = None

    def require(self, name: str) -> int:
        value = getattr(self, name)
        if value is None:
            raise CountUndefinedError(f"move count {name!r} is undefined for this outcome")
        return value

    def defined(self) -> dict[str, int]:
        return {
            name: value
            for name in ("mrk", "mprime_rk", "brk", "bprime_rk", "nrk", "nprime_rk")
            if (value := getattr(self, name)) is not None
        }


@dataclass(frozen=True)
class JumpReport:
    """Outcome per truncation level and the transitions between levels."""

    outcomes: tuple[tuple[int, GameOutcome], ...]
    jumps: tuple[tuple[int, OutcomeSymbol, OutcomeSymbol], ...]

    def outcome_at(self, k: int) -> GameOutcome:
        for kk, out in self.outcomes:
            if kk == k:
                return out
        raise KeyError(k)


class CertificateKind(Enum):
    FORCED_B = "forcedB"
    M_CERTIFIED = "Mcertified"
    M_OR_N = "MorN"


@dataclass(frozen=True)
class Certificate:
    """Outcome bound established without game search; never replaces the solver."""

    kind: CertificateKind
    reason: str
    pair_system: PairSystem | None = None
    witnesses: tuple[int, ...] = ()

    @property
    def allowed_symbols(self) -> frozenset[OutcomeSymbol]:
        if self.kind is CertificateKind.FORCED_B:
            return frozenset({OutcomeSymbol.B})
        if self.kind is CertificateKind.M_CERTIFIED:
            return frozenset({OutcomeSymbol.M})
        return frozenset({OutcomeSymbol.M, OutcomeSymbol.N})


@dataclass
class SolverStats:
    nodes: int = 0
    tt_entries: int = 0
    count_nodes: int = 0


class GameSolver:
    """Solves both games on one (graph, k); reusable across winner/count queries."""

    def __init__(
        self,
        graph: Graph,
        dm: DistanceMatrix,
        k: int,
        *,
        size_cap: int | None = None,
        tt_limit: int | None = None,
        move_order: tuple[int, ...] | None = None,
        automorphisms: tuple[tuple[int, ...], ...] | None = None,
        use_symmetry: bool = False,
    ):
        cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
        if graph.n > cap:
            raise SizeCapError(graph.n, cap)
        self.graph = graph
        self.dm = dm
        self.k = k
        self.n = graph.n
        self.full = (1 << graph.n) - 1
        self.masks = minimal_pair_masks(dm, k)
        self._tt_limit = DEFAULT_TT_LIMIT if tt_limit is None else tt_limit
        self._order_bits = self._build_order(move_order)
        self._group = self._close_group(automorphisms) if (use_symmetry and automorphisms) else None
        self._win_memo: dict[bool, dict[int, bool]] = {True: {}, False: {}}
        self._searchers: dict[bool, object] = {}
        self.stats = SolverStats()

    # -- setup ---------------------------------------------------------

    def _build_order(self, move_order) -> tuple[int, ...]:
        if move_order is not None:
            if sorted(move_order) != list(range(self.n)):
                raise ValueError("move_order must be a permutation of all vertices")
            return tuple(1 << v for v in move_order)
        tp = twin_partition(self.graph)
        class_size = {}
        for cls in tp.classes:
            for v in cls:
                class_size[v] = len(cls)
        verts = sorted(range(self.n), key=lambda v: (-class_size[v], -self.graph.degree(v), v))
        return tuple(1 << v for v in verts)

    def _close_group(self, generators) -> tuple[tuple[int, ...], ...]:
        identity = tuple(range(self.n))
        for p in generators:
            if sorted(p) != list(identity):
                raise ValueError(f"not a permutation: {p}")
        perms = {identity}
        frontier = [tuple(p) for p in generators]
        while frontier:
            p = frontier.pop()
            if p in perms:
                continue
            perms.add(p)
            for q in list(perms):
                frontier.append(tuple(p[q[i]] for i in range(self.n)))
                frontier.append(tuple(q[p[i]] for i in range(self.n)))
            if len(perms) > 4096:
                raise ValueError("automorphism group too large for canonicalization")
        return tuple(sorted(perms))

    @staticmethod
    def _apply_perm(perm: tuple[int, ...], mask: int) -> int:
        out = 0
        while mask:
            bit = mask & -mask
            out |= 1 << perm[bit.bit_length() - 1]
            mask ^= bit
        return out

    # -- terminal tests --------------------------------------------------

    def maker_done(self, maker: int) -> bool:
        """maker already owns a resolving set."""
        for m in self.masks:
            if not m & maker:
                return False
        return True

    def breaker_done(self, maker: int, breaker: int) -> bool:
        """some pair can never be resolved by maker's future claims."""
        for m in self.masks:
            if not m & ~breaker:
                return True
        return False

    # -- winner search ---------------------------------------------------

    def _searcher(self, maker_first: bool):
        cached = self._searchers.get(maker_first)
        if cached is not None:
            return cached
        masks = self.masks
        memo = self._win_memo[maker_first]
        tt_limit = self._tt_limit
        order_bits = self._order_bits
        n = self.n
        group = self._group
        apply_perm = self._apply_perm
        stats = self.stats

        def search(maker: int, breaker: int, maker_to_move: bool) -> bool:
            live = 0
            not_breaker = ~breaker
            for m in masks:
                if not m & maker:
                    rest = m & not_breaker
                    if not rest:
                        return False  # breaker owns this mask outright
                    live |= rest
            if not live:
                return True  # every mask hit: maker's set resolves
            if group is None:
                key = (maker << n) | breaker
            else:
                key = min((apply_perm(p, maker) << n) | apply_perm(p, breaker) for p in group)
            hit = memo.get(key)
            if hit is not None:
                return hit
            stats.nodes += 1
            if maker_to_move:
                result = False
                for bit in order_bits:
                    if bit & live and search(maker | bit, breaker, False):
                        result = True
                        break
            else:
                result = True
                for bit in order_bits:
                    if bit & live and not search(maker, breaker | bit, True):
                        result = False
                        break
            if len(memo) < tt_limit:
                memo[key] = result
            return result

        self._searchers[maker_first] = search
        return search

    def maker_wins(self, maker: int, breaker: int, maker_to_move: bool, maker_first: bool) -> bool:
        result = self._searcher(maker_first)(maker, breaker, maker_to_move)
        self.stats.tt_entries = sum(len(t) for t in self._win_memo.values())
        return result

    # -- public queries ----------------------------------------------------

    def winner(self, position: GamePosition) -> Player:
        position.validate_reachable()
        for v in position.maker_set | position.breaker_set:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        maker = sum(1 << v for v in position.maker_set)
        breaker = sum(1 << v for v in position.breaker_set)
        maker_first = position.first_player is Player.MAKER
        to_move = position.player_to_move is Player.MAKER
        wins = self.maker_wins(maker, breaker, to_move, maker_first)
        return Player.MAKER if wins else Player.BREAKER

    def outcome(self) -> GameOutcome:
        m_winner = Player.MAKER if self.maker_wins(0, 0, True, True) else Player.BREAKER
        b_winner = Player.MAKER if self.maker_wins(0, 0, False, False) else Player.BREAKER
        # an extra move never hurts: Maker winning the B-game wins the M-game,
        # Breaker winning the M-game wins the B-game
        assert not (m_winner is Player.BREAKER and b_winner is Player.MAKER), (
            "impossible outcome combination: second-player-only Maker win"
        )
        if m_winner is Player.MAKER and b_winner is Player.MAKER:
            symbol = OutcomeSymbol.M
        elif m_winner is Player.BREAKER:
            symbol = OutcomeSymbol.B
        else:
            symbol = OutcomeSymbol.N
        return GameOutcome(symbol=symbol, m_game_winner=m_winner, b_game_winner=b_winner)

    def winner_move_count(self, maker_first: bool) -> int:
        """Winner's optimal move count for one game (winner fastest, loser stalling)."""
        count_for_maker = self.maker_wins(0, 0, maker_first, maker_first)
        memo: dict[int, int] = {}
        full = self.full
        n = self.n
        group = self._group
        apply_perm = self._apply_perm
        order_bits = self._order_bits
        stats = self.stats

        def count(maker: int, breaker: int, maker_to_move: bool) -> int:
            if count_for_maker:
                if self.maker_done(maker):
                    return 0
            elif self.breaker_done(maker, breaker):
                return 0
            if group is None:
                key = (maker << n) | breaker
            else:
                key = min((apply_perm(p, maker) << n) | apply_perm(p, breaker) for p in group)
            hit = memo.get(key)
            if hit is not None:
                return hit
            stats.count_nodes += 1
            free = full & ~(maker | breaker)
            assert free, "non-terminal count position must have moves"
            if maker_to_move == count_for_maker:
                best = None
                for bit in order_bits:
                    if not bit & free:
                        continue
                    nm, nb = (maker | bit, breaker) if maker_to_move else (maker, breaker | bit)
                    if self.maker_wins(nm, nb, not maker_to_move, maker_first) == count_for_maker:
                        c = count(nm, nb, not maker_to_move) + 1
                        if best is None or c < best:
                            best = c
                assert best is not None, "winner must have a win-preserving move"
                result = best
            else:
                worst = 0
                for bit in order_bits:
                    if not bit & free:
                        continue
                    nm, nb = (maker | bit, breaker) if maker_to_move else (maker, breaker | bit)
                    c = count(nm, nb, not maker_to_move)
                    if c > worst:
                        worst = c
                result = worst
            memo[key] = result
            return result

        return count(0, 0, maker_first)

    def move_counts(self, out: GameOutcome | None = None) -> MoveCounts:
        actual = self.outcome()
        if out is not None and out != actual:
            raise ValueError(f"supplied outcome {out} disagrees with solver outcome {actual}")
        m_count = self.winner_move_count(maker_first=True)
        b_count = self.winner_move_count(maker_first=False)
        if actual.symbol is OutcomeSymbol.M:
            return MoveCounts(mrk=m_count, mprime_rk=b_count)
        if actual.symbol is OutcomeSymbol.B:
            return MoveCounts(brk=m_count, bprime_rk=b_count)
        return MoveCounts(nrk=m_count, nprime_rk=b_count)


# -- module-level operations ------------------------------------------------


def winner(graph: Graph, dm: DistanceMatrix, k: int, position: GamePosition, **solver_kwargs) -> Player:
    return GameSolver(graph, dm, k, **solver_kwargs).winner(position)


def outcome(graph: Graph, dm: DistanceMatrix, k: int, **solver_kwargs) -> GameOutcome:
    return GameSolver(graph, dm, k, **solver_kwargs).outcome()


def move_counts(graph: Graph, dm: DistanceMatrix, k: int, out: GameOutcome | None = None, **solver_kwargs) -> MoveCounts:
    return GameSolver(graph, dm, k, **solver_kwargs).move_counts(out)


def jump_report(graph: Graph, dm: DistanceMatrix, **solver_kwargs) -> JumpReport:
    """Outcomes for every truncation level up to stabilization, with transitions.

    Truncation levels run 1..diameter-1; diameters 1 and 2 yield the single
    trivial level k=1.  Nothing is reused across levels: truncation changes
    the resolving predicate itself.
    """
    top = max(1, dm.diameter - 1)
    outcomes = []
    for k in range(1, top + 1):
        outcomes.append((k, GameSolver(graph, dm, k, **solver_kwargs).outcome()))
    jumps = []
    for (_, prev), (k, cur) in zip(outcomes, outcomes[1:]):
        if prev.symbol != cur.symbol:
            assert prev.symbol < cur.symbol, "outcome must be non-decreasing in k"
            jumps.append((k, prev.symbol, cur.symbol))
    assert len(jumps) <= 2, "a graph has at most two outcome transitions"
    if any(a is OutcomeSymbol.B and b is OutcomeSymbol.M for _, a, b in jumps):
        assert len(jumps) == 1, "a B-to-M transition excludes any other"
    return JumpReport(outcomes=tuple(outcomes), jumps=tuple(jumps))


def certificate_fast_path(
    graph: Graph,
    dm: DistanceMatrix,
    k: int,
    *,
    size_cap: int | None = None,
    search_budget: int = 400,
) -> Certificate | None:
    """Cheap structural outcome bounds; used to cross-check the solver."""
    tp = twin_partition(graph)
    big = tp.classes_of_size(4)
    if big:
        return Certificate(
            kind=CertificateKind.FORCED_B,
            reason=f"twin class of size {len(big[0])}: {list(big[0])}",
        )
    threes = tp.classes_of_size(3)
    if len(threes) >= 2:
        return Certificate(
            kind=CertificateKind.FORCED_B,
            reason=f"two twin classes of size >= 3: {list(threes[0])}, {list(threes[1])}",
        )
    dim = metric_dimension_k(dm, k, size_cap=size_cap).value
    if dim >= math.ceil(graph.n / 2) + 1:
        return Certificate(
            kind=CertificateKind.FORCED_B,
            reason=f"dimension {dim} exceeds half the order ({graph.n})",
        )
    found = search_pair_system(dm, k, budget=search_budget)
    if found is not None:
        system, check = found
        if check.kind is PairSystemKind.PAIRING:
            return Certificate(
                kind=CertificateKind.M_CERTIFIED,
                reason=f"pairing system of {len(system.pairs)} pairs",
                pair_system=system,
            )
        return Certificate(
            kind=CertificateKind.M_OR_N,
            reason=f"quasi-pairing system of {len(system.pairs)} pairs",
            pair_system=system,
            witnesses=check.witnesses,
        )
    return None
