import random

import pytest

from mbresolve.errors import CountUndefinedError, SizeCapError
from mbresolve.families import FamilySpec, connected_graph_atlas, gen_family, random_connected_graph
from mbresolve.game import (
    CertificateKind,
    GamePosition,
    GameSolver,
    OutcomeSymbol,
    Player,
    certificate_fast_path,
    jump_report,
    move_counts,
    outcome,
    winner,
)
from mbresolve.graph import all_pairs_distances, build_graph
from mbresolve.resolve import PairSystemKind, check_pair_system

from oracles import naive_maker_wins, naive_outcome_symbol, naive_winner_count


def family(name, **kw):
    g = gen_family(FamilySpec.make(name, **kw)).graph
    return g, all_pairs_distances(g)


class TestWinner:
    def test_star_empty_board_maker_first_breaker_wins(self):
        g, dm = family("star", beta=4)
        pos = GamePosition(frozenset(), frozenset(), Player.MAKER)
        assert winner(g, dm, 1, pos) is Player.BREAKER

    def test_resolving_maker_set_is_terminal(self):
        g, dm = family("petersen")
        pos = GamePosition(frozenset({0, 2, 8}), frozenset({1, 3, 4}), Player.MAKER)
        assert winner(g, dm, 1, pos) is Player.MAKER

    def test_c5_breaker_first_maker_wins(self):
        g, dm = family("cycle", n=5)
        pos = GamePosition(frozenset(), frozenset(), Player.BREAKER)
        assert winner(g, dm, 1, pos) is Player.MAKER

    def test_overlapping_sets_rejected(self):
        with pytest.raises(ValueError):
            GamePosition(frozenset({1}), frozenset({1}), Player.MAKER)

    def test_unreachable_parity_rejected(self):
        g, dm = family("cycle", n=5)
        pos = GamePosition(frozenset({0, 1}), frozenset(), Player.MAKER)
        with pytest.raises(ValueError):
            winner(g, dm, 1, pos)

    def test_player_to_move_derivation(self):
        pos = GamePosition(frozenset({0}), frozenset({1}), Player.MAKER)
        assert pos.player_to_move is Player.MAKER
        pos = GamePosition(frozenset({0}), frozenset(), Player.MAKER)
        assert pos.player_to_move is Player.BREAKER
        pos = GamePosition(frozenset(), frozenset({1}), Player.BREAKER)
        assert pos.player_to_move is Player.MAKER


class TestOutcome:
    def test_petersen_maker_everywhere(self):
        g, dm = family("petersen")
        out = outcome(g, dm, 1)
        assert out.symbol is OutcomeSymbol.M
        assert out.m_game_winner is Player.MAKER and out.b_game_winner is Player.MAKER

    def test_triangle_first_player(self):
        g, dm = family("cycle", n=3)
        for k in (1, 2):
            assert outcome(g, dm, k).symbol is OutcomeSymbol.N

    def test_c9_level_one_maker(self):
        g, dm = family("cycle", n=9)
        assert outcome(g, dm, 1).symbol is OutcomeSymbol.M

    def test_size_cap_enforced(self):
        g, dm = family("path", n=8)
        with pytest.raises(SizeCapError):
            outcome(g, dm, 1, size_cap=7)

    def test_single_vertex_trivially_maker(self):
        g = build_graph(1, [])
        dm = all_pairs_distances(g)
        out = outcome(g, dm, 1)
        assert out.symbol is OutcomeSymbol.M
        assert move_counts(g, dm, 1).mrk == 0

    def test_matches_naive_oracle_on_atlas(self):
        for g in connected_graph_atlas(max_n=5, min_n=2):
            dm = all_pairs_distances(g)
            for k in range(1, max(2, dm.diameter)):
                assert int(outcome(g, dm, k).symbol) == naive_outcome_symbol(dm, k)

    def test_midgame_positions_match_naive_oracle(self):
        rng = random.Random(606)
        for _ in range(60):
            g = random_connected_graph(rng.randint(2, 5), rng.uniform(0.3, 0.8), rng)
            dm = all_pairs_distances(g)
            k = rng.randint(1, max(1, dm.diameter))
            first = rng.choice([Player.MAKER, Player.BREAKER])
            pool = list(range(g.n))
            rng.shuffle(pool)
            moves = pool[: rng.randint(0, g.n)]
            maker = frozenset(moves[0::2] if first is Player.MAKER else moves[1::2])
            breaker = frozenset(moves[1::2] if first is Player.MAKER else moves[0::2])
            pos = GamePosition(maker, breaker, first)
            got = winner(g, dm, k, pos) is Player.MAKER
            want = naive_maker_wins(dm, k, maker, breaker, pos.player_to_move is Player.MAKER)
            assert got == want, (sorted(g.edges), k, sorted(maker), sorted(breaker), first)


class TestMoveCounts:
    def test_petersen_three_everywhere(self):
        g, dm = family("petersen")
        counts = move_counts(g, dm, 1)
        assert (counts.mrk, counts.mprime_rk) == (3, 3)
        assert counts.brk is None

    def test_star_breaker_two(self):
        g, dm = family("star", beta=4)
        for k in (1, 2):
            counts = move_counts(g, dm, k)
            assert (counts.brk, counts.bprime_rk) == (2, 2)

    def test_c4_counts_equal_dimension(self):
        g, dm = family("cycle", n=4)
        counts = move_counts(g, dm, 1)
        assert (counts.mrk, counts.mprime_rk) == (2, 2)

    def test_undefined_for_loser(self):
        g, dm = family("star", beta=4)
        counts = move_counts(g, dm, 1)
        with pytest.raises(CountUndefinedError):
            counts.require("mrk")
        assert counts.require("brk") == 2

    def test_outcome_disagreement_rejected(self):
        g, dm = family("cycle", n=4)
        wrong = outcome(*family("star", beta=4), 1)
        with pytest.raises(ValueError):
            move_counts(g, dm, 1, wrong)

    def test_matches_naive_oracle_sampled(self):
        rng = random.Random(11)
        for _ in range(25):
            g = random_connected_graph(rng.randint(2, 6), rng.uniform(0.3, 0.8), rng)
            dm = all_pairs_distances(g)
            k = rng.randint(1, max(1, dm.diameter - 1))
            solver = GameSolver(g, dm, k)
            assert solver.winner_move_count(True) == naive_winner_count(dm, k, True)
            assert solver.winner_move_count(False) == naive_winner_count(dm, k, False)


class TestJumpReport:
    def test_fig1_double_jump(self):
        g, dm = family("fig1", alpha=2)
        report = jump_report(g, dm)
        assert [(k, o.symbol.letter) for k, o in report.outcomes] == [
            (1, "B"), (2, "N"), (3, "M"), (4, "M"),
        ]
        assert report.jumps == (
            (2, OutcomeSymbol.B, OutcomeSymbol.N),
            (3, OutcomeSymbol.N, OutcomeSymbol.M),
        )

    def test_thm_f_single_jump_b_to_m(self):
        g, dm = family("thm_f", alpha=4)
        report = jump_report(g, dm)
        assert report.jumps == ((2, OutcomeSymbol.B, OutcomeSymbol.M),)

    def test_petersen_single_trivial_entry(self):
        g, dm = family("petersen")
        report = jump_report(g, dm)
        assert len(report.outcomes) == 1
        assert report.outcome_at(1).symbol is OutcomeSymbol.M
        assert report.jumps == ()

    def test_diameter_one_single_entry(self):
        g, dm = family("complete", n=5)
        report = jump_report(g, dm)
        assert len(report.outcomes) == 1


class TestCertificates:
    def test_star_forced_breaker(self):
        g, dm = family("star", beta=4)
        cert = certificate_fast_path(g, dm, 1)
        assert cert is not None and cert.kind is CertificateKind.FORCED_B

    def test_thm_a_maker_certified(self):
        g, dm = family("thm_a", alpha=3)
        cert = certificate_fast_path(g, dm, 1)
        assert cert is not None and cert.kind is CertificateKind.M_CERTIFIED
        assert check_pair_system(dm, 1, cert.pair_system).kind is PairSystemKind.PAIRING

    def test_thm_b_maker_or_first(self):
        g, dm = family("thm_b", alpha=4)
        cert = certificate_fast_path(g, dm, 1)
        assert cert is not None and cert.kind is CertificateKind.M_OR_N
        assert cert.witnesses

    def test_two_triple_twin_classes_forced_breaker(self):
        g, dm = family("multipartite", parts=(3, 3))
        cert = certificate_fast_path(g, dm, 1)
        assert cert is not None and cert.kind is CertificateKind.FORCED_B

    def test_half_order_dimension_forced_breaker(self):
        g, dm = family("thm_f", alpha=4)
        cert = certificate_fast_path(g, dm, 1)
        assert cert is not None and cert.kind is CertificateKind.FORCED_B
        assert "dimension" in cert.reason

    def test_never_contradicts_solver_on_atlas(self):
        for g in connected_graph_atlas(max_n=5, min_n=2):
            dm = all_pairs_distances(g)
            for k in range(1, max(2, dm.diameter)):
                cert = certificate_fast_path(g, dm, k, search_budget=100)
                if cert is not None:
                    assert outcome(g, dm, k).symbol in cert.allowed_symbols


class TestDeterminismAndSymmetry:
    def test_move_order_does_not_change_results(self):
        rng = random.Random(23)
        for _ in range(15):
            g = random_connected_graph(rng.randint(3, 8), rng.uniform(0.3, 0.7), rng)
            dm = all_pairs_distances(g)
            k = rng.randint(1, max(1, dm.diameter - 1))
            base = GameSolver(g, dm, k)
            identity = GameSolver(g, dm, k, move_order=tuple(range(g.n)))
            reverse = GameSolver(g, dm, k, move_order=tuple(reversed(range(g.n))))
            expected = base.outcome()
            assert identity.outcome() == expected
            assert reverse.outcome() == expected
            assert (
                base.winner_move_count(True)
                == identity.winner_move_count(True)
                == reverse.winner_move_count(True)
            )

    def test_symmetry_reduction_matches_plain_search(self):
        for n in (5, 6, 7, 8):
            gg = gen_family(FamilySpec.make("cycle", n=n))
            dm = all_pairs_distances(gg.graph)
            for k in (1, 2):
                plain = GameSolver(gg.graph, dm, k)
                reduced = GameSolver(
                    gg.graph, dm, k,
                    automorphisms=gg.automorphism_generators, use_symmetry=True,
                )
                assert plain.outcome() == reduced.outcome()
                assert plain.winner_move_count(True) == reduced.winner_move_count(True)
                assert reduced.stats.nodes < plain.stats.nodes

    def test_symmetry_group_closure_size(self):
        gg = gen_family(FamilySpec.make("cycle", n=6))
        dm = all_pairs_distances(gg.graph)
        solver = GameSolver(gg.graph, dm, 1, automorphisms=gg.automorphism_generators, use_symmetry=True)
        assert len(solver._group) == 12  # dihedral group of the hexagon

    def test_repeat_solves_identical(self):
        g, dm = family("thm_e", alpha=3)
        first = outcome(g, dm, 2)
        assert all(outcome(g, dm, 2) == first for _ in range(3))
