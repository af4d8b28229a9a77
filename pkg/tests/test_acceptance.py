"""Acceptance suite: one test per release criterion, each printing a
pass line (run with ``pytest tests/test_acceptance.py -v -s``)."""

import json
import random
import time
import pytest

from pocketpipes import cube as C, cues as Q, enumeration as E
from pocketpipes import session as SS, sim, solver as S, terrain as T
from pocketpipes.errors import (
    DuplicateCubie,
    MissingFace,
    OrientationParityError,
    UnknownCubie,
)
from pocketpipes.session import GameSession, replay
from pocketpipes.sim import BotPolicy
from pocketpipes.terrain import HorizontalPlacement


def _ok(line: str):
    print(f"\nACCEPTANCE PASS - {line}")


TOTAL_STATES = 3_674_160  # 7! * 3^6


class TestEnumeration:
    def test_exhaustive_bfs_visits_every_state(self):
        t0 = time.time()
        report = E.enumerate_all()
        elapsed = time.time() - t0
        assert report.total_states == TOTAL_STATES
        assert sum(report.depth_histogram) == TOTAL_STATES
        assert report.depth_histogram[0] == 1
        assert report.diameter == 11
        assert elapsed < 120
        _ok(
            f"enumeration: {report.total_states} states, diameter "
            f"{report.diameter}, {elapsed:.1f}s"
        )


class TestSolverOptimality:
    def test_phase_lengths_equal_oracle_distances(self, oracle, warm_solver):
        rng = random.Random(1001)
        n = 500
        for _ in range(n):
            state = C.random_state(rng)
            p1 = S.solve_phase1(state)
            assert len(p1.moves) == oracle.oracle_distance(state, "phase1")
            mid = C.apply_moves(state, p1.moves)
            p2 = S.solve_phase2(mid)
            assert len(p2.moves) == oracle.oracle_distance(mid, "solved")
            assert C.apply_moves(mid, p2.moves) == C.SOLVED
        _ok(f"solver optimality: {n} random states match oracle exactly")

    def test_max_depth_states_solve_at_the_diameter(self, oracle, warm_solver):
        diameter = E.enumerate_all().diameter
        worst = E.states_at_depth(diameter, "solved", limit=64)
        assert worst
        lengths = []
        for state in worst:
            plan = S.solve_to_solved(state)
            assert C.apply_moves(state, plan.moves) == C.SOLVED
            lengths.append(len(plan.moves))
            full = S.solve_full(state)
            assert C.apply_moves(state, full.moves) == C.SOLVED
        assert max(lengths) == diameter
        assert min(lengths) == diameter  # they sit exactly at max depth
        p1_diameter = int(oracle.distance_to_phase1().max())
        hardest_p1 = E.states_at_depth(p1_diameter, "phase1", limit=64)
        assert all(
            len(S.solve_phase1(s).moves) == p1_diameter for s in hardest_p1
        )
        _ok(
            f"solver reaches the oracle diameters exactly "
            f"(solved {diameter}, bottom layer {p1_diameter})"
        )


class TestScanRoundTrip:
    def test_ten_thousand_round_trips(self):
        rng = random.Random(1002)
        n = 10_000
        for _ in range(n):
            state = C.random_state(rng)
            lab = C.apply_moves(state, C.ROTATION_MOVES[rng.randrange(24)])
            assert C.decode_scan(C.render_stickers(lab)) == lab
        _ok(f"scan round-trip: {n} random states decode exactly")

    def test_malformed_scans_rejected_with_typed_errors(self):
        obs = C.render_stickers(C.SOLVED)

        def mutate(base, face, idx, value):
            out = []
            for o in base:
                if o.face == face:
                    cells = list(o.cells)
                    cells[idx] = value
                    out.append(C.FaceObservation(face, tuple(cells)))
                else:
                    out.append(o)
            return tuple(out)

        with pytest.raises(MissingFace):
            C.decode_scan(obs[:-1])
        # impossible corner (mirrored stickers)
        bad = mutate(obs, "R", 0, C.AssetClass.BRIDGE)
        bad = mutate(bad, "F", 1, C.AssetClass.MONEY)
        with pytest.raises((UnknownCubie, OrientationParityError)):
            C.decode_scan(bad)
        # one corner twisted in place
        bad = mutate(obs, "U", 3, C.AssetClass.BRIDGE)
        bad = mutate(bad, "R", 0, C.AssetClass.CLOCK)
        bad = mutate(bad, "F", 1, C.AssetClass.MONEY)
        with pytest.raises(OrientationParityError):
            C.decode_scan(bad)
        # a corner rewritten as a copy of another
        bad = mutate(obs, "U", 1, C.AssetClass.CLOCK)
        bad = mutate(bad, "B", 0, C.AssetClass.MONEY)
        bad = mutate(bad, "R", 1, C.AssetClass.BRIDGE)
        with pytest.raises(DuplicateCubie):
            C.decode_scan(bad)
        _ok("malformed scans: unknown/duplicate/parity/missing all rejected")


class TestErrorRecovery:
    def test_single_deviations_recover(self, warm_solver):
        rng = random.Random(1003)
        policy = Q.DeviationPolicy(max_incorrect=10**9)
        n = 10_000
        for i in range(n):
            state = C.random_state(rng)
            if i % 2 == 0:
                prev, phase = state, S.PHASE1
                plan = S.solve_phase1(prev)
            else:
                mid = C.apply_moves(state, S.solve_phase1(state).moves)
                prev, phase = mid, "phase2"
                plan = S.solve_to_solved(prev)
            if not plan.moves:
                continue
            planned = plan.moves[0]
            expected = C.apply_move(prev, planned)
            wrong = rng.choice(
                [m for m in C.CANONICAL_MOVES if C.apply_move(prev, m) != expected]
            )
            observed = C.apply_move(prev, wrong)
            result = Q.observe(prev, expected, observed, policy, 0, phase=phase)
            assert isinstance(result, Q.SingleDeviation), (prev, planned, wrong)
            assert result.detected_move == wrong
            end = C.apply_moves(observed, result.new_plan.moves)
            assert C.classify(end) is C.Classification.SOLVED
        _ok(f"error recovery: {n} wrong-move triples replan to the goal")

    def test_double_moves_are_rejected(self):
        rng = random.Random(1004)
        policy = Q.DeviationPolicy(max_incorrect=10**9)
        count = 0
        while count < 1_000:
            state = C.random_state(rng)
            m1 = rng.choice(C.CANONICAL_MOVES)
            m2 = rng.choice(C.CANONICAL_MOVES)
            composite = C.apply_move(C.apply_move(state, m1), m2)
            neighbourhood = {C.apply_move(state, m) for m in C.CANONICAL_MOVES}
            expected = C.apply_move(state, m1)  # pretend m1 was planned
            if composite in neighbourhood or composite in (state, expected):
                continue
            result = Q.observe(state, expected, composite, policy, 0)
            assert isinstance(result, Q.MultiDeviation)
            count += 1
        _ok("error detection: 1000 two-move composites flagged as unrecoverable")


class TestCueFaithfulness:
    def test_all_moves_and_poses(self):
        rng = random.Random(1005)
        checked = 0
        for move in C.CANONICAL_MOVES:
            for pose in range(24):
                phys = C.physical_turn(move, pose)
                cue = Q.layer_cue(phys)
                layer_cells = {
                    fc
                    for slot in Q.LAYER_SLOTS[phys.target]
                    for fc in C.CORNER_FACELETS[slot]
                }
                assert cue.character_cell in layer_cells
                assert cue.target_cell in layer_cells
                for _ in range(5):
                    lab = C.apply_moves(
                        C.random_state(rng),
                        C.ROTATION_MOVES[rng.randrange(24)],
                    )
                    before = {o.face: o.cells for o in C.render_stickers(lab)}
                    after = {
                        o.face: o.cells
                        for o in C.render_stickers(C.apply_move(lab, phys))
                    }
                    cf, ci = cue.character_cell
                    tf, ti = cue.target_cell
                    assert after[tf][ti] == before[cf][ci]
                checked += 1
        assert checked == 9 * 24
        _ok("cue faithfulness: all 9 moves x 24 poses move the marked sticker")


class TestTerrainScenarios:
    def test_scripted_win_matches_hand_ledger(self):
        session = GameSession(SS.DEFAULT_CONFIG, session_id="win", seed=4)
        bot = sim._Bot(session, BotPolicy("perfect"), random.Random(4))
        bot.play()
        assert session.outcome == T.WON
        ledger = T.compute_ledger(session.terrain)
        # head 100, wide -5 per segment, vertical -10:
        # house 1 after 5 segments, house 2 after 8, house 3 after 10+vertical
        assert ledger.at((6, 4, 0)) == 75
        assert ledger.at((9, 4, 0)) == 60
        assert ledger.at((10, 5, 1)) == 40
        assert session.terrain.tank_fenced()
        _ok("scripted win: outcome won, house pressures 75/60/40 exact")

    def test_scripted_loss_on_exact_placement(self):
        snake = [(1, 4), (0, 4), (0, 3), (0, 2), (0, 1), (0, 0), (1, 0), (1, 1),
                 (1, 2), (1, 3), (2, 3), (2, 2), (2, 1), (2, 0), (3, 0), (4, 0),
                 (4, 1), (4, 2)]
        state = T.initial_state(SS.DEFAULT_CONFIG.terrain).add_items({"wide": 17})
        for i in range(17):
            state = T.lay_pipe(
                state, "wide", HorizontalPlacement(snake[i], snake[i + 1], 0)
            )
            expected = T.LOST if i == 16 else T.IN_PROGRESS
            assert T.check_outcome(state) == expected, f"segment {i + 1}"
        assert T.compute_ledger(state).at((4, 2, 0)) == 15
        _ok("scripted loss: pressure 15 < 20 exactly at segment 17")

    def test_replay_is_byte_exact(self):
        session = GameSession(SS.DEFAULT_CONFIG, session_id="rp", seed=4)
        bot = sim._Bot(session, BotPolicy("noisy", 0.2), random.Random(7))
        bot.play()
        rebuilt = replay(session.events, session.config, session_id="rp")
        assert rebuilt.save_json() == session.save_json()
        _ok(
            f"replay determinism: {len(session.events)} events rebuild the "
            "session byte-for-byte"
        )


class TestSimulation:
    def test_perfect_bot_wins_100_of_100(self):
        report = sim.run(BotPolicy("perfect"), SS.DEFAULT_CONFIG, seed=2000,
                         n_runs=100)
        agg = report.aggregate()
        assert agg["won"] == 100
        for result in report.runs:
            assert result.phase1_steps == result.optimal_phase1
            assert result.phase2_steps == result.optimal_phase2
            assert result.scan_steps == 6
        _ok("simulation: perfect bot won 100/100 with optimal cube steps")

    def test_noise_sweep_endpoints(self):
        points = dict(
            sim.sweep([0.0, 1.0], SS.DEFAULT_CONFIG, seed=2100, runs_per_point=10)
        )
        assert points[0.0] == 0.0
        assert points[1.0] == 1.0
        _ok("simulation: loss rate 0.0 at p=0 and 1.0 at p=1")

    def test_report_prints_reference_row(self):
        report = sim.run(BotPolicy("perfect"), SS.DEFAULT_CONFIG, seed=2200,
                         n_runs=1)
        text = sim.format_report(report)
        assert "phase1=21" in text
        assert "phase2=30" in text
        assert "pipe_laying=50" in text
        assert "scan=6" in text
        print("\n" + text)
        _ok("simulation report annotates the human reference row 21/30/50/6")
