import copy
import json
import random
from dataclasses import replace

import pytest

from pocketpipes import cube as C, session as SS, sim, terrain as T
from pocketpipes.errors import (
    CorruptLog,
    InvalidConfig,
    NotInInventory,
    ScanRejected,
    SchemaVersionMismatch,
    SessionOver,
    WrongMode,
)
from pocketpipes.session import (
    EnterPortalAction,
    GameConfig,
    GameSession,
    MoveAction,
    load,
    replay,
)


def scan_of(state):
    return C.render_stickers(state)


def session_at_portal(seed=3):
    """Fresh session walked onto a spawned portal."""
    session = GameSession(SS.DEFAULT_CONFIG, session_id="s", seed=seed)
    bot = sim._Bot(session, sim.BotPolicy("perfect"), random.Random(seed))
    while session.view()["terrain"]["portal"] is None:
        bot._wander()
    bot._walk_to(tuple(session.view()["terrain"]["portal"]))
    return session, bot


class TestCreate:
    def test_default_session(self):
        session = GameSession(SS.DEFAULT_CONFIG)
        assert session.mode == SS.TERRAIN_MODE
        assert session.outcome == T.IN_PROGRESS
        assert session.terrain.inventory == ()
        assert session.terrain.portal is None

    def test_invalid_config_rejected(self):
        bad = replace(
            SS.DEFAULT_CONFIG,
            terrain=replace(SS.DEFAULT_CONFIG.terrain, houses=((6, 4), (9, 4))),
        )
        with pytest.raises(InvalidConfig):
            GameSession(bad)

    def test_same_config_and_seed_identical(self):
        a = GameSession(SS.DEFAULT_CONFIG, session_id="x", seed=5)
        b = GameSession(SS.DEFAULT_CONFIG, session_id="x", seed=5)
        assert a.save_json() == b.save_json()

    def test_config_text_round_trip(self):
        text = SS.DEFAULT_CONFIG.to_text()
        assert GameConfig.from_text(text) == SS.DEFAULT_CONFIG


class TestScan:
    def test_solved_scan_at_start_grants_everything(self):
        session = GameSession(SS.DEFAULT_CONFIG, seed=1)
        session.submit_scan(scan_of(C.SOLVED))
        assert session.cube_done and session.phase1_done
        inv = dict(session.terrain.inventory)
        assert inv["money"] == 20 and inv["fence"] == 4 and inv["clock"] == 4
        # cube mode never required: portals never spawn
        for _ in range(30):
            session.submit_terrain_action(
                MoveAction("E" if session.terrain.character[0] < 4 else "W")
            )
        assert session.terrain.portal is None

    def test_semi_solved_scan_at_start_grants_bottom(self):
        session = GameSession(SS.DEFAULT_CONFIG, seed=1)
        session.submit_scan(scan_of(C.apply_move(C.SOLVED, C.Move("U", C.CW))))
        assert session.phase1_done and not session.cube_done
        assert dict(session.terrain.inventory)["fence"] == 4

    def test_scrambled_scan_at_start_rejected_without_side_effects(self):
        session = GameSession(SS.DEFAULT_CONFIG, seed=1)
        scrambled = C.apply_move(C.SOLVED, C.Move("R", C.CW))
        before = session.save_json()
        with pytest.raises(ScanRejected):
            session.submit_scan(scan_of(scrambled))
        assert session.save_json() == before

    def test_double_scan_rejected(self):
        session = GameSession(SS.DEFAULT_CONFIG, seed=1)
        session.submit_scan(scan_of(C.SOLVED))
        with pytest.raises(WrongMode):
            session.submit_scan(scan_of(C.SOLVED))

    def test_scrambled_scan_in_cube_mode_yields_plan_and_cue(self):
        session, bot = session_at_portal()
        session.submit_terrain_action(EnterPortalAction())
        assert session.mode == SS.CUBE_MODE
        session.submit_scan(scan_of(bot.lab_cube))
        assert session.plan is not None and len(session.plan.moves) > 0
        assert session.view()["cue"]["type"] in ("layer", "checkpoint")

    def test_bad_scan_surfaces_decode_error(self):
        session, _ = session_at_portal()
        session.submit_terrain_action(EnterPortalAction())
        obs = scan_of(C.SOLVED)[:-1]
        before = session.save_json()
        with pytest.raises(Exception) as exc:
            session.submit_scan(obs)
        assert exc.value.code == "MissingFace"
        assert session.save_json() == before


class TestPortalEntry:
    def test_entry_requires_standing_on_portal(self):
        session = GameSession(SS.DEFAULT_CONFIG, seed=3)
        with pytest.raises(WrongMode):
            session.submit_terrain_action(EnterPortalAction())

    def test_first_entry_free_second_costs_key(self):
        session, bot = session_at_portal()
        session.submit_terrain_action(EnterPortalAction())  # free
        assert session.mode == SS.CUBE_MODE
        assert session.terrain.portal is None
        # finish phase 1 via the bot, transporting back to terrain
        bot._cube_round()
        assert session.mode == SS.TERRAIN_MODE
        keys = session.terrain.count("key")
        assert keys == 2
        while session.view()["terrain"]["portal"] is None:
            bot._wander()
        bot._walk_to(tuple(session.view()["terrain"]["portal"]))
        session.submit_terrain_action(EnterPortalAction())
        assert session.terrain.count("key") == keys - 1

    def test_entry_without_key_blocked(self):
        session, bot = session_at_portal()
        session.cube_entries = 1  # pretend the free entry was used
        with pytest.raises(NotInInventory):
            session.submit_terrain_action(EnterPortalAction())


class TestCubeFlow:
    def test_on_plan_advances_and_cues(self):
        session, bot = session_at_portal()
        session.submit_terrain_action(EnterPortalAction())
        session.submit_scan(scan_of(bot.lab_cube))
        move = session.plan.moves[0]
        lab_next = C.apply_move(bot.lab_cube, C.physical_turn(move, session.pose))
        result = session.submit_cube_state(observed=lab_next)
        assert result["result"] == "on_plan"
        assert session.cursor == 1
        assert session.events[-1].kind == "cue"

    def test_move_token_equivalent_to_state(self):
        session, bot = session_at_portal()
        session.submit_terrain_action(EnterPortalAction())
        session.submit_scan(scan_of(bot.lab_cube))
        move = session.plan.moves[0]
        phys = C.physical_turn(move, session.pose)
        result = session.submit_cube_state(move=phys.notation())
        assert result["result"] == "on_plan"

    def test_pure_reorientation_is_no_change(self):
        session, bot = session_at_portal()
        session.submit_terrain_action(EnterPortalAction())
        session.submit_scan(scan_of(bot.lab_cube))
        rotated = C.apply_move(bot.lab_cube, C.Move("y", C.CW))
        result = session.submit_cube_state(observed=rotated)
        assert result["result"] == "no_change"
        # the cue now refers to the new physical pose
        assert session.pose == C.canonical_pose(rotated)[1]

    def test_wrong_move_emits_deviation_and_replans(self):
        session, bot = session_at_portal()
        session.submit_terrain_action(EnterPortalAction())
        session.submit_scan(scan_of(bot.lab_cube))
        expected = C.apply_move(session.cube_state, session.plan.moves[0])
        wrong = next(
            m for m in C.CANONICAL_MOVES
            if C.apply_move(session.cube_state, m) != expected
        )
        lab_wrong = C.apply_move(
            bot.lab_cube, C.physical_turn(wrong, session.pose)
        )
        result = session.submit_cube_state(observed=lab_wrong)
        assert result["result"] == "deviation"
        assert session.deviations == 1
        kinds = [e.kind for e in session.events[-3:]]
        assert kinds == ["move", "deviation", "cue"]

    def test_budget_exhaustion_loses(self):
        session, bot = session_at_portal()
        session.submit_terrain_action(EnterPortalAction())
        session.submit_scan(scan_of(bot.lab_cube))
        for _ in range(SS.DEFAULT_CONFIG.max_incorrect + 1):
            state = session.cube_state
            expected = (
                C.apply_move(state, session.plan.moves[0])
                if session.plan.moves
                else state
            )
            wrong = next(
                m for m in C.CANONICAL_MOVES
                if C.apply_move(state, m) != expected
            )
            lab = C.apply_moves(state, C.ROTATION_MOVES[session.pose])
            lab_wrong = C.apply_move(lab, C.physical_turn(wrong, session.pose))
            session.submit_cube_state(observed=lab_wrong)
            if session.outcome == T.LOST:
                break
        assert session.outcome == T.LOST
        assert session.outcome_reason == "cube_errors"

    def test_wrong_mode_guards(self):
        session, bot = session_at_portal()
        with pytest.raises(WrongMode):
            session.submit_cube_state(move="U")
        session.submit_terrain_action(EnterPortalAction())
        with pytest.raises(WrongMode):
            session.submit_terrain_action(MoveAction("E"))
        with pytest.raises(WrongMode):
            session.submit_cube_state(move="U")  # not scanned yet

    def test_checkpoint_transports_and_grants(self):
        session, bot = session_at_portal()
        session.submit_terrain_action(EnterPortalAction())
        bot._cube_round()
        assert session.mode == SS.TERRAIN_MODE
        assert session.phase1_done
        inv = dict(session.terrain.inventory)
        assert inv.get("fence") == 4 and inv.get("key") == 2
        checkpoints = [e for e in session.events if e.kind == "checkpoint"]
        assert checkpoints and checkpoints[-1].payload["which"] == "phase1"


class TestTerminalOutcome:
    def test_no_events_after_loss(self):
        session = GameSession(SS.DEFAULT_CONFIG, seed=2)
        bot = sim._Bot(session, sim.BotPolicy("noisy", 1.0), random.Random(1))
        bot.play()
        assert session.outcome == T.LOST
        n = len(session.events)
        for call in (
            lambda: session.submit_terrain_action(MoveAction("E")),
            lambda: session.submit_cube_state(move="U"),
            lambda: session.submit_scan(scan_of(C.SOLVED)),
        ):
            with pytest.raises(SessionOver):
                call()
        assert len(session.events) == n

    def test_won_session_is_terminal(self):
        session = GameSession(SS.DEFAULT_CONFIG, session_id="w", seed=4)
        bot = sim._Bot(session, sim.BotPolicy("perfect"), random.Random(4))
        bot.play()
        assert session.outcome == T.WON
        with pytest.raises(SessionOver):
            session.submit_terrain_action(MoveAction("E"))


class TestPersistence:
    def make_played(self, seed=6, p=0.25):
        session = GameSession(SS.DEFAULT_CONFIG, session_id="p", seed=seed)
        bot = sim._Bot(session, sim.BotPolicy("noisy", p), random.Random(seed))
        bot.play()
        return session

    def test_save_load_round_trip_mid_game(self):
        session, bot = session_at_portal()
        session.submit_terrain_action(EnterPortalAction())
        session.submit_scan(scan_of(bot.lab_cube))
        doc = json.loads(json.dumps(session.save()))
        assert load(doc).save_json() == session.save_json()

    def test_save_load_round_trip_with_deviations(self):
        session = self.make_played()
        doc = json.loads(json.dumps(session.save()))
        assert load(doc).save_json() == session.save_json()

    def test_replay_reproduces_session(self):
        session = self.make_played(seed=8, p=0.3)
        rebuilt = replay(session.events, session.config, session_id="p")
        assert rebuilt.save_json() == session.save_json()

    def test_truncated_log_is_corrupt(self):
        doc = self.make_played().save()
        doc = copy.deepcopy(doc)
        doc["events"] = doc["events"][:-1]
        with pytest.raises(CorruptLog):
            load(doc)

    def test_gap_in_seq_is_corrupt(self):
        session = self.make_played()
        events = [e.to_dict() for e in session.events]
        del events[1]
        with pytest.raises(CorruptLog):
            replay(events, session.config)

    def test_schema_version_checked(self):
        doc = self.make_played().save()
        doc["version"] = 2
        with pytest.raises(SchemaVersionMismatch):
            load(doc)


class TestFullGame:
    def test_perfect_game_ends_won(self):
        session = GameSession(SS.DEFAULT_CONFIG, session_id="g", seed=10)
        bot = sim._Bot(session, sim.BotPolicy("perfect"), random.Random(10))
        bot.play()
        assert session.outcome == T.WON
        ledger = T.compute_ledger(session.terrain)
        assert ledger.at((6, 4, 0)) == 75
        assert ledger.at((9, 4, 0)) == 60
        assert ledger.at((10, 5, 1)) == 40
        kinds = {e.kind for e in session.events}
        assert {"scan", "move", "cue", "checkpoint", "placement", "purchase",
                "portal_spawn", "outcome"} <= kinds

    def test_noisy_game_with_recovery_can_win(self):
        # deviations happen but stay within budget for this seed
        session = GameSession(SS.DEFAULT_CONFIG, session_id="n", seed=21)
        bot = sim._Bot(session, sim.BotPolicy("noisy", 0.15), random.Random(2))
        bot.play()
        assert session.outcome in (T.WON, T.LOST)
        if session.outcome == T.WON:
            assert session.deviations <= SS.DEFAULT_CONFIG.max_incorrect
