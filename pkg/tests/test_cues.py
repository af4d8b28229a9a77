import random

from pocketpipes import cube as C, cues as Q, solver as S
from pocketpipes.cube import Move, SOLVED

def _render(state):
    return {o.face: o.cells for o in C.render_stickers(state)}


class TestLayerCueRule:
    def test_u_cw_worked_example(self):
        cue = Q.layer_cue(Move("U", C.CW))
        assert cue.face == "U" and cue.direction == "cw"
        assert cue.character_cell == ("F", 1)
        assert cue.target_cell == ("L", 1)

    def test_u_ccw_flows_the_other_way(self):
        cue = Q.layer_cue(Move("U", C.CCW))
        assert cue.character_cell == ("F", 0)
        assert cue.target_cell == ("R", 0)

    def test_f_turn_keeps_cue_on_front_face(self):
        cue = Q.layer_cue(Move("F", C.CW))
        assert cue.character_cell[0] == "F" and cue.target_cell[0] == "F"

    def test_b_turn_uses_top_face(self):
        cue = Q.layer_cue(Move("B", C.CW))
        assert cue.character_cell[0] == "U"

    def test_cells_lie_in_moving_layer(self):
        for move in C.ALL_LAYER_TURNS:
            cue = Q.layer_cue(move)
            layer_cells = {
                fc
                for slot in Q.LAYER_SLOTS[move.target]
                for fc in C.CORNER_FACELETS[slot]
            }
            assert cue.character_cell in layer_cells
            assert cue.target_cell in layer_cells

    def test_faithful_for_all_moves_and_poses(self):
        rng = random.Random(2)
        for move in C.CANONICAL_MOVES:
            for pose in range(24):
                phys = C.physical_turn(move, pose)
                cue = Q.layer_cue(phys)
                for _ in range(3):
                    lab = C.apply_moves(
                        C.random_state(rng), C.ROTATION_MOVES[rng.randrange(24)]
                    )
                    before = _render(lab)
                    after = _render(C.apply_move(lab, phys))
                    cf, ci = cue.character_cell
                    tf, ti = cue.target_cell
                    assert after[tf][ti] == before[cf][ci]


class TestNextCue:
    def test_past_end_is_no_cue(self):
        plan = S.Plan((Move("U", C.CW),))
        assert isinstance(Q.next_cue(plan, 1, 0), Q.NoCue)

    def test_checkpoint_cue_at_checkpoint_index(self):
        plan = S.Plan((Move("U", C.CW),), (S.PlanCheckpoint(1, S.PHASE1),))
        cue = Q.next_cue(plan, 1, 0)
        assert cue == Q.CheckpointCue(S.PHASE1)

    def test_fired_checkpoints_are_skipped(self):
        plan = S.Plan(
            (Move("U", C.CW), Move("R", C.CW)),
            (S.PlanCheckpoint(1, S.PHASE1),),
        )
        cue = Q.next_cue(plan, 1, 0, fired=frozenset({S.PHASE1}))
        assert isinstance(cue, Q.LayerCue)
        assert cue.face == "R"

    def test_rotation_step_gives_whole_cube_cue(self):
        pres = S.ergonomize(S.Plan((Move("R", C.CW),)))
        rot = pres.steps[0].move
        plan = S.Plan((rot, Move("U", C.CW)))
        cue = Q.next_cue(plan, 0, 0)
        assert cue == Q.WholeCubeCue(rot.target, "cw" if rot.amount == 1 else
                                     "half" if rot.amount == 2 else "ccw")

    def test_pose_changes_the_rendered_face(self):
        plan = S.Plan((Move("U", C.CW),))
        cue_identity = Q.next_cue(plan, 0, 0)
        assert cue_identity.face == "U"
        # some pose maps the canonical U layer to a different physical face
        faces = {Q.next_cue(plan, 0, pose).face for pose in range(24)}
        assert faces == set(C.FACES)


class TestCueJson:
    def test_layer_schema(self):
        doc = Q.cue_to_json(Q.layer_cue(Move("U", C.CW)))
        assert doc == {
            "type": "layer",
            "face": "U",
            "dir": "cw",
            "character": ["F", 1],
            "target": ["L", 1],
        }

    def test_cube_schema(self):
        doc = Q.cue_to_json(Q.WholeCubeCue("z", "cw"))
        assert doc == {"type": "cube", "axis": "z", "dir": "cw"}

    def test_checkpoint_schema(self):
        assert Q.cue_to_json(Q.CheckpointCue("phase1")) == {
            "type": "checkpoint",
            "which": "phase1",
        }

    def test_none_schema(self):
        assert Q.cue_to_json(Q.NoCue()) == {"type": "none"}


class TestObserve:
    policy = Q.DeviationPolicy(max_incorrect=3)

    def test_on_plan(self):
        rng = random.Random(4)
        state = C.random_state(rng)
        plan = S.solve_full(state)
        expected = C.apply_move(state, plan.moves[0])
        result = Q.observe(state, expected, expected, self.policy, 0, plan=plan)
        assert result == Q.OnPlan(1)

    def test_no_change(self):
        rng = random.Random(5)
        state = C.random_state(rng)
        plan = S.solve_full(state)
        expected = C.apply_move(state, plan.moves[0])
        result = Q.observe(state, expected, state, self.policy, 0, plan=plan)
        assert isinstance(result, Q.NoChange)

    def test_fast_forward_two_steps(self):
        rng = random.Random(6)
        state = C.random_state(rng)
        plan = S.solve_full(state)
        expected = C.apply_move(state, plan.moves[0])
        ahead = C.apply_moves(state, plan.moves[:2])
        result = Q.observe(state, expected, ahead, self.policy, 0, plan=plan)
        assert result == Q.OnPlan(2)

    def test_single_deviation_is_replanned(self):
        rng = random.Random(7)
        state = C.random_state(rng)
        plan = S.solve_full(state)
        planned = plan.moves[0]
        expected = C.apply_move(state, planned)
        wrong = next(
            m for m in C.CANONICAL_MOVES if C.apply_move(state, m) != expected
        )
        observed = C.apply_move(state, wrong)
        result = Q.observe(state, expected, observed, self.policy, 0,
                           phase=S.PHASE1)
        assert isinstance(result, Q.SingleDeviation)
        assert result.detected_move == wrong
        assert C.apply_moves(observed, result.new_plan.moves) == SOLVED

    def test_budget_exceeded_becomes_multi(self):
        rng = random.Random(8)
        state = C.random_state(rng)
        plan = S.solve_full(state)
        expected = C.apply_move(state, plan.moves[0])
        wrong = next(
            m for m in C.CANONICAL_MOVES if C.apply_move(state, m) != expected
        )
        observed = C.apply_move(state, wrong)
        result = Q.observe(state, expected, observed, self.policy, 3)
        assert isinstance(result, Q.MultiDeviation)

    def test_detection_complete_over_all_single_moves(self):
        rng = random.Random(9)
        for _ in range(40):
            state = C.random_state(rng)
            plan = S.solve_full(state)
            if not plan.moves:
                continue
            expected = C.apply_move(state, plan.moves[0])
            for move in C.CANONICAL_MOVES:
                observed = C.apply_move(state, move)
                if observed == expected:
                    continue
                result = Q.observe(
                    state, expected, observed,
                    Q.DeviationPolicy(max_incorrect=99), 0,
                )
                assert isinstance(result, Q.SingleDeviation), (state, move)

    def test_composite_outside_neighbourhood_is_multi(self):
        rng = random.Random(10)
        found = 0
        while found < 25:
            state = C.random_state(rng)
            m1, m2 = rng.choice(C.CANONICAL_MOVES), rng.choice(C.CANONICAL_MOVES)
            composite = C.apply_move(C.apply_move(state, m1), m2)
            neighbourhood = {C.apply_move(state, m) for m in C.CANONICAL_MOVES}
            if composite in neighbourhood or composite == state:
                continue
            found += 1
            plan = S.solve_full(state)
            expected = (
                C.apply_move(state, plan.moves[0]) if plan.moves else state
            )
            result = Q.observe(state, expected, composite, self.policy, 0)
            assert isinstance(result, Q.MultiDeviation)


class TestReplan:
    def test_at_goal_gives_empty_plan(self):
        state = C.apply_move(SOLVED, Move("U", C.CW))
        plan = Q.replan(SOLVED, S.PHASE1)
        assert plan.moves == ()
        plan = Q.replan(state, "phase2")
        assert plan.moves == (Move("U", C.CCW),)

    def test_phase2_replan_after_broken_bottom_layer(self):
        # a phase-2 error that disturbs the bottom layer falls back to a
        # full two-checkpoint plan
        state = C.apply_move(SOLVED, Move("R", C.CW))
        plan = Q.replan(state, "phase2")
        assert C.apply_moves(state, plan.moves) == SOLVED

    def test_wrong_move_costs_at_most_two_vs_oracle(self, oracle):
        rng = random.Random(11)
        for _ in range(100):
            state = C.random_state(rng)
            plan = S.solve_full(state)
            if not plan.moves:
                continue
            expected = C.apply_move(state, plan.moves[0])
            wrong = rng.choice(
                [m for m in C.CANONICAL_MOVES
                 if C.apply_move(state, m) != expected]
            )
            observed = C.apply_move(state, wrong)
            for goal in ("solved", "phase1"):
                d_exp = oracle.oracle_distance(expected, goal)
                d_obs = oracle.oracle_distance(observed, goal)
                assert d_obs <= d_exp + 2

    def test_replanned_plans_reach_goal(self):
        rng = random.Random(12)
        for _ in range(100):
            state = C.random_state(rng)
            wrong = rng.choice(C.CANONICAL_MOVES)
            observed = C.apply_move(state, wrong)
            plan = Q.replan(observed, S.PHASE1)
            assert C.apply_moves(observed, plan.moves) == SOLVED
