"""Optimal two-checkpoint solver.

Plans are computed by iterative-deepening A* over cubie-placement
coordinates with admissible pruning tables (exact distances of two
abstracted sub-puzzles: the four top cubies and the three free bottom
cubies).  Checkpoint one is the solved bottom layer; checkpoint two the
full solve.  Ties between equal-length plans break lexicographically in
CANONICAL_MOVES order, so plans are reproducible.
"""

import functools
from dataclasses import dataclass

from . import coords
from .cube import (
    CANONICAL_MOVES,
    CubeState,
    Classification,
    IDENTITY_POSE,
    Move,
    ROTATION_MOVES,
    apply_moves,
    canonical_turn,
    classify,
    compose_pose,
    physical_turn,
)
from .errors import NotAtCheckpoint

PHASE1 = "phase1"
SOLVED_CHECKPOINT = "solved"

TOP_CUBIES = (0, 1, 2, 3)
BOTTOM_CUBIES = (4, 5, 7)  # cubie 6 is pinned by canonicalization

COMFORT_FACE = "U"


@dataclass(frozen=True)
class PlanCheckpoint:
    index: int  # number of moves applied when the checkpoint is reached
    which: str  # PHASE1 or SOLVED_CHECKPOINT


@dataclass(frozen=True)
class Plan:
    moves: tuple
    checkpoints: tuple = ()

    def __len__(self) -> int:
        return len(self.moves)

    def notation(self) -> str:
        marks = {cp.index: cp.which for cp in self.checkpoints}
        parts = []
        for i, move in enumerate(self.moves):
            if i in marks:
                parts.append("| P1" if marks[i] == PHASE1 else "| SOLVED")
            parts.append(move.notation())
        if len(self.moves) in marks:
            parts.append("| P1" if marks[len(self.moves)] == PHASE1 else "| SOLVED")
        # both checkpoints can sit on the same index; render phase1 first
        if (
            len(self.checkpoints) == 2
            and self.checkpoints[0].index == self.checkpoints[1].index
        ):
            idx = self.checkpoints[0].index
            parts = [m.notation() for m in self.moves[:idx]]
            parts += ["| P1", "| SOLVED"]
            parts += [m.notation() for m in self.moves[idx:]]
        return " ".join(parts)


def compose(plan_a: Plan, plan_b: Plan) -> Plan:
    shift = len(plan_a.moves)
    moved = tuple(PlanCheckpoint(cp.index + shift, cp.which) for cp in plan_b.checkpoints)
    return Plan(plan_a.moves + plan_b.moves, plan_a.checkpoints + moved)


@dataclass(frozen=True)
class PruningTable:
    """Lower bounds on distance-to-goal, one entry per abstract placement."""

    goal: str
    cubies: tuple
    index_of: dict
    distances: tuple

    def bound(self, idx: int) -> int:
        return self.distances[idx]


class _Tables:
    def __init__(self):
        self.idx_top, self.trans_top = coords.build_placement_tables(TOP_CUBIES)
        self.idx_bot, self.trans_bot = coords.build_placement_tables(BOTTOM_CUBIES)
        dist_top = coords.bfs_distances(self.trans_top, [0])
        dist_bot = coords.bfs_distances(self.trans_bot, [0])
        self.table_top = PruningTable(
            SOLVED_CHECKPOINT, TOP_CUBIES, self.idx_top, tuple(dist_top)
        )
        self.table_bot = PruningTable(
            SOLVED_CHECKPOINT, BOTTOM_CUBIES, self.idx_bot, tuple(dist_bot)
        )

    def entry(self, state: CubeState):
        a = self.idx_top[coords.placement_of(state, TOP_CUBIES)]
        b = self.idx_bot[coords.placement_of(state, BOTTOM_CUBIES)]
        return a, b


@functools.cache
def _tables() -> _Tables:
    return _Tables()


def pruning_tables():
    """The solver's pruning tables (exposed for admissibility checks)."""
    t = _tables()
    return t.table_top, t.table_bot


def _ida(a0: int, b0: int, goal_test, heuristic, trans_a, trans_b):
    """Lexicographically-first optimal move sequence to the goal."""
    if goal_test(a0, b0):
        return ()
    bound = heuristic(a0, b0)
    if bound == 0:
        bound = 1
    while True:
        path = []

        def dfs(a, b, g, last_face):
            h = heuristic(a, b)
            if g + h > bound:
                return False
            if goal_test(a, b):
                return True
            if g == bound:
                return False
            for mi in range(9):
                move = CANONICAL_MOVES[mi]
                if move.target == last_face:
                    continue
                if dfs(trans_a[a][mi], trans_b[b][mi], g + 1, move.target):
                    path.append(mi)
                    return True
            return False

        if dfs(a0, b0, 0, ""):
            path.reverse()
            return tuple(CANONICAL_MOVES[mi] for mi in path)
        bound += 1


def _require_canonical(state: CubeState):
    if not state.is_canonical:
        raise ValueError("solver requires a canonical state")


def solve_phase1(state: CubeState) -> Plan:
    """Shortest plan making the bottom layer solved (or reaching solved)."""
    _require_canonical(state)
    t = _tables()
    a, b = t.entry(state)
    dist_bot = t.table_bot.distances
    moves = _ida(
        a,
        b,
        lambda _a, _b: _b == 0,
        lambda _a, _b: dist_bot[_b],
        t.trans_top,
        t.trans_bot,
    )
    return Plan(moves, (PlanCheckpoint(len(moves), PHASE1),))


def solve_to_solved(state: CubeState) -> Plan:
    """Shortest plan to the fully solved state from any canonical state."""
    _require_canonical(state)
    t = _tables()
    a, b = t.entry(state)
    dist_top, dist_bot = t.table_top.distances, t.table_bot.distances
    moves = _ida(
        a,
        b,
        lambda _a, _b: _a == 0 and _b == 0,
        lambda _a, _b: max(dist_top[_a], dist_bot[_b]),
        t.trans_top,
        t.trans_bot,
    )
    return Plan(moves, (PlanCheckpoint(len(moves), SOLVED_CHECKPOINT),))


def solve_phase2(state: CubeState) -> Plan:
    """Shortest plan finishing the cube from a bottom-layer-solved state.

    Only the end state is constrained; intermediate moves may disturb the
    bottom layer."""
    if classify(state) is Classification.UNSOLVED:
        raise NotAtCheckpoint("bottom layer is not solved")
    return solve_to_solved(state)


def solve_full(state: CubeState) -> Plan:
    """Phase-1 plan followed by phase-2 plan, both checkpoints recorded."""
    _require_canonical(state)
    p1 = solve_phase1(state)
    mid = apply_moves(state, p1.moves)
    p2 = solve_to_solved(mid)
    return Plan(
        p1.moves + p2.moves,
        (
            PlanCheckpoint(len(p1.moves), PHASE1),
            PlanCheckpoint(len(p1.moves) + len(p2.moves), SOLVED_CHECKPOINT),
        ),
    )


# --- ergonomic presentation --------------------------------------------------

@dataclass(frozen=True)
class PresentationStep:
    move: Move  # physical move (rotation or comfort-face turn)
    pose_after: int
    plan_index: int | None  # canonical plan index for turns, None for rotations


@dataclass(frozen=True)
class PresentationPlan:
    steps: tuple
    start_pose: int
    final_pose: int
    source: Plan


def _rotation_cost(pose_idx: int):
    seq = ROTATION_MOVES[pose_idx]
    return (len(seq), tuple(m.notation() for m in seq))


def ergonomize(plan: Plan, initial_pose: int = IDENTITY_POSE) -> PresentationPlan:
    """Insert whole-cube rotations so every turn happens on the comfort face."""
    steps = []
    pose = initial_pose
    for i, move in enumerate(plan.moves):
        if physical_turn(move, pose).target != COMFORT_FACE:
            best = None
            for g in range(24):
                candidate = pose
                for rot_move in ROTATION_MOVES[g]:
                    candidate = compose_pose(candidate, rot_move)
                if physical_turn(move, candidate).target == COMFORT_FACE:
                    key = _rotation_cost(g)
                    if best is None or key < best[0]:
                        best = (key, g, candidate)
            _, g, new_pose = best
            for rot_move in ROTATION_MOVES[g]:
                pose = compose_pose(pose, rot_move)
                steps.append(PresentationStep(rot_move, pose, None))
            assert pose == new_pose
        turn = physical_turn(move, pose)
        steps.append(PresentationStep(turn, pose, i))
    return PresentationPlan(tuple(steps), initial_pose, pose, plan)


def strip_and_rename(presentation: PresentationPlan) -> Plan:
    """Drop rotations and map comfort-face turns back to canonical moves."""
    moves = []
    pose = presentation.start_pose
    for step in presentation.steps:
        if step.move.is_rotation:
            pose = compose_pose(pose, step.move)
        else:
            assert pose == step.pose_after
            moves.append(canonical_turn(step.move, pose))
    return Plan(tuple(moves), presentation.source.checkpoints)
