"""Visual-cue generation, player-action verification and replanning.

A layer cue places the character on one cell of the moving layer and the
target asset on the cell where that sticker lands, so the arrow between
them points along the rotation.  The character sits on the front face
when the moving layer touches it (top face for turns of the back layer),
on the trailing cell with respect to the rotation's flow.
"""

from dataclasses import dataclass

from . import solver
from .cube import (
    CANONICAL_MOVES,
    Classification,
    CubeState,
    Move,
    CW,
    apply_move,
    classify,
    physical_turn,
    sticker_targets,
)
from .solver import PHASE1, Plan, SOLVED_CHECKPOINT

# Slots belonging to each layer (frame-fixed).
LAYER_SLOTS = {
    "U": (0, 1, 2, 3),
    "D": (4, 5, 6, 7),
    "R": (0, 3, 4, 7),
    "L": (1, 2, 5, 6),
    "F": (0, 1, 4, 5),
    "B": (2, 3, 6, 7),
}

# Side cells of each layer in spatial walk order around the cube.  Quarter
# turns shift stickers by two positions along these rings; the shift sign
# gives the flow direction used to pick the trailing cell.
RINGS = {
    "U": (("F", 0), ("F", 1), ("R", 0), ("R", 1), ("B", 0), ("B", 1), ("L", 0), ("L", 1)),
    "D": (("F", 2), ("F", 3), ("R", 2), ("R", 3), ("B", 2), ("B", 3), ("L", 2), ("L", 3)),
    "R": (("U", 3), ("F", 1), ("F", 3), ("D", 1), ("D", 3), ("B", 2), ("B", 0), ("U", 1)),
    "L": (("U", 2), ("F", 0), ("F", 2), ("D", 0), ("D", 2), ("B", 3), ("B", 1), ("U", 0)),
    "F": (("U", 2), ("U", 3), ("R", 0), ("R", 2), ("D", 1), ("D", 0), ("L", 3), ("L", 1)),
    "B": (("U", 1), ("U", 0), ("L", 0), ("L", 2), ("D", 2), ("D", 3), ("R", 3), ("R", 1)),
}

_DIR_NAME = {1: "cw", 2: "half", 3: "ccw"}
_NAME_DIR = {v: k for k, v in _DIR_NAME.items()}


@dataclass(frozen=True)
class LayerCue:
    face: str
    direction: str  # cw | ccw | half
    character_cell: tuple  # (face, cell index)
    target_cell: tuple


@dataclass(frozen=True)
class WholeCubeCue:
    axis: str
    direction: str


@dataclass(frozen=True)
class CheckpointCue:
    which: str  # phase1 | solved


@dataclass(frozen=True)
class NoCue:
    pass


def _reference_face(face: str) -> str:
    return "U" if face == "B" else "F"


def layer_cue(move: Move) -> LayerCue:
    """Cue for one physical layer turn."""
    assert not move.is_rotation
    face = move.target
    targets = sticker_targets(move)
    if face == "F":
        character = ("F", 0)
    else:
        ring = RINGS[face]
        ref = _reference_face(face)
        cells = [i for i, c in enumerate(ring) if c[0] == ref]
        i, j = cells[0], cells[1]
        # flow direction along the ring; half turns display the clockwise flow
        cw_shift = ring.index(sticker_targets(Move(face, CW))[ring[0]]) % 8
        shift = (8 - cw_shift) % 8 if move.amount == 3 else cw_shift
        character = ring[i] if shift == 2 else ring[j]
    return LayerCue(face, _DIR_NAME[move.amount], character, targets[character])


def cue_for_move(move: Move):
    if move.is_rotation:
        return WholeCubeCue(move.target, _DIR_NAME[move.amount])
    return layer_cue(move)


def next_cue(plan: Plan, cursor: int, pose: int, fired=frozenset()):
    """Cue for the next plan step under the current physical pose.

    Checkpoints at the cursor that have not fired yet are announced before
    the following move; past the end of the plan there is no cue."""
    pending = [
        cp for cp in plan.checkpoints if cp.index == cursor and cp.which not in fired
    ]
    if pending:
        which = SOLVED_CHECKPOINT if any(
            cp.which == SOLVED_CHECKPOINT for cp in pending
        ) else PHASE1
        return CheckpointCue(which)
    if cursor >= len(plan.moves):
        return NoCue()
    move = plan.moves[cursor]
    if move.is_rotation:
        return WholeCubeCue(move.target, _DIR_NAME[move.amount])
    return cue_for_move(physical_turn(move, pose))


def cue_to_json(cue) -> dict:
    if isinstance(cue, LayerCue):
        return {
            "type": "layer",
            "face": cue.face,
            "dir": cue.direction,
            "character": [cue.character_cell[0], cue.character_cell[1]],
            "target": [cue.target_cell[0], cue.target_cell[1]],
        }
    if isinstance(cue, WholeCubeCue):
        return {"type": "cube", "axis": cue.axis, "dir": cue.direction}
    if isinstance(cue, CheckpointCue):
        return {"type": "checkpoint", "which": cue.which}
    return {"type": "none"}


# --- observation and replanning ---------------------------------------------

@dataclass(frozen=True)
class DeviationPolicy:
    max_incorrect: int = 3
    reset_at_checkpoint: bool = False

    def __post_init__(self):
        if self.max_incorrect < 1:
            raise ValueError("max_incorrect must be >= 1")


@dataclass(frozen=True)
class OnPlan:
    advanced_to: int


@dataclass(frozen=True)
class NoChange:
    pass


@dataclass(frozen=True)
class SingleDeviation:
    detected_move: Move
    new_plan: Plan


@dataclass(frozen=True)
class MultiDeviation:
    pass


def replan(observed: CubeState, phase: str) -> Plan:
    """Fresh plan from an observed state for the active phase."""
    if phase == PHASE1:
        return solver.solve_full(observed)
    if classify(observed) is Classification.UNSOLVED:
        # a phase-2 error broke the bottom layer: restore it first
        return solver.solve_full(observed)
    return solver.solve_phase2(observed)


def observe(
    prev: CubeState,
    expected: CubeState,
    observed: CubeState,
    policy: DeviationPolicy,
    deviations_so_far: int,
    phase: str = PHASE1,
    cursor: int = 0,
    plan: Plan | None = None,
):
    """Classify an observed state against the plan.

    States are compared, not gestures: anything that lands on a planned
    state counts as progress, however it was reached.  A state one
    canonical move away from the previous one is a recoverable deviation
    (with a fresh plan); anything else loses the cube.  If the plan is
    supplied, observations matching a later planned state fast-forward
    the cursor."""
    if observed == expected:
        return OnPlan(cursor + 1)
    if plan is not None:
        probe = expected
        for k in range(cursor + 1, len(plan.moves)):
            probe = apply_move(probe, plan.moves[k])
            if observed == probe:
                return OnPlan(k + 1)
    if observed == prev:
        return NoChange()
    for move in CANONICAL_MOVES:
        if apply_move(prev, move) == observed:
            if deviations_so_far + 1 > policy.max_incorrect:
                return MultiDeviation()
            return SingleDeviation(move, replan(observed, phase))
    return MultiDeviation()
