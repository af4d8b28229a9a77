"""Exhaustive breadth-first closure of the canonical state space.

Serves as the independent oracle for the solver: exact distances to the
solved state and to the bottom-layer goal set, plus the reachability
report (state count, depth histogram, diameter).
"""

import functools
from dataclasses import dataclass

import numpy as np

from . import coords
from .cube import CubeState, SOLVED

N_STATES = coords.N_PERM * coords.N_ORIENT  # 7! * 3^6 = 3,674,160
UNSEEN = 255


@dataclass(frozen=True)
class EnumerationReport:
    total_states: int
    depth_histogram: tuple  # index = depth, value = state count
    diameter: int

    def as_dict(self) -> dict:
        return {
            "total_states": self.total_states,
            "depth_histogram": list(self.depth_histogram),
            "diameter": self.diameter,
        }


def _bfs(seed_indices) -> np.ndarray:
    """Depth array over all composite indices, multi-source BFS."""
    perm_trans, orient_trans = coords.composite_tables()
    depth = np.full(N_STATES, UNSEEN, dtype=np.uint8)
    frontier = np.asarray(seed_indices, dtype=np.int64)
    depth[frontier] = 0
    level = 0
    while frontier.size:
        p, o = np.divmod(frontier, coords.N_ORIENT)
        children = np.concatenate(
            [
                perm_trans[p, m].astype(np.int64) * coords.N_ORIENT
                + orient_trans[o, m]
                for m in range(coords.N_MOVES)
            ]
        )
        children = np.unique(children)
        children = children[depth[children] == UNSEEN]
        level += 1
        depth[children] = level
        frontier = children
    return depth


@functools.cache
def distance_to_solved() -> np.ndarray:
    """Exact move count to the solved state, per composite index.

    The generator set is closed under inversion, so distances from solved
    equal distances to solved."""
    return _bfs([coords.composite_index(SOLVED)])


def _phase1_goal_indices():
    # The bottom layer is solved iff slots 4,5,7 hold cubies 4,5,7 untwisted;
    # free cubies 0..3 permute over slots 0..3 with any twist summing to 0.
    import itertools

    goals = []
    for top in itertools.permutations(range(4)):
        perm = list(top) + [4, 5, 6, 7]
        for t0 in range(3):
            for t1 in range(3):
                for t2 in range(3):
                    t3 = (-(t0 + t1 + t2)) % 3
                    state = CubeState(tuple(perm), (t0, t1, t2, t3, 0, 0, 0, 0))
                    goals.append(coords.composite_index(state))
    return goals


@functools.cache
def distance_to_phase1() -> np.ndarray:
    """Exact move count to the nearest bottom-layer-solved state."""
    return _bfs(_phase1_goal_indices())


def enumerate_all() -> EnumerationReport:
    depth = distance_to_solved()
    hist = np.bincount(depth[depth != UNSEEN])
    return EnumerationReport(
        total_states=int((depth != UNSEEN).sum()),
        depth_histogram=tuple(int(x) for x in hist),
        diameter=int(len(hist) - 1),
    )


def oracle_distance(state: CubeState, goal: str = "solved") -> int:
    """Exact distance of one canonical state; goal is 'solved' or 'phase1'."""
    table = distance_to_solved() if goal == "solved" else distance_to_phase1()
    return int(table[coords.composite_index(state)])


def states_at_depth(depth_value: int, goal: str = "solved", limit: int = 100):
    """A deterministic sample of canonical states at an exact oracle depth."""
    table = distance_to_solved() if goal == "solved" else distance_to_phase1()
    idxs = np.flatnonzero(table == depth_value)[:limit]
    return [coords.coords_to_state(int(i) // coords.N_ORIENT, int(i) % coords.N_ORIENT)
            for i in idxs]
