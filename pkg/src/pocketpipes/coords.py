"""Coordinate encodings of canonical cube states and per-move transition
tables.

Two families are built here:

* composite coordinates (permutation rank 0..5039 x twist rank 0..728)
  indexing all 7!*3^6 canonical states, used by the breadth-first oracle;
* cubie-placement coordinates tracking where a chosen subset of cubies
  sits (slot + twist each), used by the solver's pruning tables.

All tables cover the nine canonical moves in CANONICAL_MOVES order.
"""

import functools
from collections import deque

from .cube import CANONICAL_MOVES, CubeState, _MOVE_CUBES

N_MOVES = len(CANONICAL_MOVES)

# Free slots in canonical form (slot 6 pinned); cubie/slot 7 is relabelled
# to 6 so permutation ranks run over S7.
FREE_SLOTS = (0, 1, 2, 3, 4, 5, 7)
N_PERM = 5040
N_ORIENT = 729

# land[s] = slot a cubie in slot s moves to; gain[s] = twist it picks up.
_LAND = []
_GAIN = []
for _m in CANONICAL_MOVES:
    _mp, _mo = _MOVE_CUBES[_m]
    land = [0] * 8
    for _i in range(8):
        land[_mp[_i]] = _i
    _LAND.append(tuple(land))
    _GAIN.append(tuple(_mo[land[_s]] for _s in range(8)))


def perm_rank(seq) -> int:
    """Lehmer rank of a permutation of 0..n-1."""
    seq = list(seq)
    n = len(seq)
    rank = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if seq[j] < seq[i])
        rank = rank * (n - i) + smaller
    return rank


def perm_unrank(rank: int, n: int):
    digits = []
    for base in range(1, n + 1):
        digits.append(rank % base)
        rank //= base
    digits.reverse()
    pool = list(range(n))
    return tuple(pool.pop(d) for d in digits)


def state_to_coords(state: CubeState):
    """Canonical state -> (perm rank, twist rank)."""
    relabel = lambda c: 6 if c == 7 else c
    p = perm_rank([relabel(state.perm[s]) for s in FREE_SLOTS])
    o = 0
    for slot in (5, 4, 3, 2, 1, 0):
        o = o * 3 + state.orient[slot]
    return p, o


def coords_to_state(p: int, o: int) -> CubeState:
    seq = perm_unrank(p, 7)
    perm = [0] * 8
    perm[6] = 6
    for slot, c in zip(FREE_SLOTS, seq):
        perm[slot] = 7 if c == 6 else c
    orient = [0] * 8
    for slot in range(6):
        orient[slot] = o % 3
        o //= 3
    orient[7] = (-sum(orient)) % 3
    return CubeState(tuple(perm), tuple(orient))


@functools.cache
def composite_tables():
    """(perm_trans, orient_trans) numpy arrays of shape (N, 9)."""
    import numpy as np

    perm_trans = np.empty((N_PERM, N_MOVES), dtype=np.int32)
    for p in range(N_PERM):
        seq = perm_unrank(p, 7)
        occupant = [0] * 8  # slot -> relabelled cubie, slot 6 -> 6 sentinel
        occupant[6] = 7  # out-of-band marker, never ranked
        for slot, c in zip(FREE_SLOTS, seq):
            occupant[slot] = c
        for mi in range(N_MOVES):
            land = _LAND[mi]
            moved = [0] * 8
            for s in range(8):
                moved[land[s]] = occupant[s]
            perm_trans[p, mi] = perm_rank([moved[s] for s in FREE_SLOTS])

    orient_trans = np.empty((N_ORIENT, N_MOVES), dtype=np.int32)
    for o in range(N_ORIENT):
        orient = [0] * 8
        rest = o
        for slot in range(6):
            orient[slot] = rest % 3
            rest //= 3
        orient[7] = (-sum(orient)) % 3
        for mi in range(N_MOVES):
            land, gain = _LAND[mi], _GAIN[mi]
            new = [0] * 8
            for s in range(8):
                new[land[s]] = (orient[s] + gain[s]) % 3
            enc = 0
            for slot in (5, 4, 3, 2, 1, 0):
                enc = enc * 3 + new[slot]
            orient_trans[o, mi] = enc
    return perm_trans, orient_trans


def composite_index(state: CubeState) -> int:
    p, o = state_to_coords(state)
    return p * N_ORIENT + o


# --- cubie-placement coordinates -------------------------------------------

def _placement_apply(placement, mi):
    land, gain = _LAND[mi], _GAIN[mi]
    return tuple((land[slot], (tw + gain[slot]) % 3) for slot, tw in placement)


def build_placement_tables(cubies):
    """Closure of the tracked cubies' (slot, twist) placements under the
    canonical moves.

    Returns (index_of_placement, transition_table) where the solved
    placement has index 0.
    """
    start = tuple((c, 0) for c in cubies)
    index_of = {start: 0}
    states = [start]
    queue = deque([start])
    while queue:
        placement = queue.popleft()
        for mi in range(N_MOVES):
            child = _placement_apply(placement, mi)
            if child not in index_of:
                index_of[child] = len(states)
                states.append(child)
                queue.append(child)
    trans = [
        tuple(index_of[_placement_apply(pl, mi)] for mi in range(N_MOVES))
        for pl in states
    ]
    return index_of, trans


def placement_of(state: CubeState, cubies) -> tuple:
    return tuple(
        (state.perm.index(c), state.orient[state.perm.index(c)]) for c in cubies
    )


def bfs_distances(trans, goals):
    """Breadth-first distances over a transition table from a goal set.

    Valid as distances *to* the goal because the move set is closed under
    inverses."""
    dist = [-1] * len(trans)
    queue = deque()
    for g in goals:
        dist[g] = 0
        queue.append(g)
    while queue:
        idx = queue.popleft()
        d = dist[idx] + 1
        for child in trans[idx]:
            if dist[child] < 0:
                dist[child] = d
                queue.append(child)
    return dist
