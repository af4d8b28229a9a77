"""Hypothesis strategies for cube states and moves."""

from hypothesis import strategies as st

from pocketpipes import cube as C

FREE_SLOTS = (0, 1, 2, 3, 4, 5, 7)


@st.composite
def canonical_states(draw):
    cubies = draw(st.permutations(list(FREE_SLOTS)))
    twists = draw(st.lists(st.integers(0, 2), min_size=6, max_size=6))
    perm = [0] * 8
    perm[6] = 6
    for slot, cubie in zip(FREE_SLOTS, cubies):
        perm[slot] = cubie
    orient = [0] * 8
    for slot, tw in zip(range(6), twists):
        orient[slot] = tw
    orient[7] = (-sum(orient)) % 3
    return C.CubeState(tuple(perm), tuple(orient))


@st.composite
def lab_states(draw):
    state = draw(canonical_states())
    pose = draw(st.integers(0, 23))
    return C.apply_moves(state, C.ROTATION_MOVES[pose])


layer_turns = st.sampled_from(C.ALL_LAYER_TURNS)
canonical_moves = st.sampled_from(C.CANONICAL_MOVES)
rotations = st.sampled_from(C.ROTATION_GENERATORS)
any_moves = st.sampled_from(C.ALL_LAYER_TURNS + C.ROTATION_GENERATORS)
