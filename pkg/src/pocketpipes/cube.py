"""Pocket cube (2x2) state model: moves, whole-cube rotations, sticker
rendering and scan decoding.

Conventions
-----------
Corner slots are fixed in space and numbered URF=0, UFL=1, ULB=2, UBR=3,
DFR=4, DLF=5, DBL=6, DRB=7.  A state stores, per slot, the cubie sitting
in it (``perm``) and a twist in {0,1,2} (``orient``).  Twist 0 means the
cubie's U/D-class sticker lies on the slot's U/D-class facelet; twists
count clockwise thirds looking down the slot's corner diagonal.

Face cells are indexed 0..3 row-major in an unfolded net with U up and
F front: U is read with B at the top, D with F at the top, the four side
faces upright.  Canonical form pins cubie DBL(6) in slot 6 with twist 0,
quotienting out the 24 whole-cube rotations.
"""

import enum
import random
from dataclasses import dataclass

from .errors import (
    DuplicateCubie,
    MissingFace,
    OrientationParityError,
    ScanFormatError,
    UnknownCubie,
)

FACES = ("U", "D", "L", "R", "F", "B")
AXES = ("x", "y", "z")

# amount encoding: number of clockwise quarter turns (1=CW, 2=half, 3=CCW)
CW, HALF, CCW = 1, 2, 3
_AMOUNT_SUFFIX = {CW: "", HALF: "2", CCW: "'"}
_SUFFIX_AMOUNT = {v: k for k, v in _AMOUNT_SUFFIX.items()}


@dataclass(frozen=True)
class Move:
    """A layer turn (target in UDLRFB) or whole-cube rotation (x/y/z)."""

    target: str
    amount: int

    def __post_init__(self):
        if self.target not in FACES and self.target not in AXES:
            raise ValueError(f"bad move target {self.target!r}")
        if self.amount not in (CW, HALF, CCW):
            raise ValueError(f"bad move amount {self.amount!r}")

    @property
    def is_rotation(self) -> bool:
        return self.target in AXES

    def notation(self) -> str:
        return self.target + _AMOUNT_SUFFIX[self.amount]

    def __str__(self) -> str:
        return self.notation()


def parse_move(text: str) -> Move:
    text = text.strip()
    if not text or text[0] not in FACES + AXES:
        raise ValueError(f"unparseable move {text!r}")
    suffix = text[1:]
    if suffix not in _SUFFIX_AMOUNT:
        raise ValueError(f"unparseable move {text!r}")
    return Move(text[0], _SUFFIX_AMOUNT[suffix])


def invert(move: Move) -> Move:
    """Inverse move: CW<->CCW, half turns are involutions."""
    return Move(move.target, (4 - move.amount) % 4 if move.amount != HALF else HALF)


# Canonical generator set used by the solver: DBL is pinned, so U/R/F
# turns suffice.  Order is the tie-break order for equal-length plans.
CANONICAL_MOVES = tuple(
    Move(face, amount) for face in ("U", "R", "F") for amount in (CW, CCW, HALF)
)

ALL_LAYER_TURNS = tuple(
    Move(face, amount) for face in FACES for amount in (CW, CCW, HALF)
)

ROTATION_GENERATORS = tuple(
    Move(axis, amount) for axis in AXES for amount in (CW, CCW, HALF)
)


# --- permutation-cube algebra ----------------------------------------------
# A "perm cube" is a (perm, orient) pair of 8-tuples with the same meaning
# as CubeState fields; moves and rotations are perm cubes multiplied on
# the right: (a*b).perm[i] = a.perm[b.perm[i]].

_IDENTITY = (tuple(range(8)), (0,) * 8)


def _mul(a, b):
    ap, ao = a
    bp, bo = b
    return (
        tuple(ap[bp[i]] for i in range(8)),
        tuple((ao[bp[i]] + bo[i]) % 3 for i in range(8)),
    )


def _inv(a):
    ap, ao = a
    perm = [0] * 8
    orient = [0] * 8
    for i in range(8):
        perm[ap[i]] = i
    for i in range(8):
        orient[i] = (-ao[perm[i]]) % 3
    return tuple(perm), tuple(orient)


def _pow(a, n):
    out = _IDENTITY
    for _ in range(n):
        out = _mul(out, a)
    return out


# Quarter-turn tables, hand-traced under the slot numbering above and
# cross-checked by the order-4 / orientation-sum tests.
_QUARTER = {
    "U": ((3, 0, 1, 2, 4, 5, 6, 7), (0, 0, 0, 0, 0, 0, 0, 0)),
    "R": ((4, 1, 2, 0, 7, 5, 6, 3), (2, 0, 0, 1, 1, 0, 0, 2)),
    "F": ((1, 5, 2, 3, 0, 4, 6, 7), (1, 2, 0, 0, 2, 1, 0, 0)),
    "D": ((0, 1, 2, 3, 5, 6, 7, 4), (0, 0, 0, 0, 0, 0, 0, 0)),
    "L": ((0, 2, 6, 3, 4, 1, 5, 7), (0, 1, 2, 0, 0, 2, 1, 0)),
    "B": ((0, 1, 3, 7, 4, 5, 2, 6), (0, 0, 1, 2, 0, 0, 2, 1)),
}

# Whole-cube rotations follow the turn of the like-named face: x turns the
# cube like R, y like U, z like F.
_QUARTER["x"] = _mul(_QUARTER["R"], _pow(_QUARTER["L"], 3))
_QUARTER["y"] = _mul(_QUARTER["U"], _pow(_QUARTER["D"], 3))
_QUARTER["z"] = _mul(_QUARTER["F"], _pow(_QUARTER["B"], 3))

_MOVE_CUBES = {}
for _t, _q in _QUARTER.items():
    for _amt in (CW, HALF, CCW):
        _MOVE_CUBES[Move(_t, _amt)] = _pow(_q, _amt)


def _bfs_rotations():
    """Enumerate the 24 rotations with, per rotation, the lexicographically
    first shortest x/y/z move sequence producing it."""
    seqs = {_IDENTITY: ()}
    order = [_IDENTITY]
    frontier = [_IDENTITY]
    while frontier:
        nxt = []
        for pc in frontier:
            for mv in ROTATION_GENERATORS:
                child = _mul(pc, _MOVE_CUBES[mv])
                if child not in seqs:
                    seqs[child] = seqs[pc] + (mv,)
                    order.append(child)
                    nxt.append(child)
        frontier = nxt
    return tuple(order), tuple(seqs[pc] for pc in order)


ROTATIONS, ROTATION_MOVES = _bfs_rotations()
assert len(ROTATIONS) == 24
_ROTATION_INDEX = {pc: i for i, pc in enumerate(ROTATIONS)}
IDENTITY_POSE = 0

_TURN_BY_CUBE = {_MOVE_CUBES[m]: m for m in ALL_LAYER_TURNS}


# --- states ----------------------------------------------------------------

@dataclass(frozen=True)
class CubeState:
    perm: tuple
    orient: tuple

    def __post_init__(self):
        if sorted(self.perm) != list(range(8)):
            raise ValueError("perm is not a permutation of 0..7")
        if len(self.orient) != 8 or any(o not in (0, 1, 2) for o in self.orient):
            raise ValueError("orient entries must be in {0,1,2}")
        if sum(self.orient) % 3 != 0:
            raise ValueError("orientation sum must be 0 mod 3")

    @property
    def is_canonical(self) -> bool:
        return self.perm[6] == 6 and self.orient[6] == 0


SOLVED = CubeState(tuple(range(8)), (0,) * 8)


def apply_move(state: CubeState, move: Move) -> CubeState:
    perm, orient = _mul((state.perm, state.orient), _MOVE_CUBES[move])
    return CubeState(perm, orient)


def apply_moves(state: CubeState, moves) -> CubeState:
    pc = (state.perm, state.orient)
    for move in moves:
        pc = _mul(pc, _MOVE_CUBES[move])
    return CubeState(*pc)


def canonicalize(state: CubeState) -> CubeState:
    return canonical_pose(state)[0]


def canonical_pose(state: CubeState):
    """Split ``state`` into (canonical, pose) with
    state == apply_moves(canonical, ROTATION_MOVES[pose])."""
    pc = (state.perm, state.orient)
    for idx, rot in enumerate(ROTATIONS):
        cp, co = _mul(pc, rot)
        if cp[6] == 6 and co[6] == 0:
            pose = _ROTATION_INDEX[_inv(rot)]
            return CubeState(cp, co), pose
    raise AssertionError("unreachable: rotation group is transitive on corner poses")


def compose_pose(pose: int, rotation_move: Move) -> int:
    """Pose after the player physically rotates the whole cube."""
    return _ROTATION_INDEX[_mul(ROTATIONS[pose], _MOVE_CUBES[rotation_move])]


def physical_turn(canonical_move: Move, pose: int) -> Move:
    """The layer turn to perform on the physically held cube (pose relative
    to canonical frame) so that the canonical frame sees ``canonical_move``."""
    rot = ROTATIONS[pose]
    pc = _mul(_mul(_inv(rot), _MOVE_CUBES[canonical_move]), rot)
    return _TURN_BY_CUBE[pc]


def canonical_turn(physical_move: Move, pose: int) -> Move:
    """Inverse of :func:`physical_turn`."""
    rot = ROTATIONS[pose]
    pc = _mul(_mul(rot, _MOVE_CUBES[physical_move]), _inv(rot))
    return _TURN_BY_CUBE[pc]


def random_state(rng: random.Random) -> CubeState:
    """Uniform over the 7!*3^6 canonical states."""
    free = [0, 1, 2, 3, 4, 5, 7]
    cubies = free[:]
    rng.shuffle(cubies)
    perm = [0] * 8
    perm[6] = 6
    for slot, cubie in zip(free, cubies):
        perm[slot] = cubie
    orient = [0] * 8
    for slot in (0, 1, 2, 3, 4, 5):
        orient[slot] = rng.randrange(3)
    orient[7] = (-sum(orient)) % 3
    return CubeState(tuple(perm), tuple(orient))


# --- classification --------------------------------------------------------

class Classification(enum.Enum):
    SOLVED = "solved"
    PHASE1_SOLVED = "phase1_solved"
    UNSOLVED = "unsolved"


def classify(state: CubeState) -> Classification:
    s = state if state.is_canonical else canonicalize(state)
    if s == SOLVED:
        return Classification.SOLVED
    if all(s.perm[i] == i and s.orient[i] == 0 for i in (4, 5, 6, 7)):
        return Classification.PHASE1_SOLVED
    return Classification.UNSOLVED


# --- stickers --------------------------------------------------------------

class AssetClass(enum.Enum):
    LADDER = "LAD"
    BRIDGE = "BRI"
    CLOCK = "CLO"
    MONEY = "MON"
    KEY = "KEY"
    FENCE = "FEN"


_CODE_TO_CLASS = {c.value: c for c in AssetClass}

# Per slot: its three facelets, U/D-class facelet first then clockwise
# looking down the corner diagonal.
CORNER_FACELETS = (
    (("U", 3), ("R", 0), ("F", 1)),  # URF
    (("U", 2), ("F", 0), ("L", 1)),  # UFL
    (("U", 0), ("L", 0), ("B", 1)),  # ULB
    (("U", 1), ("B", 0), ("R", 1)),  # UBR
    (("D", 1), ("F", 3), ("R", 2)),  # DFR
    (("D", 0), ("L", 3), ("F", 2)),  # DLF
    (("D", 2), ("B", 3), ("L", 2)),  # DBL
    (("D", 3), ("R", 3), ("B", 2)),  # DRB
)

# Home faces of each cubie's stickers, same ordering as CORNER_FACELETS.
CORNER_STICKERS = (
    ("U", "R", "F"),
    ("U", "F", "L"),
    ("U", "L", "B"),
    ("U", "B", "R"),
    ("D", "F", "R"),
    ("D", "L", "F"),
    ("D", "B", "L"),
    ("D", "R", "B"),
)

_CUBIE_BY_STICKERS = {CORNER_STICKERS[c]: c for c in range(8)}


@dataclass(frozen=True)
class FaceClassMap:
    """Bijection face letter <-> asset class shown on that face when solved."""

    mapping: tuple

    def __post_init__(self):
        d = dict(self.mapping)
        if sorted(d) != sorted(FACES) or len(set(d.values())) != 6:
            raise ValueError("face map must be a bijection over the six faces")

    @classmethod
    def from_dict(cls, d) -> "FaceClassMap":
        return cls(tuple(sorted((f, d[f]) for f in d)))

    def face_to_class(self, face: str) -> AssetClass:
        return dict(self.mapping)[face]

    def class_to_face(self, cls_: AssetClass) -> str:
        return {v: k for k, v in self.mapping}[cls_]

    def to_dict(self) -> dict:
        return {f: c.value for f, c in self.mapping}


DEFAULT_FACE_MAP = FaceClassMap.from_dict(
    {
        "U": AssetClass.CLOCK,
        "D": AssetClass.FENCE,
        "F": AssetClass.BRIDGE,
        "B": AssetClass.LADDER,
        "R": AssetClass.MONEY,
        "L": AssetClass.KEY,
    }
)


@dataclass(frozen=True)
class FaceObservation:
    face: str
    cells: tuple  # 4 AssetClass values, row-major

    def __post_init__(self):
        if self.face not in FACES:
            raise ValueError(f"bad face {self.face!r}")
        if len(self.cells) != 4:
            raise ValueError("a face observation carries exactly 4 cells")


def render_stickers(state: CubeState, face_map: FaceClassMap = DEFAULT_FACE_MAP):
    """Render a state to one observation per face (FACES order)."""
    grid = {f: [None] * 4 for f in FACES}
    for slot in range(8):
        cubie = state.perm[slot]
        twist = state.orient[slot]
        for n in range(3):
            face, idx = CORNER_FACELETS[slot][(n + twist) % 3]
            grid[face][idx] = face_map.face_to_class(CORNER_STICKERS[cubie][n])
    return tuple(FaceObservation(f, tuple(grid[f])) for f in FACES)


def decode_scan(observations, face_map: FaceClassMap = DEFAULT_FACE_MAP) -> CubeState:
    """Invert :func:`render_stickers`.

    Returns the unique state whose rendering equals the observations, in
    the scan's own frame (no canonicalization applied).
    """
    grid = {}
    for obs in observations:
        if obs.face in grid:
            raise MissingFace(f"face {obs.face} observed twice")
        grid[obs.face] = obs.cells
    missing = [f for f in FACES if f not in grid]
    if missing:
        raise MissingFace(f"missing faces: {', '.join(missing)}")

    home = {}
    for face in FACES:
        cls_ = face_map.face_to_class(face)
        home[cls_] = face

    perm = [None] * 8
    orient = [0] * 8
    for slot in range(8):
        letters = []
        for face, idx in CORNER_FACELETS[slot]:
            cls_ = grid[face][idx]
            if cls_ not in home:
                raise UnknownCubie(f"unknown asset class {cls_!r}")
            letters.append(home[cls_])
        ud = [k for k in range(3) if letters[k] in ("U", "D")]
        if len(ud) != 1:
            raise UnknownCubie(
                f"slot {slot}: cells {letters} do not form a legal corner"
            )
        twist = ud[0]
        ordered = tuple(letters[(twist + n) % 3] for n in range(3))
        cubie = _CUBIE_BY_STICKERS.get(ordered)
        if cubie is None:
            raise UnknownCubie(
                f"slot {slot}: cells {letters} do not form a legal corner"
            )
        if cubie in perm:
            raise DuplicateCubie(f"cubie {cubie} appears in two slots")
        perm[slot] = cubie
        orient[slot] = twist
    if sum(orient) % 3 != 0:
        raise OrientationParityError("orientation sum is not 0 mod 3")
    return CubeState(tuple(perm), tuple(orient))


# --- scan text format ------------------------------------------------------
# Six lines "<FACE>: <c> <c> <c> <c>", FACE in UDLRFB, c a 3-letter class
# code; line order free, cell order within a line fixed.

def parse_scan_text(text: str):
    observations = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ScanFormatError(f"expected '<FACE>: ...' in {raw!r}")
        face, _, rest = line.partition(":")
        face = face.strip()
        if face not in FACES:
            raise ScanFormatError(f"unknown face {face!r}")
        codes = rest.split()
        if len(codes) != 4:
            raise ScanFormatError(f"face {face}: expected 4 cells, got {len(codes)}")
        cells = []
        for code in codes:
            cls_ = _CODE_TO_CLASS.get(code.upper())
            if cls_ is None:
                raise ScanFormatError(f"unknown asset code {code!r}")
            cells.append(cls_)
        observations.append(FaceObservation(face, tuple(cells)))
    return tuple(observations)


def format_scan_text(observations) -> str:
    by_face = {obs.face: obs for obs in observations}
    lines = []
    for face in FACES:
        obs = by_face[face]
        lines.append(f"{face}: " + " ".join(c.value for c in obs.cells))
    return "\n".join(lines) + "\n"


def sticker_targets(move: Move) -> dict:
    """Facelet permutation of one move: maps each (face, cell) to where its
    sticker lands."""
    mp, mo = _MOVE_CUBES[move]
    land = [0] * 8
    for i in range(8):
        land[mp[i]] = i
    out = {}
    for slot in range(8):
        dest = land[slot]
        gain = mo[dest]
        for k in range(3):
            out[CORNER_FACELETS[slot][k]] = CORNER_FACELETS[dest][(k + gain) % 3]
    return out
