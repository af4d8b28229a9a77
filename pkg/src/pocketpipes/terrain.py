"""Grid terrain game: elevation, static and dynamic assets, character
movement, the tank-rooted pipe network with pressure accounting, portals
and win/lose evaluation.

Geometry
--------
Cells are (x, y) with y growing southwards; directions are N/S/E/W.
Pipe network nodes are (x, y, level): a horizontal segment joins two
edge-adjacent cells at one level (which may run below a raised cell's
surface), a vertical segment climbs one level inside a single cell.
The network is a tree rooted at the tank's surface node, so every node's
pressure is the source head minus path decrements plus path boosts.
"""

import random
from collections import Counter
from dataclasses import dataclass, replace

from . import cube as cube_mod
from .cube import AssetClass, CubeState, FaceClassMap
from .errors import (
    Blocked,
    DiameterMismatch,
    Disconnected,
    GeometryMismatch,
    InsufficientFunds,
    InvalidConfig,
    InvalidLocation,
    NoUsesLeft,
    NotAtShop,
    NotInInventory,
    NotOnNetwork,
    Occupied,
)

DIRECTIONS = {"N": (0, -1), "S": (0, 1), "E": (1, 0), "W": (-1, 0)}

WIDE, NARROW = 2, 1  # diameter ordinals

BRIDGE, LADDER, FENCE = "bridge", "ladder", "fence"
PLACEABLE = (BRIDGE, LADDER, FENCE)

# inventory keys: placeable assets, "key", "clock", "money" (coins), pipe names
_CLASS_ITEM = {
    AssetClass.BRIDGE: BRIDGE,
    AssetClass.LADDER: LADDER,
    AssetClass.FENCE: FENCE,
    AssetClass.KEY: "key",
    AssetClass.CLOCK: "clock",
    AssetClass.MONEY: "money",
}


@dataclass(frozen=True)
class PipeType:
    name: str
    orientation: str  # horizontal | vertical
    diameter: int  # WIDE or NARROW
    decrement: int
    price: int

    def __post_init__(self):
        if self.orientation not in ("horizontal", "vertical"):
            raise InvalidConfig(f"bad pipe orientation {self.orientation!r}")
        if self.decrement <= 0:
            raise InvalidConfig("pipe decrement must be positive")


@dataclass(frozen=True)
class PressureModel:
    source_head: int = 100
    min_pressure: int = 20
    boost_amount: int = 30
    boost_uses: int = 3

    def __post_init__(self):
        if not self.source_head > self.min_pressure > 0:
            raise InvalidConfig("need source_head > min_pressure > 0")
        if self.boost_uses < 0:
            raise InvalidConfig("boost_uses must be >= 0")


DEFAULT_PIPES = (
    PipeType("wide", "horizontal", WIDE, 5, 1),
    PipeType("narrow", "horizontal", NARROW, 8, 1),
    PipeType("vertical", "vertical", WIDE, 10, 2),
)


@dataclass(frozen=True)
class TerrainConfig:
    width: int
    height: int
    elevation: tuple  # rows of per-cell integer levels
    river: frozenset
    tank: tuple
    shop: tuple
    houses: tuple
    start: tuple
    portal_seed: int = 7
    portal_period: int = 6
    pressure: PressureModel = PressureModel()
    pipes: tuple = DEFAULT_PIPES
    money_value: int = 5
    require_fence: bool = False

    def validate(self):
        if self.width < 2 or self.height < 2:
            raise InvalidConfig("grid must be at least 2x2")
        if len(self.elevation) != self.height or any(
            len(row) != self.width for row in self.elevation
        ):
            raise InvalidConfig("elevation grid does not match width/height")
        if any(level < 0 for row in self.elevation for level in row):
            raise InvalidConfig("elevation levels must be >= 0")
        if len(self.houses) != 3:
            raise InvalidConfig("exactly 3 houses required")
        statics = [self.tank, self.shop, *self.houses]
        for cell in statics + [self.start]:
            if not self.in_bounds(cell):
                raise InvalidConfig(f"static cell {cell} out of bounds")
        if len(set(statics)) != len(statics):
            raise InvalidConfig("static cells must be distinct")
        for cell in statics:
            if cell in self.river:
                raise InvalidConfig(f"static cell {cell} lies on the river")
        if self.start in statics[:2] or self.start in self.houses:
            raise InvalidConfig("start cell collides with a static asset")
        if self.start in self.river:
            raise InvalidConfig("start cell lies on the river")
        names = [p.name for p in self.pipes]
        if len(set(names)) != len(names):
            raise InvalidConfig("pipe type names must be unique")
        if self.portal_period < 1:
            raise InvalidConfig("portal_period must be >= 1")
        return self

    def in_bounds(self, cell) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height

    def elevation_at(self, cell) -> int:
        return self.elevation[cell[1]][cell[0]]

    def pipe(self, name: str) -> PipeType:
        for p in self.pipes:
            if p.name == name:
                return p
        raise InvalidLocation(f"unknown pipe type {name!r}")


@dataclass(frozen=True)
class PipeSegment:
    pipe: str
    a: tuple  # upstream node (x, y, level)
    b: tuple  # downstream node


@dataclass(frozen=True)
class HorizontalPlacement:
    cell_a: tuple
    cell_b: tuple
    level: int


@dataclass(frozen=True)
class VerticalPlacement:
    cell: tuple
    lower_level: int


@dataclass(frozen=True)
class TerrainState:
    config: TerrainConfig
    character: tuple
    placements: tuple = ()  # ((x, y), kind) pairs, placement order
    segments: tuple = ()  # PipeSegment, placement order
    boosts: tuple = ()  # nodes carrying a pump boost
    inventory: tuple = ()  # (item, count) pairs, sorted
    portal: tuple | None = None
    action_counter: int = 0
    portal_count: int = 0
    breached: bool = False

    # -- inventory helpers --

    def count(self, item: str) -> int:
        return dict(self.inventory).get(item, 0)

    def _with_inventory(self, item: str, delta: int) -> "TerrainState":
        inv = Counter(dict(self.inventory))
        inv[item] += delta
        if inv[item] < 0:
            raise NotInInventory(f"no {item} in inventory")
        pairs = tuple(sorted((k, v) for k, v in inv.items() if v > 0))
        return replace(self, inventory=pairs)

    def add_items(self, items) -> "TerrainState":
        inv = Counter(dict(self.inventory))
        inv.update(items)
        pairs = tuple(sorted((k, v) for k, v in inv.items() if v > 0))
        return replace(self, inventory=pairs)

    # -- placement helpers --

    def placement_at(self, cell):
        for c, kind in self.placements:
            if c == cell:
                return kind
        return None

    @property
    def tank_node(self) -> tuple:
        x, y = self.config.tank
        return (x, y, self.config.elevation_at(self.config.tank))

    def network_nodes(self) -> set:
        nodes = {self.tank_node}
        for seg in self.segments:
            nodes.add(seg.a)
            nodes.add(seg.b)
        return nodes

    def tank_fenced(self) -> bool:
        cfg = self.config
        tx, ty = cfg.tank
        ring = [(tx + dx, ty + dy) for dx, dy in DIRECTIONS.values()]
        return all(
            not cfg.in_bounds(c) or self.placement_at(c) == FENCE for c in ring
        )


def initial_state(config: TerrainConfig) -> TerrainState:
    config.validate()
    return TerrainState(config=config, character=config.start)


# --- navigation --------------------------------------------------------------

def is_static(config: TerrainConfig, cell) -> bool:
    return cell == config.tank or cell in config.houses


def navigable(state: TerrainState, cell) -> bool:
    """Whether the character may stand on ``cell`` (elevation aside)."""
    cfg = state.config
    if not cfg.in_bounds(cell):
        return False
    if is_static(cfg, cell):
        return False
    if state.placement_at(cell) == FENCE:
        return False
    if cell in cfg.river and state.placement_at(cell) != BRIDGE:
        return False
    return True


def _step_allowed(state: TerrainState, src, dst) -> bool:
    cfg = state.config
    delta = cfg.elevation_at(dst) - cfg.elevation_at(src)
    if delta == 0:
        return True
    if abs(delta) != 1:
        return False
    higher = dst if delta > 0 else src
    return state.placement_at(higher) == LADDER


def reachable_cells(state: TerrainState) -> set:
    """Cells the character can walk to from its current position."""
    seen = {state.character}
    frontier = [state.character]
    while frontier:
        cur = frontier.pop()
        for dx, dy in DIRECTIONS.values():
            nxt = (cur[0] + dx, cur[1] + dy)
            if nxt in seen or not navigable(state, nxt):
                continue
            if not _step_allowed(state, cur, nxt):
                continue
            seen.add(nxt)
            frontier.append(nxt)
    return seen


def move_character(state: TerrainState, direction: str) -> TerrainState:
    if direction not in DIRECTIONS:
        raise Blocked("OutOfBounds", f"unknown direction {direction!r}")
    dx, dy = DIRECTIONS[direction]
    dst = (state.character[0] + dx, state.character[1] + dy)
    cfg = state.config
    if not cfg.in_bounds(dst):
        raise Blocked("OutOfBounds", f"{dst} is outside the grid")
    if is_static(cfg, dst) or state.placement_at(dst) == FENCE:
        raise Blocked("Occupied", f"{dst} is occupied")
    if dst in cfg.river and state.placement_at(dst) != BRIDGE:
        raise Blocked("River", f"{dst} is river without a bridge")
    if not _step_allowed(state, state.character, dst):
        raise Blocked("ElevationStep", f"no ladder between {state.character} and {dst}")
    return replace(state, character=dst)


# --- dynamic asset placement --------------------------------------------------

def place_asset(state: TerrainState, kind: str, cell) -> TerrainState:
    if kind not in PLACEABLE:
        raise InvalidLocation(f"{kind!r} is not placeable")
    cfg = state.config
    if state.count(kind) < 1:
        raise NotInInventory(f"no {kind} in inventory")
    if not cfg.in_bounds(cell):
        raise InvalidLocation(f"{cell} is outside the grid")
    if is_static(cfg, cell) or cell == cfg.shop:
        raise Occupied(f"{cell} holds a static asset")
    if state.placement_at(cell) is not None:
        raise Occupied(f"{cell} already holds a placement")
    if cell == state.character:
        raise Occupied("cannot place under the character")

    if kind == BRIDGE:
        if cell not in cfg.river:
            raise InvalidLocation("bridges go on river cells")
    elif kind == LADDER:
        if cell in cfg.river:
            raise InvalidLocation("ladders cannot stand in the river")
        here = cfg.elevation_at(cell)
        below = [
            (cell[0] + dx, cell[1] + dy)
            for dx, dy in DIRECTIONS.values()
            if cfg.in_bounds((cell[0] + dx, cell[1] + dy))
        ]
        if not any(cfg.elevation_at(n) == here - 1 for n in below):
            raise InvalidLocation("ladders go on cells one level above a neighbour")
    else:  # fence
        tx, ty = cfg.tank
        ring = {(tx + dx, ty + dy) for dx, dy in DIRECTIONS.values()}
        if cell not in ring:
            raise InvalidLocation("fences go on cells bordering the tank")
        if cell in cfg.river:
            raise InvalidLocation("fences cannot stand in the river")

    new = state._with_inventory(kind, -1)
    return replace(new, placements=state.placements + ((cell, kind),))


# --- pipe network -------------------------------------------------------------

class PressureLedger:
    """Per-node pressures for a tank-rooted pipe tree."""

    def __init__(self, values: dict):
        self._values = dict(values)

    def at(self, node) -> int:
        return self._values[node]

    def min_pressure(self) -> int:
        return min(self._values.values())

    def as_dict(self) -> dict:
        return dict(self._values)

    def __contains__(self, node) -> bool:
        return node in self._values

    def __len__(self) -> int:
        return len(self._values)


def compute_ledger(state: TerrainState) -> PressureLedger:
    cfg = state.config
    model = cfg.pressure
    boosts = Counter(state.boosts)
    pressure = {state.tank_node: model.source_head}
    # segments are recorded in placement order, so upstream precedes downstream;
    # a boost at a node acts on everything below it, not on the node itself
    for seg in state.segments:
        pressure[seg.b] = (
            pressure[seg.a]
            + boosts[seg.a] * model.boost_amount
            - cfg.pipe(seg.pipe).decrement
        )
    return PressureLedger(pressure)


def _segment_into(state: TerrainState, node):
    for seg in state.segments:
        if seg.b == node:
            return seg
    return None


def _valid_pipe_cell(state: TerrainState, cell, level: int):
    cfg = state.config
    if not cfg.in_bounds(cell):
        raise GeometryMismatch(f"{cell} is outside the grid")
    if cell == cfg.shop:
        raise GeometryMismatch("pipes cannot enter the shop")
    if level < 0 or level > cfg.elevation_at(cell):
        raise GeometryMismatch(f"level {level} floats above {cell}")
    if cell in cfg.river and state.placement_at(cell) != BRIDGE:
        raise GeometryMismatch(f"{cell} is river without a bridge")


def lay_pipe(state: TerrainState, pipe_name: str, placement) -> TerrainState:
    cfg = state.config
    pipe = cfg.pipe(pipe_name)
    if state.count(pipe_name) < 1:
        raise NotInInventory(f"no {pipe_name} pipe in inventory")

    if isinstance(placement, HorizontalPlacement):
        if pipe.orientation != "horizontal":
            raise GeometryMismatch(f"{pipe_name} is not a horizontal pipe")
        ax, ay = placement.cell_a
        bx, by = placement.cell_b
        if abs(ax - bx) + abs(ay - by) != 1:
            raise GeometryMismatch("horizontal pipes join edge-adjacent cells")
        _valid_pipe_cell(state, placement.cell_a, placement.level)
        _valid_pipe_cell(state, placement.cell_b, placement.level)
        end_a = (ax, ay, placement.level)
        end_b = (bx, by, placement.level)
    elif isinstance(placement, VerticalPlacement):
        if pipe.orientation != "vertical":
            raise GeometryMismatch(f"{pipe_name} is not a vertical pipe")
        x, y = placement.cell
        _valid_pipe_cell(state, placement.cell, placement.lower_level)
        _valid_pipe_cell(state, placement.cell, placement.lower_level + 1)
        end_a = (x, y, placement.lower_level)
        end_b = (x, y, placement.lower_level + 1)
    else:
        raise GeometryMismatch(f"unknown placement {placement!r}")

    nodes = state.network_nodes()
    a_in, b_in = end_a in nodes, end_b in nodes
    if a_in and b_in:
        raise GeometryMismatch("both ends already carry water (loops not allowed)")
    if not a_in and not b_in:
        raise Disconnected("neither end touches the tank or the network")
    upstream, downstream = (end_a, end_b) if a_in else (end_b, end_a)

    feeder = _segment_into(state, upstream)
    if feeder is not None and pipe.diameter > cfg.pipe(feeder.pipe).diameter:
        raise DiameterMismatch(
            f"{pipe_name} is wider than the upstream {feeder.pipe} segment"
        )

    seg = PipeSegment(pipe_name, upstream, downstream)
    new = state._with_inventory(pipe_name, -1)
    new = replace(new, segments=state.segments + (seg,))
    ledger = compute_ledger(new)
    if ledger.min_pressure() < cfg.pressure.min_pressure:
        new = replace(new, breached=True)
    return new


def apply_boost(state: TerrainState, node) -> TerrainState:
    node = tuple(node)
    cfg = state.config
    used = len(state.boosts)
    if used >= cfg.pressure.boost_uses or state.count("clock") < 1:
        raise NoUsesLeft("no pump boosts remaining")
    if node not in state.network_nodes():
        raise NotOnNetwork(f"{node} carries no pipe")
    new = state._with_inventory("clock", -1)
    return replace(new, boosts=state.boosts + (node,))


# --- outcome -------------------------------------------------------------------

IN_PROGRESS, WON, LOST = "in_progress", "won", "lost"


def check_outcome(state: TerrainState) -> str:
    if state.breached:
        return LOST
    cfg = state.config
    ledger = compute_ledger(state)
    for house in cfg.houses:
        inlet = (house[0], house[1], cfg.elevation_at(house))
        if inlet not in ledger or ledger.at(inlet) < cfg.pressure.min_pressure:
            return IN_PROGRESS
    if cfg.require_fence and not state.tank_fenced():
        return IN_PROGRESS
    return WON


# --- portals ---------------------------------------------------------------------

def portal_candidates(state: TerrainState):
    cfg = state.config
    cells = sorted(
        c
        for c in reachable_cells(state)
        if c != state.character
        and c != cfg.shop
        and state.placement_at(c) is None
        and c not in cfg.river
    )
    return cells


def tick_portal(state: TerrainState, cube_solved: bool) -> TerrainState:
    """Advance the action counter; maybe spawn a portal.

    A portal appears every ``portal_period`` actions while the cube is
    unsolved and no portal is already up, on a seeded pseudo-random
    reachable free cell."""
    counter = state.action_counter + 1
    state = replace(state, action_counter=counter)
    if cube_solved or state.portal is not None:
        return state
    if counter % state.config.portal_period != 0:
        return state
    cells = portal_candidates(state)
    if not cells:
        return state
    rng = random.Random(state.config.portal_seed * 1000003 + state.portal_count)
    cell = cells[rng.randrange(len(cells))]
    return replace(state, portal=cell, portal_count=state.portal_count + 1)


def consume_portal(state: TerrainState) -> TerrainState:
    return replace(state, portal=None)


# --- shop ---------------------------------------------------------------------

def shop_buy(state: TerrainState, pipe_name: str) -> TerrainState:
    cfg = state.config
    if state.character != cfg.shop:
        raise NotAtShop("the character is not at the shop")
    pipe = cfg.pipe(pipe_name)
    if state.count("money") < pipe.price:
        raise InsufficientFunds(
            f"{pipe_name} costs {pipe.price}, have {state.count('money')}"
        )
    new = state._with_inventory("money", -pipe.price)
    return new._with_inventory(pipe_name, +1)


# --- cube-cell asset grants ------------------------------------------------------

def correct_cells(state: CubeState):
    """Cells whose cubie sits in its solved slot with its solved twist."""
    cells = []
    for slot in range(8):
        if state.perm[slot] == slot and state.orient[slot] == 0:
            cells.extend(cube_mod.CORNER_FACELETS[slot])
    return frozenset(cells)


def grant_assets(
    cube_state: CubeState,
    face_map: FaceClassMap,
    already_granted: frozenset,
    money_value: int,
):
    """Inventory delta for newly-correct cube cells.

    Returns (items Counter, granted cell set).  Money cells convert to
    coins at ``money_value`` each."""
    canonical = cube_mod.canonicalize(cube_state)
    fresh = correct_cells(canonical) - already_granted
    items = Counter()
    for face, _ in fresh:
        cls_ = face_map.face_to_class(face)
        if cls_ is AssetClass.MONEY:
            items["money"] += money_value
        else:
            items[_CLASS_ITEM[cls_]] += 1
    return items, already_granted | fresh


# --- serialization ----------------------------------------------------------------

def state_to_dict(state: TerrainState) -> dict:
    return {
        "character": list(state.character),
        "placements": [[list(c), k] for c, k in state.placements],
        "segments": [
            {"pipe": s.pipe, "a": list(s.a), "b": list(s.b)} for s in state.segments
        ],
        "boosts": [list(b) for b in state.boosts],
        "inventory": {k: v for k, v in state.inventory},
        "portal": list(state.portal) if state.portal else None,
        "action_counter": state.action_counter,
        "portal_count": state.portal_count,
        "breached": state.breached,
    }


def state_from_dict(config: TerrainConfig, doc: dict) -> TerrainState:
    return TerrainState(
        config=config,
        character=tuple(doc["character"]),
        placements=tuple((tuple(c), k) for c, k in doc["placements"]),
        segments=tuple(
            PipeSegment(s["pipe"], tuple(s["a"]), tuple(s["b"]))
            for s in doc["segments"]
        ),
        boosts=tuple(tuple(b) for b in doc["boosts"]),
        inventory=tuple(sorted(doc["inventory"].items())),
        portal=tuple(doc["portal"]) if doc["portal"] else None,
        action_counter=doc["action_counter"],
        portal_count=doc["portal_count"],
        breached=doc["breached"],
    )


def config_to_dict(config: TerrainConfig) -> dict:
    return {
        "width": config.width,
        "height": config.height,
        "elevation": ["".join(str(v) for v in row) for row in config.elevation],
        "river": sorted(list(c) for c in config.river),
        "tank": list(config.tank),
        "shop": list(config.shop),
        "houses": [list(h) for h in config.houses],
        "start": list(config.start),
        "portal_seed": config.portal_seed,
        "portal_period": config.portal_period,
        "pressure": {
            "source_head": config.pressure.source_head,
            "min_pressure": config.pressure.min_pressure,
            "boost_amount": config.pressure.boost_amount,
            "boost_uses": config.pressure.boost_uses,
        },
        "pipes": [
            {
                "name": p.name,
                "orientation": p.orientation,
                "diameter": p.diameter,
                "decrement": p.decrement,
                "price": p.price,
            }
            for p in config.pipes
        ],
        "money_value": config.money_value,
        "require_fence": config.require_fence,
    }


def config_from_dict(doc: dict) -> TerrainConfig:
    return TerrainConfig(
        width=doc["width"],
        height=doc["height"],
        elevation=tuple(tuple(int(ch) for ch in row) for row in doc["elevation"]),
        river=frozenset(tuple(c) for c in doc["river"]),
        tank=tuple(doc["tank"]),
        shop=tuple(doc["shop"]),
        houses=tuple(tuple(h) for h in doc["houses"]),
        start=tuple(doc["start"]),
        portal_seed=doc["portal_seed"],
        portal_period=doc["portal_period"],
        pressure=PressureModel(**doc["pressure"]),
        pipes=tuple(PipeType(**p) for p in doc["pipes"]),
        money_value=doc["money_value"],
        require_fence=doc["require_fence"],
    ).validate()


# --- text config format -----------------------------------------------------------
# "key: value" lines plus an elevation block of per-row digit strings.
# Coordinates are "x,y" tokens.  Unknown keys are returned to the caller,
# which lets the session layer keep its own settings in the same file.

def _parse_cell(token: str):
    x, _, y = token.partition(",")
    return (int(x), int(y))


def parse_config_text(text: str):
    """Parse the scenario file; returns (TerrainConfig, extra key/value dict)."""
    fields: dict = {}
    extras: dict = {}
    rows = []
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        line = lines[i].split("#", 1)[0].rstrip()
        i += 1
        if not line.strip():
            continue
        if line.strip() == "elevation:":
            while i < len(lines):
                row = lines[i].split("#", 1)[0].strip()
                if not row:
                    break
                if not row.isdigit():
                    break
                rows.append(tuple(int(ch) for ch in row))
                i += 1
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise InvalidConfig(f"unparseable config line {line!r}")
        key, value = key.strip(), value.strip()
        if key in ("width", "height", "portal_seed", "portal_period",
                   "source_head", "min_pressure", "boost_amount", "boost_uses",
                   "money_value"):
            fields[key] = int(value)
        elif key in ("tank", "shop", "start"):
            fields[key] = _parse_cell(value)
        elif key in ("river", "houses"):
            fields[key] = tuple(_parse_cell(tok) for tok in value.split())
        elif key == "require_fence":
            fields[key] = value.lower() in ("1", "true", "yes", "on")
        elif key == "pipe":
            name, orientation, diameter, decrement, price = value.split()
            fields.setdefault("pipes", []).append(
                PipeType(name, orientation, int(diameter), int(decrement), int(price))
            )
        else:
            extras[key] = value

    try:
        pressure = PressureModel(
            source_head=fields.pop("source_head", 100),
            min_pressure=fields.pop("min_pressure", 20),
            boost_amount=fields.pop("boost_amount", 30),
            boost_uses=fields.pop("boost_uses", 3),
        )
        config = TerrainConfig(
            width=fields["width"],
            height=fields["height"],
            elevation=tuple(rows),
            river=frozenset(fields.get("river", ())),
            tank=fields["tank"],
            shop=fields["shop"],
            houses=tuple(fields["houses"]),
            start=fields["start"],
            portal_seed=fields.get("portal_seed", 7),
            portal_period=fields.get("portal_period", 6),
            pressure=pressure,
            pipes=tuple(fields.get("pipes", DEFAULT_PIPES)),
            money_value=fields.get("money_value", 5),
            require_fence=fields.get("require_fence", False),
        ).validate()
    except KeyError as exc:
        raise InvalidConfig(f"missing config key {exc.args[0]!r}") from None
    return config, extras


def format_config_text(config: TerrainConfig, extras: dict | None = None) -> str:
    lines = [
        f"width: {config.width}",
        f"height: {config.height}",
        "elevation:",
    ]
    lines += ["  " + "".join(str(v) for v in row) for row in config.elevation]
    lines += [
        "river: " + " ".join(f"{x},{y}" for x, y in sorted(config.river)),
        f"tank: {config.tank[0]},{config.tank[1]}",
        f"shop: {config.shop[0]},{config.shop[1]}",
        "houses: " + " ".join(f"{x},{y}" for x, y in config.houses),
        f"start: {config.start[0]},{config.start[1]}",
        f"portal_seed: {config.portal_seed}",
        f"portal_period: {config.portal_period}",
        f"source_head: {config.pressure.source_head}",
        f"min_pressure: {config.pressure.min_pressure}",
        f"boost_amount: {config.pressure.boost_amount}",
        f"boost_uses: {config.pressure.boost_uses}",
        f"money_value: {config.money_value}",
        f"require_fence: {'true' if config.require_fence else 'false'}",
    ]
    lines += [
        f"pipe: {p.name} {p.orientation} {p.diameter} {p.decrement} {p.price}"
        for p in config.pipes
    ]
    for k, v in (extras or {}).items():
        lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


# The shipped scenario: a river column splits the map, the tank feeds three
# houses on the far side, the third house sits on a raised plateau.
DEFAULT_TERRAIN = TerrainConfig(
    width=12,
    height=9,
    elevation=tuple(
        tuple(int(ch) for ch in row)
        for row in (
            "000000000000",
            "000000000000",
            "000000000000",
            "000000000000",
            "000000000000",
            "000000001111",
            "000000001111",
            "000000001111",
            "000000000000",
        )
    ),
    river=frozenset((5, y) for y in range(9)),
    tank=(1, 4),
    shop=(3, 1),
    houses=((6, 4), (9, 4), (10, 5)),
    start=(2, 2),
    portal_seed=7,
    portal_period=6,
    require_fence=True,
).validate()

DEFAULT_TERRAIN_TEXT = format_config_text(DEFAULT_TERRAIN)
