"""Game session: the Terrain <-> Cube mode state machine.

A session owns one terrain state, at most one cube in progress, the
inventory, an append-only event log and a terminal outcome.  All engine
calls are pure; the session serializes inputs, so replaying the logged
inputs against the same config reproduces the session exactly.

Time is a logical action counter; the service layer may attach wall-clock
times out of band but they never enter the log.
"""

import json
import uuid
from dataclasses import dataclass, replace

from . import cues, solver, terrain
from .cube import (
    CubeState,
    Classification,
    DEFAULT_FACE_MAP,
    FaceClassMap,
    IDENTITY_POSE,
    Move,
    ROTATION_MOVES,
    apply_move,
    apply_moves,
    canonical_pose,
    classify,
    decode_scan,
    format_scan_text,
    parse_move,
    parse_scan_text,
)
from .cube import AssetClass
from .errors import (
    CorruptLog,
    InvalidConfig,
    NotInInventory,
    ScanRejected,
    SchemaVersionMismatch,
    SessionOver,
    WrongMode,
)

SCHEMA_VERSION = 1

TERRAIN_MODE, CUBE_MODE = "terrain", "cube"
PHASE1, PHASE2 = "phase1", "phase2"


@dataclass(frozen=True)
class GameConfig:
    terrain: terrain.TerrainConfig
    face_map: FaceClassMap = DEFAULT_FACE_MAP
    max_incorrect: int = 3
    reset_deviations_at_checkpoint: bool = False
    portal_key_cost: int = 1
    first_entry_free: bool = True

    def policy(self) -> cues.DeviationPolicy:
        return cues.DeviationPolicy(
            self.max_incorrect, self.reset_deviations_at_checkpoint
        )

    def to_dict(self) -> dict:
        return {
            "terrain": terrain.config_to_dict(self.terrain),
            "face_map": self.face_map.to_dict(),
            "max_incorrect": self.max_incorrect,
            "reset_deviations_at_checkpoint": self.reset_deviations_at_checkpoint,
            "portal_key_cost": self.portal_key_cost,
            "first_entry_free": self.first_entry_free,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "GameConfig":
        fm = {
            f: AssetClass(code) for f, code in doc["face_map"].items()
        }
        return cls(
            terrain=terrain.config_from_dict(doc["terrain"]),
            face_map=FaceClassMap.from_dict(fm),
            max_incorrect=doc["max_incorrect"],
            reset_deviations_at_checkpoint=doc["reset_deviations_at_checkpoint"],
            portal_key_cost=doc["portal_key_cost"],
            first_entry_free=doc["first_entry_free"],
        )

    @classmethod
    def from_text(cls, text: str) -> "GameConfig":
        tcfg, extras = terrain.parse_config_text(text)
        kwargs = {}
        if "max_incorrect" in extras:
            kwargs["max_incorrect"] = int(extras["max_incorrect"])
        if "reset_deviations_at_checkpoint" in extras:
            kwargs["reset_deviations_at_checkpoint"] = extras[
                "reset_deviations_at_checkpoint"
            ].lower() in ("1", "true", "yes", "on")
        if "portal_key_cost" in extras:
            kwargs["portal_key_cost"] = int(extras["portal_key_cost"])
        if "first_entry_free" in extras:
            kwargs["first_entry_free"] = extras["first_entry_free"].lower() in (
                "1", "true", "yes", "on"
            )
        if "face_map" in extras:
            pairs = dict(tok.split("=") for tok in extras["face_map"].split())
            fm = {f: AssetClass(code) for f, code in pairs.items()}
            kwargs["face_map"] = FaceClassMap.from_dict(fm)
        return cls(terrain=tcfg, **kwargs)

    def to_text(self) -> str:
        extras = {
            "max_incorrect": self.max_incorrect,
            "reset_deviations_at_checkpoint": str(
                self.reset_deviations_at_checkpoint
            ).lower(),
            "portal_key_cost": self.portal_key_cost,
            "first_entry_free": str(self.first_entry_free).lower(),
            "face_map": " ".join(
                f"{f}={c.value}" for f, c in sorted(self.face_map.mapping)
            ),
        }
        return terrain.format_config_text(self.terrain, extras)


DEFAULT_CONFIG = GameConfig(terrain.DEFAULT_TERRAIN)


# --- terrain actions ----------------------------------------------------------

@dataclass(frozen=True)
class MoveAction:
    direction: str


@dataclass(frozen=True)
class PlaceAction:
    kind: str
    cell: tuple


@dataclass(frozen=True)
class PipeAction:
    pipe: str
    placement: object  # HorizontalPlacement | VerticalPlacement


@dataclass(frozen=True)
class BoostAction:
    node: tuple


@dataclass(frozen=True)
class BuyAction:
    pipe: str


@dataclass(frozen=True)
class EnterPortalAction:
    pass


def action_from_dict(doc: dict):
    kind = doc.get("action")
    if kind == "move":
        return MoveAction(doc["direction"])
    if kind == "place":
        return PlaceAction(doc["asset"], tuple(doc["cell"]))
    if kind == "pipe":
        if "cell" in doc:
            placement = terrain.VerticalPlacement(tuple(doc["cell"]), doc["level"])
        else:
            placement = terrain.HorizontalPlacement(
                tuple(doc["from"]), tuple(doc["to"]), doc["level"]
            )
        return PipeAction(doc["pipe"], placement)
    if kind == "boost":
        return BoostAction(tuple(doc["node"]))
    if kind == "buy":
        return BuyAction(doc["pipe"])
    if kind == "enter_portal":
        return EnterPortalAction()
    raise InvalidConfig(f"unknown terrain action {kind!r}")


def action_to_dict(action) -> dict:
    if isinstance(action, MoveAction):
        return {"action": "move", "direction": action.direction}
    if isinstance(action, PlaceAction):
        return {"action": "place", "asset": action.kind, "cell": list(action.cell)}
    if isinstance(action, PipeAction):
        p = action.placement
        if isinstance(p, terrain.VerticalPlacement):
            return {
                "action": "pipe",
                "pipe": action.pipe,
                "cell": list(p.cell),
                "level": p.lower_level,
            }
        return {
            "action": "pipe",
            "pipe": action.pipe,
            "from": list(p.cell_a),
            "to": list(p.cell_b),
            "level": p.level,
        }
    if isinstance(action, BoostAction):
        return {"action": "boost", "node": list(action.node)}
    if isinstance(action, BuyAction):
        return {"action": "buy", "pipe": action.pipe}
    if isinstance(action, EnterPortalAction):
        return {"action": "enter_portal"}
    raise TypeError(f"not a terrain action: {action!r}")


# --- events ---------------------------------------------------------------------

@dataclass(frozen=True)
class Event:
    seq: int
    tick: int  # logical time = accepted inputs so far
    kind: str
    payload: dict

    def to_dict(self) -> dict:
        return {"seq": self.seq, "tick": self.tick, "kind": self.kind,
                "payload": self.payload}

    @classmethod
    def from_dict(cls, doc: dict) -> "Event":
        return cls(doc["seq"], doc["tick"], doc["kind"], doc["payload"])


INPUT_KINDS = ("scan", "move", "placement", "purchase", "boost")


def _state_payload(state: CubeState) -> dict:
    return {"perm": list(state.perm), "orient": list(state.orient)}


def _state_from_payload(doc: dict) -> CubeState:
    return CubeState(tuple(doc["perm"]), tuple(doc["orient"]))


class GameSession:
    """Single game; callers must serialize access per session."""

    def __init__(self, config: GameConfig, session_id: str | None = None,
                 seed: int | None = None):
        if seed is not None:
            config = replace(
                config, terrain=replace(config.terrain, portal_seed=seed)
            )
        config.terrain.validate()
        self.id = session_id or uuid.uuid4().hex
        self.config = config
        self.mode = TERRAIN_MODE
        self.outcome = terrain.IN_PROGRESS
        self.outcome_reason: str | None = None
        self.terrain = terrain.initial_state(config.terrain)
        self.cube_state: CubeState | None = None
        self.pose = IDENTITY_POSE
        self.plan: solver.Plan | None = None
        self.cursor = 0
        self.deviations = 0
        self.phase1_done = False
        self.cube_done = False
        self.cube_entries = 0
        self.granted: frozenset = frozenset()
        self.events: list[Event] = []
        self.tick = 0

    # -- internals --

    def _emit(self, kind: str, payload: dict):
        self.events.append(Event(len(self.events) + 1, self.tick, kind, payload))

    def _require_live(self):
        if self.outcome != terrain.IN_PROGRESS:
            raise SessionOver(f"session already {self.outcome}")

    def _require_mode(self, mode: str):
        if self.mode != mode:
            raise WrongMode(f"action requires {mode} mode, session is in {self.mode}")

    @property
    def phase(self) -> str:
        return PHASE2 if self.phase1_done else PHASE1

    def _lab_state(self) -> CubeState:
        return apply_moves(self.cube_state, ROTATION_MOVES[self.pose])

    def current_cue(self):
        if (
            self.mode != CUBE_MODE
            or self.cube_state is None
            or self.plan is None
            or self.outcome != terrain.IN_PROGRESS
        ):
            return cues.NoCue()
        fired = set()
        if self.phase1_done:
            fired.add(solver.PHASE1)
        if self.cube_done:
            fired.add(solver.SOLVED_CHECKPOINT)
        return cues.next_cue(self.plan, self.cursor, self.pose, frozenset(fired))

    def _emit_cue(self):
        self._emit("cue", {"cue": cues.cue_to_json(self.current_cue())})

    def _grant_for_state(self):
        items, self.granted = terrain.grant_assets(
            self.cube_state,
            self.config.face_map,
            self.granted,
            self.config.terrain.money_value,
        )
        if items:
            self.terrain = self.terrain.add_items(items)
        return dict(sorted(items.items()))

    def _fire_checkpoints(self, transport_on_phase1: bool = True) -> bool:
        """Grant assets and transport on newly-attained checkpoints.

        A scan that reveals an already bottom-layer-solved cube grants its
        cells but keeps the player at the cube for the remaining phase
        (``transport_on_phase1=False``)."""
        stage = classify(self.cube_state)
        transported = False
        if stage in (Classification.PHASE1_SOLVED, Classification.SOLVED):
            if not self.phase1_done:
                granted = self._grant_for_state()
                self.phase1_done = True
                if self.config.reset_deviations_at_checkpoint:
                    self.deviations = 0
                transported = (
                    self.mode == CUBE_MODE
                    and transport_on_phase1
                    and stage is not Classification.SOLVED
                )
                self._emit(
                    "checkpoint",
                    {
                        "which": PHASE1,
                        "granted": granted,
                        "inventory": dict(self.terrain.inventory),
                        "mode": TERRAIN_MODE if transported else self.mode,
                    },
                )
        if stage is Classification.SOLVED and not self.cube_done:
            granted = self._grant_for_state()
            self.cube_done = True
            if self.config.reset_deviations_at_checkpoint:
                self.deviations = 0
            transported = self.mode == CUBE_MODE
            self._emit(
                "checkpoint",
                {
                    "which": "solved",
                    "granted": granted,
                    "inventory": dict(self.terrain.inventory),
                    "mode": TERRAIN_MODE if transported else self.mode,
                },
            )
        if transported:
            self.mode = TERRAIN_MODE
        return transported

    def _lose(self, reason: str):
        self.outcome = terrain.LOST
        self.outcome_reason = reason
        self._emit("outcome", {"outcome": self.outcome, "reason": reason})

    def _check_terrain_outcome(self):
        result = terrain.check_outcome(self.terrain)
        if result == terrain.LOST:
            self.outcome = terrain.LOST
            self.outcome_reason = "pressure"
            self._emit("outcome", {"outcome": result, "reason": "pressure"})
        elif result == terrain.WON:
            self.outcome = terrain.WON
            self._emit("outcome", {"outcome": result, "reason": "houses_connected"})

    # -- scan --------------------------------------------------------------

    def submit_scan(self, observations) -> dict:
        self._require_live()
        if self.cube_state is not None:
            raise WrongMode("cube already scanned")
        decoded = decode_scan(observations, self.config.face_map)
        canonical, pose = canonical_pose(decoded)
        stage = classify(canonical)
        if self.mode == TERRAIN_MODE and stage is Classification.UNSOLVED:
            raise ScanRejected(
                "a scrambled cube can only be scanned in cube mode (enter a portal)"
            )
        self.tick += 1
        self.cube_state = canonical
        self.pose = pose
        self.plan = solver.solve_full(canonical)
        self.cursor = 0
        self._emit(
            "scan",
            {
                "faces": format_scan_text(observations),
                "stage": stage.value,
                "observed": _state_payload(decoded),
            },
        )
        self._fire_checkpoints(transport_on_phase1=False)
        if self.mode == CUBE_MODE:
            self._emit_cue()
        return {"stage": stage.value}

    # -- cube --------------------------------------------------------------

    def submit_cube_state(self, observed: CubeState | None = None,
                          move: Move | str | None = None) -> dict:
        self._require_live()
        self._require_mode(CUBE_MODE)
        if self.cube_state is None:
            raise WrongMode("scan the cube before submitting rotations")
        if (observed is None) == (move is None):
            raise WrongMode("submit exactly one of observed state or move")
        if move is not None:
            if isinstance(move, str):
                move = parse_move(move)
            lab_obs = apply_move(self._lab_state(), move)
        else:
            lab_obs = observed
        canonical_obs, new_pose = canonical_pose(lab_obs)

        prev = self.cube_state
        if self.cursor < len(self.plan.moves):
            expected = apply_move(prev, self.plan.moves[self.cursor])
        else:
            expected = prev
        result = cues.observe(
            prev,
            expected,
            canonical_obs,
            self.config.policy(),
            self.deviations,
            phase=self.phase,
            cursor=self.cursor,
            plan=self.plan,
        )

        self.tick += 1
        payload = {
            "scope": "cube",
            "observed": _state_payload(lab_obs),
        }
        if isinstance(result, cues.OnPlan):
            self.cube_state = canonical_obs
            self.cursor = result.advanced_to
            self.pose = new_pose
            payload.update(result="on_plan", cursor=self.cursor)
        elif isinstance(result, cues.NoChange):
            self.pose = new_pose
            payload.update(result="no_change", cursor=self.cursor)
        elif isinstance(result, cues.SingleDeviation):
            self.deviations += 1
            self.cube_state = canonical_obs
            self.pose = new_pose
            self.plan = result.new_plan
            self.cursor = 0
            payload.update(result="deviation", cursor=0)
        else:  # MultiDeviation
            payload.update(result="multi_deviation", cursor=self.cursor)
        payload["stage"] = classify(canonical_obs).value
        self._emit("move", payload)

        if isinstance(result, cues.SingleDeviation):
            self._emit(
                "deviation",
                {
                    "detected": result.detected_move.notation(),
                    "deviations": self.deviations,
                    "plan_length": len(result.new_plan.moves),
                },
            )
        if isinstance(result, cues.MultiDeviation):
            self._lose("cube_errors")
            return {"result": "multi_deviation", "outcome": self.outcome}

        transported = self._fire_checkpoints()
        if not transported:
            self._emit_cue()
        return {"result": payload["result"], "mode": self.mode}

    # -- terrain -------------------------------------------------------------

    def submit_terrain_action(self, action) -> dict:
        self._require_live()
        self._require_mode(TERRAIN_MODE)

        if isinstance(action, EnterPortalAction):
            if self.terrain.portal is None or self.terrain.character != self.terrain.portal:
                raise WrongMode("the character is not standing on a portal")
            cost = 0 if (self.cube_entries == 0 and self.config.first_entry_free) \
                else self.config.portal_key_cost
            if self.terrain.count("key") < cost:
                raise NotInInventory(f"portal entry costs {cost} key(s)")
            self.tick += 1
            if cost:
                self.terrain = self.terrain.add_items({"key": -cost})
            self.terrain = terrain.consume_portal(self.terrain)
            self.cube_entries += 1
            self.mode = CUBE_MODE
            self._emit(
                "move",
                {"scope": "terrain", "action": "enter_portal", "mode": CUBE_MODE,
                 "keys_left": self.terrain.count("key")},
            )
            if self.cube_state is not None:
                self._emit_cue()
            return {"mode": self.mode}

        if isinstance(action, MoveAction):
            self.terrain = terrain.move_character(self.terrain, action.direction)
            self.tick += 1
            self._emit(
                "move",
                {"scope": "terrain", "direction": action.direction,
                 "to": list(self.terrain.character)},
            )
        elif isinstance(action, PlaceAction):
            self.terrain = terrain.place_asset(self.terrain, action.kind, action.cell)
            self.tick += 1
            self._emit(
                "placement",
                {"kind": action.kind, "cell": list(action.cell),
                 "inventory": dict(self.terrain.inventory),
                 "tank_fenced": self.terrain.tank_fenced()},
            )
        elif isinstance(action, PipeAction):
            self.terrain = terrain.lay_pipe(self.terrain, action.pipe, action.placement)
            self.tick += 1
            ledger = terrain.compute_ledger(self.terrain)
            self._emit(
                "placement",
                {
                    "kind": "pipe",
                    "pipe": action.pipe,
                    "spec": action_to_dict(action),
                    "inventory": dict(self.terrain.inventory),
                    "pressures": {
                        f"{x},{y},{z}": v for (x, y, z), v in sorted(
                            ledger.as_dict().items()
                        )
                    },
                },
            )
        elif isinstance(action, BoostAction):
            self.terrain = terrain.apply_boost(self.terrain, action.node)
            self.tick += 1
            ledger = terrain.compute_ledger(self.terrain)
            self._emit(
                "boost",
                {
                    "node": list(action.node),
                    "inventory": dict(self.terrain.inventory),
                    "pressures": {
                        f"{x},{y},{z}": v for (x, y, z), v in sorted(
                            ledger.as_dict().items()
                        )
                    },
                },
            )
        elif isinstance(action, BuyAction):
            self.terrain = terrain.shop_buy(self.terrain, action.pipe)
            self.tick += 1
            self._emit(
                "purchase",
                {"pipe": action.pipe, "inventory": dict(self.terrain.inventory)},
            )
        else:
            raise InvalidConfig(f"unknown terrain action {action!r}")

        self._check_terrain_outcome()
        if self.outcome == terrain.IN_PROGRESS:
            before = self.terrain.portal
            self.terrain = terrain.tick_portal(self.terrain, self.cube_done)
            if self.terrain.portal is not None and self.terrain.portal != before:
                self._emit("portal_spawn", {"cell": list(self.terrain.portal)})
        return {"outcome": self.outcome}

    # -- views -----------------------------------------------------------------

    def view(self) -> dict:
        ledger = terrain.compute_ledger(self.terrain)
        cube_view = {
            "scanned": self.cube_state is not None,
            "stage": classify(self.cube_state).value if self.cube_state else None,
            "cursor": self.cursor,
            "plan_length": len(self.plan.moves) if self.plan else 0,
            "plan": self.plan.notation() if self.plan else "",
            "deviations": self.deviations,
            "pose": self.pose,
            "phase1_done": self.phase1_done,
            "cube_done": self.cube_done,
            "state": _state_payload(self._lab_state()) if self.cube_state else None,
        }
        cfg = self.config.terrain
        return {
            "id": self.id,
            "mode": self.mode,
            "outcome": self.outcome,
            "outcome_reason": self.outcome_reason,
            "tick": self.tick,
            "seq": len(self.events),
            "inventory": dict(self.terrain.inventory),
            "cube": cube_view,
            "terrain": {
                "width": cfg.width,
                "height": cfg.height,
                "elevation": ["".join(str(v) for v in row) for row in cfg.elevation],
                "river": sorted(list(c) for c in cfg.river),
                "tank": list(cfg.tank),
                "shop": list(cfg.shop),
                "houses": [list(h) for h in cfg.houses],
                "character": list(self.terrain.character),
                "placements": [[list(c), k] for c, k in self.terrain.placements],
                "segments": [
                    {"pipe": s.pipe, "a": list(s.a), "b": list(s.b)}
                    for s in self.terrain.segments
                ],
                "boosts": [list(b) for b in self.terrain.boosts],
                "portal": list(self.terrain.portal) if self.terrain.portal else None,
                "pressures": {
                    f"{x},{y},{z}": v
                    for (x, y, z), v in sorted(ledger.as_dict().items())
                },
                "tank_fenced": self.terrain.tank_fenced(),
                "action_counter": self.terrain.action_counter,
                "min_pressure": cfg.pressure.min_pressure,
            },
            "cue": cues.cue_to_json(self.current_cue()),
        }

    # -- persistence -------------------------------------------------------------

    def save(self) -> dict:
        return {
            "version": SCHEMA_VERSION,
            "id": self.id,
            "config": self.config.to_dict(),
            "event_count": len(self.events),
            "events": [e.to_dict() for e in self.events],
            "state": {
                "mode": self.mode,
                "outcome": self.outcome,
                "outcome_reason": self.outcome_reason,
                "tick": self.tick,
                "terrain": terrain.state_to_dict(self.terrain),
                "cube_state": _state_payload(self.cube_state)
                if self.cube_state
                else None,
                "pose": self.pose,
                "plan": [m.notation() for m in self.plan.moves] if self.plan else None,
                "plan_checkpoints": [
                    [cp.index, cp.which] for cp in self.plan.checkpoints
                ]
                if self.plan
                else None,
                "cursor": self.cursor,
                "deviations": self.deviations,
                "phase1_done": self.phase1_done,
                "cube_done": self.cube_done,
                "cube_entries": self.cube_entries,
                "granted": sorted([f, i] for f, i in self.granted),
            },
        }

    def save_json(self) -> str:
        return json.dumps(self.save(), sort_keys=True, separators=(",", ":"))


def load(doc: dict) -> GameSession:
    if doc.get("version") != SCHEMA_VERSION:
        raise SchemaVersionMismatch(
            f"expected schema {SCHEMA_VERSION}, got {doc.get('version')!r}"
        )
    if doc.get("event_count") != len(doc.get("events", [])):
        raise CorruptLog(
            f"log claims {doc.get('event_count')} events, found "
            f"{len(doc.get('events', []))}"
        )
    config = GameConfig.from_dict(doc["config"])
    session = GameSession(config, session_id=doc["id"])
    state = doc["state"]
    session.mode = state["mode"]
    session.outcome = state["outcome"]
    session.outcome_reason = state["outcome_reason"]
    session.tick = state["tick"]
    session.terrain = terrain.state_from_dict(config.terrain, state["terrain"])
    session.cube_state = (
        _state_from_payload(state["cube_state"]) if state["cube_state"] else None
    )
    session.pose = state["pose"]
    if state["plan"] is not None:
        session.plan = solver.Plan(
            tuple(parse_move(m) for m in state["plan"]),
            tuple(
                solver.PlanCheckpoint(i, w) for i, w in state["plan_checkpoints"]
            ),
        )
    session.cursor = state["cursor"]
    session.deviations = state["deviations"]
    session.phase1_done = state["phase1_done"]
    session.cube_done = state["cube_done"]
    session.cube_entries = state["cube_entries"]
    session.granted = frozenset((f, i) for f, i in state["granted"])
    seqs = [e["seq"] for e in doc["events"]]
    if seqs != list(range(1, len(seqs) + 1)):
        raise CorruptLog("event sequence numbers are not contiguous")
    session.events = [Event.from_dict(e) for e in doc["events"]]
    return session


def replay(events, config: GameConfig, session_id: str = "replay") -> GameSession:
    """Rebuild a session by re-submitting the logged inputs."""
    session = GameSession(config, session_id=session_id)
    seq = 0
    for event in events:
        doc = event.to_dict() if isinstance(event, Event) else dict(event)
        if doc["seq"] <= seq:
            raise CorruptLog("event sequence numbers are not increasing")
        seq = doc["seq"]
        kind, payload = doc["kind"], doc["payload"]
        try:
            if kind == "scan":
                session.submit_scan(parse_scan_text(payload["faces"]))
            elif kind == "move" and payload.get("scope") == "cube":
                session.submit_cube_state(
                    observed=_state_from_payload(payload["observed"])
                )
            elif kind == "move" and payload.get("action") == "enter_portal":
                session.submit_terrain_action(EnterPortalAction())
            elif kind == "move" and payload.get("scope") == "terrain":
                session.submit_terrain_action(MoveAction(payload["direction"]))
            elif kind == "placement" and payload["kind"] == "pipe":
                session.submit_terrain_action(action_from_dict(payload["spec"]))
            elif kind == "placement":
                session.submit_terrain_action(
                    PlaceAction(payload["kind"], tuple(payload["cell"]))
                )
            elif kind == "purchase":
                session.submit_terrain_action(BuyAction(payload["pipe"]))
            elif kind == "boost":
                session.submit_terrain_action(BoostAction(tuple(payload["node"])))
            elif kind in ("cue", "deviation", "portal_spawn", "checkpoint", "outcome"):
                continue
            else:
                raise CorruptLog(f"unknown event kind {kind!r}")
        except CorruptLog:
            raise
        except Exception as exc:  # noqa: BLE001 - replays must fail loudly
            raise CorruptLog(f"event {seq} does not replay: {exc}") from exc
    return session
