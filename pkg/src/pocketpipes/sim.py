"""Headless bots and the metrics runner.

A bot plays complete sessions against the engine: it wanders until a
portal spawns, solves the (virtual) physical cube by following the cues,
then executes a scripted shopping/pipe-laying plan for the shipped
scenario.  The noisy variant substitutes a wrong rotation with a fixed
probability per cube move.

Reported step counts are logical actions; the human reference row
(phase-1 21, phase-2 30, pipe laying 50, scanning 6 steps) is printed
alongside as an annotation, not a pass/fail target.
"""

import csv
import random
import statistics
from collections import deque
from dataclasses import dataclass, field

from . import cube as cube_mod
from . import session as session_mod
from . import terrain as terrain_mod
from .cube import (
    CANONICAL_MOVES,
    CubeState,
    Move,
    apply_move,
    canonical_pose,
    canonicalize,
    physical_turn,
    render_stickers,
    random_state,
)
from .session import (
    BoostAction,
    BuyAction,
    EnterPortalAction,
    GameConfig,
    GameSession,
    MoveAction,
    PipeAction,
    PlaceAction,
)
from .terrain import HorizontalPlacement, VerticalPlacement

REFERENCE_STEPS = {
    "phase1_steps": 21,
    "phase2_steps": 30,
    "pipe_laying_steps": 50,
    "scan_steps": 6,
}

# Scripted endgame for the shipped scenario: bridge the river, buy the
# pipe run, feed the three houses, ladder onto the plateau, ring the tank.
DEFAULT_TERRAIN_SCRIPT = (
    ("place", "bridge", (5, 4)),
    ("buy", "wide", 10),
    ("buy", "vertical", 1),
    ("pipe", "wide", ((1, 4), (2, 4), 0)),
    ("pipe", "wide", ((2, 4), (3, 4), 0)),
    ("pipe", "wide", ((3, 4), (4, 4), 0)),
    ("pipe", "wide", ((4, 4), (5, 4), 0)),
    ("pipe", "wide", ((5, 4), (6, 4), 0)),
    ("pipe", "wide", ((6, 4), (7, 4), 0)),
    ("pipe", "wide", ((7, 4), (8, 4), 0)),
    ("pipe", "wide", ((8, 4), (9, 4), 0)),
    ("pipe", "wide", ((9, 4), (10, 4), 0)),
    ("pipe", "wide", ((10, 4), (10, 5), 0)),
    ("pipe-v", "vertical", ((10, 5), 0)),
    ("place", "ladder", (8, 5)),
    ("place", "fence", (0, 4)),
    ("place", "fence", (2, 4)),
    ("place", "fence", (1, 3)),
    ("place", "fence", (1, 5)),
)


@dataclass(frozen=True)
class BotPolicy:
    kind: str = "perfect"  # perfect | noisy
    p_error: float = 0.0  # per cube move, noisy only
    terrain_script: tuple = DEFAULT_TERRAIN_SCRIPT

    def __post_init__(self):
        if self.kind not in ("perfect", "noisy"):
            raise ValueError(f"unknown policy {self.kind!r}")
        if not 0.0 <= self.p_error <= 1.0:
            raise ValueError("p_error must lie in [0, 1]")


@dataclass
class RunResult:
    run_index: int
    seed: int
    outcome: str
    scan_steps: int
    phase1_steps: int
    phase2_steps: int
    terrain_actions: int
    deviations: int
    optimal_phase1: int
    optimal_phase2: int

    def as_row(self) -> dict:
        return {
            "run": self.run_index,
            "seed": self.seed,
            "outcome": self.outcome,
            "scan_steps": self.scan_steps,
            "phase1_steps": self.phase1_steps,
            "phase2_steps": self.phase2_steps,
            "terrain_actions": self.terrain_actions,
            "deviations": self.deviations,
            "optimal_phase1": self.optimal_phase1,
            "optimal_phase2": self.optimal_phase2,
        }


@dataclass
class RunReport:
    policy: BotPolicy
    seed: int
    runs: list = field(default_factory=list)

    def aggregate(self) -> dict:
        outcomes = [r.outcome for r in self.runs]
        won = sum(1 for o in outcomes if o == terrain_mod.WON)

        def mean(key):
            vals = [getattr(r, key) for r in self.runs]
            return statistics.fmean(vals) if vals else 0.0

        return {
            "runs": len(self.runs),
            "won": won,
            "lost": len(self.runs) - won,
            "win_rate": won / len(self.runs) if self.runs else 0.0,
            "mean_scan_steps": mean("scan_steps"),
            "mean_phase1_steps": mean("phase1_steps"),
            "mean_phase2_steps": mean("phase2_steps"),
            "mean_terrain_actions": mean("terrain_actions"),
            "mean_deviations": mean("deviations"),
        }


class BotError(RuntimeError):
    """The bot could not make progress; indicates an engine or script bug."""


class _Bot:
    def __init__(self, session: GameSession, policy: BotPolicy, rng: random.Random):
        self.session = session
        self.policy = policy
        self.rng = rng
        self.lab_cube = self._scramble()
        self.scan_steps = 0
        self.phase1_steps = 0
        self.phase2_steps = 0
        self.terrain_actions = 0
        self.script_cursor = 0

    def _scramble(self) -> CubeState:
        state = random_state(self.rng)
        rot = cube_mod.ROTATION_MOVES[self.rng.randrange(24)]
        return cube_mod.apply_moves(state, rot)

    # -- terrain navigation --

    def _nav_view(self):
        return self.session.view()["terrain"]

    def _walkable(self, view, cell):
        x, y = cell
        if not (0 <= x < view["width"] and 0 <= y < view["height"]):
            return None
        placed = {tuple(c): k for c, k in view["placements"]}
        if list(cell) in view["houses"] or cell == tuple(view["tank"]):
            return None
        if placed.get(cell) == "fence":
            return None
        if list(cell) in view["river"] and placed.get(cell) != "bridge":
            return None
        return int(view["elevation"][y][x])

    def _path_to(self, goal) -> list:
        """Direction list from the character to ``goal`` (BFS on the view)."""
        view = self._nav_view()
        start = tuple(view["character"])
        placed = {tuple(c): k for c, k in view["placements"]}
        if start == goal:
            return []
        prev: dict = {start: None}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for name, (dx, dy) in terrain_mod.DIRECTIONS.items():
                nxt = (cur[0] + dx, cur[1] + dy)
                if nxt in prev:
                    continue
                lvl = self._walkable(view, nxt)
                if lvl is None:
                    continue
                cur_lvl = int(view["elevation"][cur[1]][cur[0]])
                if lvl != cur_lvl:
                    higher = nxt if lvl > cur_lvl else cur
                    if abs(lvl - cur_lvl) != 1 or placed.get(higher) != "ladder":
                        continue
                prev[nxt] = (cur, name)
                if nxt == goal:
                    path = []
                    node = nxt
                    while prev[node] is not None:
                        node, direction = prev[node]
                        path.append(direction)
                    path.reverse()
                    return path
                queue.append(nxt)
        raise BotError(f"no path from {start} to {goal}")

    def _do(self, action):
        self.session.submit_terrain_action(action)
        self.terrain_actions += 1

    def _walk_to(self, goal):
        for direction in self._path_to(tuple(goal)):
            self._do(MoveAction(direction))

    def _wander(self):
        view = self._nav_view()
        start = tuple(view["character"])
        for name, (dx, dy) in terrain_mod.DIRECTIONS.items():
            nxt = (start[0] + dx, start[1] + dy)
            lvl = self._walkable(view, nxt)
            if lvl is not None and lvl == int(view["elevation"][start[1]][start[0]]):
                self._do(MoveAction(name))
                return
        raise BotError(f"nowhere to wander from {start}")

    # -- cube play --

    def _count_cube_step(self):
        if self.session.phase1_done:
            self.phase2_steps += 1
        else:
            self.phase1_steps += 1

    def _cube_round(self):
        """One portal visit: scan if needed, then follow cues to a checkpoint."""
        if self.session.cube_state is None:
            obs = render_stickers(self.lab_cube, self.session.config.face_map)
            self.scan_steps += len(obs)
            self.session.submit_scan(obs)
        while (
            self.session.mode == session_mod.CUBE_MODE
            and self.session.outcome == terrain_mod.IN_PROGRESS
        ):
            cue = self.session.view()["cue"]
            if cue["type"] == "layer":
                intended = Move(cue["face"], {"cw": 1, "half": 2, "ccw": 3}[cue["dir"]])
            elif cue["type"] == "cube":
                intended = Move(cue["axis"], {"cw": 1, "half": 2, "ccw": 3}[cue["dir"]])
            else:
                raise BotError(f"no actionable cue: {cue}")
            if self.policy.kind == "noisy" and self.rng.random() < self.policy.p_error:
                self._turn_wrong()
            else:
                self.lab_cube = apply_move(self.lab_cube, intended)
            self._count_cube_step()
            self.session.submit_cube_state(observed=self.lab_cube)

    def _turn_wrong(self):
        canonical, pose = canonical_pose(self.lab_cube)
        cursor = self.session.cursor
        expected = (
            apply_move(canonical, self.session.plan.moves[cursor])
            if cursor < len(self.session.plan.moves)
            else canonical
        )
        wrong = [
            m for m in CANONICAL_MOVES if apply_move(canonical, m) != expected
        ]
        move = wrong[self.rng.randrange(len(wrong))]
        self.lab_cube = apply_move(self.lab_cube, physical_turn(move, pose))

    # -- endgame script --

    def _run_script(self):
        for step in self.policy.terrain_script:
            if self.session.outcome != terrain_mod.IN_PROGRESS:
                return
            if step[0] == "place":
                self._do(PlaceAction(step[1], step[2]))
            elif step[0] == "buy":
                self._walk_to(self.session.config.terrain.shop)
                for _ in range(step[2]):
                    self._do(BuyAction(step[1]))
            elif step[0] == "pipe":
                (a, b, level) = step[2]
                self._do(PipeAction(step[1], HorizontalPlacement(a, b, level)))
            elif step[0] == "pipe-v":
                (cell, level) = step[2]
                self._do(PipeAction(step[1], VerticalPlacement(cell, level)))
            elif step[0] == "boost":
                self._do(BoostAction(step[1]))
            else:
                raise BotError(f"unknown script step {step!r}")

    def play(self, max_actions: int = 3000):
        guard = 0
        while (
            not self.session.cube_done
            and self.session.outcome == terrain_mod.IN_PROGRESS
        ):
            guard += 1
            if guard > max_actions:
                raise BotError("cube never finished; runaway session")
            view = self.session.view()
            if view["mode"] == session_mod.CUBE_MODE:
                self._cube_round()
            elif view["terrain"]["portal"] is not None:
                self._walk_to(tuple(view["terrain"]["portal"]))
                self._do(EnterPortalAction())
            else:
                self._wander()
        if self.session.outcome == terrain_mod.IN_PROGRESS:
            self._run_script()


def play_one(policy: BotPolicy, config: GameConfig, seed: int,
             run_index: int = 0) -> RunResult:
    rng = random.Random(seed)
    session = GameSession(config, session_id=f"sim-{seed}", seed=seed)
    bot = _Bot(session, policy, rng)
    scramble = canonicalize(bot.lab_cube)
    optimal = session_mod.solver.solve_full(scramble)
    p1 = next(cp.index for cp in optimal.checkpoints if cp.which == "phase1")
    bot.play()
    return RunResult(
        run_index=run_index,
        seed=seed,
        outcome=session.outcome,
        scan_steps=bot.scan_steps,
        phase1_steps=bot.phase1_steps,
        phase2_steps=bot.phase2_steps,
        terrain_actions=bot.terrain_actions,
        deviations=session.deviations,
        optimal_phase1=p1,
        optimal_phase2=len(optimal.moves) - p1,
    )


def run(policy: BotPolicy, config: GameConfig, seed: int, n_runs: int) -> RunReport:
    if n_runs < 1:
        raise ValueError("n_runs must be >= 1")
    report = RunReport(policy=policy, seed=seed)
    for i in range(n_runs):
        report.runs.append(play_one(policy, config, seed + i, run_index=i))
    return report


def sweep(p_values, config: GameConfig, seed: int, runs_per_point: int):
    """Loss rate per error probability."""
    points = []
    for p in p_values:
        policy = BotPolicy("noisy", p_error=p) if p > 0 else BotPolicy("perfect")
        rep = run(policy, config, seed, runs_per_point)
        losses = sum(1 for r in rep.runs if r.outcome == terrain_mod.LOST)
        points.append((p, losses / runs_per_point))
    return points


def format_report(report: RunReport) -> str:
    agg = report.aggregate()
    lines = [
        f"policy={report.policy.kind} p_error={report.policy.p_error} "
        f"seed={report.seed} runs={agg['runs']}",
        f"outcomes: won={agg['won']} lost={agg['lost']} "
        f"win_rate={agg['win_rate']:.2f}",
        "mean steps: scan=%.1f phase1=%.1f phase2=%.1f terrain=%.1f deviations=%.2f"
        % (
            agg["mean_scan_steps"],
            agg["mean_phase1_steps"],
            agg["mean_phase2_steps"],
            agg["mean_terrain_actions"],
            agg["mean_deviations"],
        ),
        "human reference (steps): scan=%d phase1=%d phase2=%d pipe_laying=%d"
        % (
            REFERENCE_STEPS["scan_steps"],
            REFERENCE_STEPS["phase1_steps"],
            REFERENCE_STEPS["phase2_steps"],
            REFERENCE_STEPS["pipe_laying_steps"],
        ),
    ]
    return "\n".join(lines)


_CSV_FIELDS = (
    "run", "seed", "outcome", "scan_steps", "phase1_steps", "phase2_steps",
    "terrain_actions", "deviations", "optimal_phase1", "optimal_phase2",
)


def report_to_csv(report: RunReport, path: str):
    with open(path, "w", newline="") as fh:
        fh.write(
            "# human reference steps: scan=%d phase1=%d phase2=%d pipe_laying=%d\n"
            % (
                REFERENCE_STEPS["scan_steps"],
                REFERENCE_STEPS["phase1_steps"],
                REFERENCE_STEPS["phase2_steps"],
                REFERENCE_STEPS["pipe_laying_steps"],
            )
        )
        writer = csv.DictWriter(fh, fieldnames=_CSV_FIELDS)
        writer.writeheader()
        for result in report.runs:
            writer.writerow(result.as_row())


def sweep_to_csv(points, path: str):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["p_error", "loss_rate"])
        for p, rate in points:
            writer.writerow([p, rate])
