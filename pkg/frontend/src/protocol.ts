// Wire types for the session service. The client renders what the server
// says and never re-derives game rules locally.

export type Face = "U" | "D" | "L" | "R" | "F" | "B";
export type Dir = "cw" | "ccw" | "half";
export type Mode = "terrain" | "cube";
export type Outcome = "in_progress" | "won" | "lost";

export type Cell = [number, number];
export type Node3 = [number, number, number];

export type CueJson =
  | { type: "layer"; face: Face; dir: Dir; character: [Face, number]; target: [Face, number] }
  | { type: "cube"; axis: "x" | "y" | "z"; dir: Dir }
  | { type: "checkpoint"; which: "phase1" | "solved" }
  | { type: "none" };

export interface CubeView {
  scanned: boolean;
  stage: string | null;
  cursor: number;
  plan_length: number;
  plan: string;
  deviations: number;
  pose: number;
  phase1_done: boolean;
  cube_done: boolean;
  state: { perm: number[]; orient: number[] } | null;
}

export interface TerrainView {
  width: number;
  height: number;
  elevation: string[];
  river: Cell[];
  tank: Cell;
  shop: Cell;
  houses: Cell[];
  character: Cell;
  placements: [Cell, string][];
  segments: { pipe: string; a: Node3; b: Node3 }[];
  boosts: Node3[];
  portal: Cell | null;
  pressures: Record<string, number>;
  tank_fenced: boolean;
  action_counter: number;
  min_pressure: number;
}

export interface SessionView {
  id: string;
  mode: Mode;
  outcome: Outcome;
  outcome_reason: string | null;
  tick: number;
  seq: number;
  inventory: Record<string, number>;
  cube: CubeView;
  terrain: TerrainView;
  cue: CueJson;
}

export interface EventDoc {
  seq: number;
  tick: number;
  kind: string;
  payload: Record<string, any>;
}

export interface ServiceErrorBody {
  type: string;
  detail: string;
  reason?: string;
}

// --- terrain action builders -------------------------------------------------

export type TerrainAction = Record<string, unknown> & { action: string };

export const actions = {
  move(direction: "N" | "S" | "E" | "W"): TerrainAction {
    return { action: "move", direction };
  },
  place(asset: "bridge" | "ladder" | "fence", cell: Cell): TerrainAction {
    return { action: "place", asset, cell };
  },
  pipeH(pipe: string, from: Cell, to: Cell, level: number): TerrainAction {
    return { action: "pipe", pipe, from, to, level };
  },
  pipeV(pipe: string, cell: Cell, level: number): TerrainAction {
    return { action: "pipe", pipe, cell, level };
  },
  boost(node: Node3): TerrainAction {
    return { action: "boost", node };
  },
  buy(pipe: string): TerrainAction {
    return { action: "buy", pipe };
  },
  enterPortal(): TerrainAction {
    return { action: "enter_portal" };
  },
};

const SUFFIX: Record<Dir, string> = { cw: "", half: "2", ccw: "'" };

/** Face-turn token ("U", "R'", "F2") for a cue or button press. */
export function moveToken(face: string, dir: Dir): string {
  return face + SUFFIX[dir];
}

/** The opposite-direction token; half turns are their own inverse. */
export function invertToken(face: string, dir: Dir): string {
  const flipped: Dir = dir === "cw" ? "ccw" : dir === "ccw" ? "cw" : "half";
  return moveToken(face, flipped);
}
