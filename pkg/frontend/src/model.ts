// The view model is a pure fold of server events over the creation
// snapshot. Every field comes from facts the server sent; no game rule is
// evaluated here, which is what makes replaying the event stream reproduce
// the screen state exactly.

import { Cell, CueJson, EventDoc, Node3, SessionView } from "./protocol.js";

export interface ViewModel {
  id: string;
  mode: string;
  outcome: string;
  outcomeReason: string | null;
  character: Cell;
  portal: Cell | null;
  inventory: Record<string, number>;
  placements: [Cell, string][];
  segments: { pipe: string; a: Node3; b: Node3 }[];
  pressures: Record<string, number>;
  tankFenced: boolean;
  cue: CueJson;
  cubeScanned: boolean;
  cubeStage: string | null;
  cursor: number;
  deviations: number;
  phase1Done: boolean;
  cubeDone: boolean;
  seq: number;
  banner: string | null; // client-side error display, not server state
}

export function initialModel(view: SessionView): ViewModel {
  return {
    id: view.id,
    mode: view.mode,
    outcome: view.outcome,
    outcomeReason: view.outcome_reason,
    character: view.terrain.character,
    portal: view.terrain.portal,
    inventory: { ...view.inventory },
    placements: view.terrain.placements.map(([c, k]) => [c, k]),
    segments: [...view.terrain.segments],
    pressures: { ...view.terrain.pressures },
    tankFenced: view.terrain.tank_fenced,
    cue: view.cue,
    cubeScanned: view.cube.scanned,
    cubeStage: view.cube.stage,
    cursor: view.cube.cursor,
    deviations: view.cube.deviations,
    phase1Done: view.cube.phase1_done,
    cubeDone: view.cube.cube_done,
    seq: view.seq,
    banner: null,
  };
}

function pipeSegmentFromSpec(spec: Record<string, any>): {
  pipe: string;
  a: Node3;
  b: Node3;
} {
  // display geometry only; upstream/downstream orientation is cosmetic here
  if (spec.cell) {
    const [x, y] = spec.cell as Cell;
    return { pipe: spec.pipe, a: [x, y, spec.level], b: [x, y, spec.level + 1] };
  }
  const [ax, ay] = spec.from as Cell;
  const [bx, by] = spec.to as Cell;
  return { pipe: spec.pipe, a: [ax, ay, spec.level], b: [bx, by, spec.level] };
}

export function applyEvent(model: ViewModel, event: EventDoc): ViewModel {
  const next: ViewModel = {
    ...model,
    inventory: { ...model.inventory },
    placements: [...model.placements],
    segments: [...model.segments],
    pressures: { ...model.pressures },
    seq: event.seq,
  };
  const p = event.payload;
  switch (event.kind) {
    case "scan":
      next.cubeScanned = true;
      next.cubeStage = p.stage;
      break;
    case "move":
      if (p.scope === "cube") {
        next.cursor = p.cursor;
        next.cubeStage = p.stage;
      } else if (p.action === "enter_portal") {
        next.mode = p.mode;
        next.portal = null;
        if (typeof p.keys_left === "number") {
          if (p.keys_left > 0) next.inventory["key"] = p.keys_left;
          else delete next.inventory["key"];
        }
      } else {
        next.character = p.to;
      }
      break;
    case "cue":
      next.cue = p.cue;
      break;
    case "deviation":
      next.deviations = p.deviations;
      break;
    case "placement":
      next.inventory = { ...p.inventory };
      if (p.kind === "pipe") {
        next.segments.push(pipeSegmentFromSpec(p.spec));
        next.pressures = { ...p.pressures };
      } else {
        next.placements.push([p.cell, p.kind]);
        next.tankFenced = p.tank_fenced;
      }
      break;
    case "purchase":
    case "boost":
      next.inventory = { ...p.inventory };
      if (p.pressures) next.pressures = { ...p.pressures };
      break;
    case "portal_spawn":
      next.portal = p.cell;
      break;
    case "checkpoint":
      next.inventory = { ...p.inventory };
      next.mode = p.mode;
      if (p.which === "phase1") next.phase1Done = true;
      if (p.which === "solved") {
        next.phase1Done = true;
        next.cubeDone = true;
      }
      if (next.mode !== "cube") next.cue = { type: "none" };
      break;
    case "outcome":
      next.outcome = p.outcome;
      next.outcomeReason = p.reason ?? null;
      next.cue = { type: "none" };
      break;
    default:
      break; // unknown kinds are ignored, never fatal
  }
  return next;
}

export function applyEvents(model: ViewModel, events: EventDoc[]): ViewModel {
  return events.reduce(applyEvent, model);
}

export function withBanner(model: ViewModel, banner: string | null): ViewModel {
  return { ...model, banner };
}
