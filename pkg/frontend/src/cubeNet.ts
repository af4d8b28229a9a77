// Geometry of the unfolded cube net and cue overlays.
//
//        [U]
//   [L]  [F]  [R]  [B]
//        [D]
//
// Net coordinates are in cell units; each face is 2x2 cells, indexed
// row-major as the server renders them.

import { CueJson, Face } from "./protocol.js";

export interface NetCell {
  x: number;
  y: number;
}

const ORIGIN: Record<Face, NetCell> = {
  U: { x: 2, y: 0 },
  L: { x: 0, y: 2 },
  F: { x: 2, y: 2 },
  R: { x: 4, y: 2 },
  B: { x: 6, y: 2 },
  D: { x: 2, y: 4 },
};

export const NET_WIDTH = 8;
export const NET_HEIGHT = 6;

export function cellPosition(face: Face, index: number): NetCell {
  const origin = ORIGIN[face];
  return { x: origin.x + (index % 2), y: origin.y + Math.floor(index / 2) };
}

export function faceAt(x: number, y: number): { face: Face; index: number } | null {
  for (const face of Object.keys(ORIGIN) as Face[]) {
    const o = ORIGIN[face];
    if (x >= o.x && x < o.x + 2 && y >= o.y && y < o.y + 2) {
      return { face, index: (y - o.y) * 2 + (x - o.x) };
    }
  }
  return null;
}

export interface LayerOverlay {
  kind: "layer";
  character: NetCell;
  target: NetCell;
}

export interface AxisOverlay {
  kind: "axis";
  axis: "x" | "y" | "z";
  dir: string;
}

export interface CheckpointOverlay {
  kind: "checkpoint";
  which: string;
}

export type CueOverlay = LayerOverlay | AxisOverlay | CheckpointOverlay | null;

/** Where to draw the character icon, target icon and arrow for a cue. */
export function cueOverlay(cue: CueJson): CueOverlay {
  switch (cue.type) {
    case "layer":
      return {
        kind: "layer",
        character: cellPosition(cue.character[0], cue.character[1]),
        target: cellPosition(cue.target[0], cue.target[1]),
      };
    case "cube":
      return { kind: "axis", axis: cue.axis, dir: cue.dir };
    case "checkpoint":
      return { kind: "checkpoint", which: cue.which };
    default:
      return null;
  }
}

/** CSS arrow rotation (degrees) pointing from the character to the target. */
export function arrowAngle(overlay: LayerOverlay): number {
  const dx = overlay.target.x - overlay.character.x;
  const dy = overlay.target.y - overlay.character.y;
  return (Math.atan2(dy, dx) * 180) / Math.PI;
}
