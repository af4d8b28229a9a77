// Pure helpers deciding what each terrain cell shows. All facts come from
// the view model; nothing here decides legality (the server does).

import { Cell } from "./protocol.js";
import { ViewModel } from "./model.js";

export interface TerrainStatics {
  width: number;
  height: number;
  elevation: string[];
  river: Cell[];
  tank: Cell;
  shop: Cell;
  houses: Cell[];
}

export interface CellInfo {
  elevation: number;
  river: boolean;
  tank: boolean;
  shop: boolean;
  house: boolean;
  portal: boolean;
  character: boolean;
  placement: string | null;
  hasPipe: boolean;
  pressure: number | null;
}

const same = (a: Cell, b: Cell) => a[0] === b[0] && a[1] === b[1];

export function cellInfo(
  statics: TerrainStatics,
  model: ViewModel,
  x: number,
  y: number,
): CellInfo {
  const cell: Cell = [x, y];
  const placement = model.placements.find(([c]) => same(c, cell));
  const nodes = model.segments.flatMap((s) => [s.a, s.b]);
  const hasPipe = nodes.some(([nx, ny]) => nx === x && ny === y);
  let pressure: number | null = null;
  for (const [key, value] of Object.entries(model.pressures)) {
    const [px, py] = key.split(",").map(Number);
    if (px === x && py === y) pressure = pressure === null ? value : Math.min(pressure, value);
  }
  return {
    elevation: Number(statics.elevation[y][x]),
    river: statics.river.some((c) => same(c, cell)),
    tank: same(statics.tank, cell),
    shop: same(statics.shop, cell),
    house: statics.houses.some((c) => same(c, cell)),
    portal: model.portal !== null && same(model.portal, cell),
    character: same(model.character, cell),
    placement: placement ? placement[1] : null,
    hasPipe,
    pressure,
  };
}

/** Single display glyph for a cell, lowest layer first. */
export function cellGlyph(info: CellInfo): string {
  if (info.character) return "@";
  if (info.portal) return "O";
  if (info.tank) return "T";
  if (info.shop) return "$";
  if (info.house) return "H";
  if (info.placement === "bridge") return "=";
  if (info.placement === "ladder") return "#";
  if (info.placement === "fence") return "+";
  if (info.river) return "~";
  if (info.hasPipe) return "-";
  return info.elevation > 0 ? "^" : ".";
}
