// DOM rendering: board canvases in the main panel, HUD (inventory, cue,
// banner, controls) alongside. Rebuilt wholesale on every state change;
// at this board size that is plenty fast.

import { arrowAngle, cueOverlay, faceAt, NET_HEIGHT, NET_WIDTH } from "./cubeNet.js";
import { ViewModel } from "./model.js";
import { cellGlyph, cellInfo, TerrainStatics } from "./terrainView.js";

export interface Handlers {
  onMove(direction: "N" | "S" | "E" | "W"): void;
  onTurn(token: string): void;
  onScan(text: string): void;
  onEnterPortal(): void;
  onBuy(pipe: string): void;
  onCellClick(x: number, y: number): void;
  onToolChange(tool: string): void;
}

function el(tag: string, cls?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderCubeNet(model: ViewModel): HTMLElement {
  // the net is schematic: the player holds the real cube, so cells show
  // face labels and the cue overlay, never locally-computed stickers
  const wrap = el("div", "cube-net");
  wrap.style.gridTemplateColumns = `repeat(${NET_WIDTH}, 34px)`;
  wrap.style.gridTemplateRows = `repeat(${NET_HEIGHT}, 34px)`;
  for (let y = 0; y < NET_HEIGHT; y++) {
    for (let x = 0; x < NET_WIDTH; x++) {
      const hit = faceAt(x, y);
      const cell = el("div", hit ? "net-cell" : "net-gap");
      if (hit) {
        cell.textContent = `${hit.face}${hit.index}`;
        cell.title = `${hit.face} cell ${hit.index}`;
      }
      wrap.appendChild(cell);
    }
  }
  const overlay = cueOverlay(model.cue);
  if (overlay && overlay.kind === "layer") {
    for (const [name, pos, glyph] of [
      ["cue-character", overlay.character, "웃"],
      ["cue-target", overlay.target, "◎"],
    ] as const) {
      const icon = el("div", `cue-icon ${name}`, glyph);
      icon.style.gridColumn = String(pos.x + 1);
      icon.style.gridRow = String(pos.y + 1);
      wrap.appendChild(icon);
    }
    const arrow = el("div", "cue-arrow", "➜");
    arrow.style.gridColumn = String(overlay.character.x + 1);
    arrow.style.gridRow = String(overlay.character.y + 1);
    arrow.style.transform = `rotate(${arrowAngle(overlay)}deg)`;
    wrap.appendChild(arrow);
  } else if (overlay && overlay.kind === "axis") {
    const arrow = el("div", "cue-axis", `⟳ ${overlay.axis} ${overlay.dir}`);
    arrow.style.gridColumn = "4 / span 2";
    arrow.style.gridRow = "3 / span 2";
    wrap.appendChild(arrow);
  }
  return wrap;
}

function renderTerrain(
  statics: TerrainStatics,
  model: ViewModel,
  handlers: Handlers,
): HTMLElement {
  const wrap = el("div", "terrain");
  wrap.style.gridTemplateColumns = `repeat(${statics.width}, 30px)`;
  for (let y = 0; y < statics.height; y++) {
    for (let x = 0; x < statics.width; x++) {
      const info = cellInfo(statics, model, x, y);
      const cell = el("div", "cell", cellGlyph(info));
      if (info.elevation > 0) cell.classList.add("raised");
      if (info.river) cell.classList.add("river");
      if (info.portal) cell.classList.add("portal");
      if (info.hasPipe) cell.classList.add("piped");
      if (info.pressure !== null) cell.title = `pressure ${info.pressure}`;
      cell.addEventListener("click", () => handlers.onCellClick(x, y));
      wrap.appendChild(cell);
    }
  }
  return wrap;
}

function renderHud(model: ViewModel, handlers: Handlers): HTMLElement {
  const hud = el("div", "hud");
  hud.appendChild(el("div", "status",
    `mode: ${model.mode}  outcome: ${model.outcome}` +
    (model.outcomeReason ? ` (${model.outcomeReason})` : "")));
  if (model.banner) hud.appendChild(el("div", "banner", model.banner));

  const inv = el("div", "inventory");
  inv.appendChild(el("h3", undefined, "inventory"));
  const entries = Object.entries(model.inventory).sort();
  if (!entries.length) inv.appendChild(el("div", "inv-item", "(empty)"));
  for (const [item, count] of entries) {
    inv.appendChild(el("div", "inv-item", `${item}: ${count}`));
  }
  hud.appendChild(inv);

  const cueBox = el("div", "cue-box");
  cueBox.appendChild(el("h3", undefined, "cue"));
  cueBox.appendChild(el("pre", undefined, JSON.stringify(model.cue)));
  hud.appendChild(cueBox);
  hud.appendChild(el("div", "meta",
    `deviations: ${model.deviations}  stage: ${model.cubeStage ?? "unscanned"}`));
  return hud;
}

function renderControls(model: ViewModel, handlers: Handlers): HTMLElement {
  const box = el("div", "controls");
  if (model.mode === "terrain") {
    const pad = el("div", "dpad");
    for (const d of ["N", "W", "S", "E"] as const) {
      const b = el("button", undefined, d);
      b.addEventListener("click", () => handlers.onMove(d));
      pad.appendChild(b);
    }
    const enter = el("button", undefined, "enter portal");
    enter.addEventListener("click", () => handlers.onEnterPortal());
    pad.appendChild(enter);
    box.appendChild(pad);

    const tools = el("select") as HTMLSelectElement;
    for (const tool of ["walk", "bridge", "ladder", "fence",
                        "pipe:wide", "pipe:narrow", "pipe:vertical", "boost"]) {
      const opt = document.createElement("option");
      opt.value = tool;
      opt.textContent = tool;
      tools.appendChild(opt);
    }
    tools.addEventListener("change", () => handlers.onToolChange(tools.value));
    box.appendChild(tools);

    const shop = el("div", "shop");
    for (const pipe of ["wide", "narrow", "vertical"]) {
      const b = el("button", undefined, `buy ${pipe}`);
      b.addEventListener("click", () => handlers.onBuy(pipe));
      shop.appendChild(b);
    }
    box.appendChild(shop);
  } else {
    const turns = el("div", "turn-buttons");
    for (const face of ["U", "D", "L", "R", "F", "B"]) {
      for (const suffix of ["", "'", "2"]) {
        const token = face + suffix;
        const b = el("button", undefined, token);
        b.addEventListener("click", () => handlers.onTurn(token));
        turns.appendChild(b);
      }
    }
    box.appendChild(turns);
    if (!model.cubeScanned) {
      const form = el("div", "scan-form");
      const area = document.createElement("textarea");
      area.rows = 7;
      area.placeholder = "U: CLO CLO CLO CLO\n...six lines...";
      const submit = el("button", undefined, "submit scan");
      submit.addEventListener("click", () => handlers.onScan(area.value));
      form.appendChild(area);
      form.appendChild(submit);
      box.appendChild(form);
    }
  }
  return box;
}

export function render(
  root: HTMLElement,
  statics: TerrainStatics,
  model: ViewModel,
  handlers: Handlers,
): void {
  root.textContent = "";
  const board = el("div", "board");
  board.appendChild(
    model.mode === "cube" ? renderCubeNet(model) : renderTerrain(statics, model, handlers),
  );
  root.appendChild(board);
  const side = el("div", "side");
  side.appendChild(renderHud(model, handlers));
  side.appendChild(renderControls(model, handlers));
  root.appendChild(side);
}
