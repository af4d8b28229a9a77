// Session controller: subscribes to the event feed, folds events into the
// view model and forwards inputs to the service. One request is in flight
// at a time; the screen only changes when server events arrive (no
// optimistic updates), so the display is always a fold of the stream.

import { ApiClient, ServiceError, subscribe } from "./client.js";
import { applyEvents, initialModel, ViewModel, withBanner } from "./model.js";
import { actions, Cell, SessionView, TerrainAction } from "./protocol.js";
import { TerrainStatics } from "./terrainView.js";

export class App {
  model: ViewModel;
  readonly statics: TerrainStatics;
  private busy = false;
  private tool = "walk";
  private pipeAnchor: Cell | null = null;
  private unsubscribe: () => void;

  constructor(
    readonly client: ApiClient,
    view: SessionView,
    private readonly onChange: (model: ViewModel) => void,
  ) {
    this.model = initialModel(view);
    this.statics = {
      width: view.terrain.width,
      height: view.terrain.height,
      elevation: view.terrain.elevation,
      river: view.terrain.river,
      tank: view.terrain.tank,
      shop: view.terrain.shop,
      houses: view.terrain.houses,
    };
    this.unsubscribe = subscribe(client, view.id, view.seq, (events) => {
      this.model = applyEvents(this.model, events);
      this.onChange(this.model);
    });
    onChange(this.model);
  }

  stop(): void {
    this.unsubscribe();
  }

  private async submit(fn: () => Promise<unknown>): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    try {
      await fn();
      if (this.model.banner) {
        this.model = withBanner(this.model, null);
        this.onChange(this.model);
      }
    } catch (err) {
      const text =
        err instanceof ServiceError
          ? `${err.type}${err.reason ? `/${err.reason}` : ""}: ${err.message}`
          : String(err);
      this.model = withBanner(this.model, text);
      this.onChange(this.model);
    } finally {
      this.busy = false;
    }
  }

  private terrain(action: TerrainAction): Promise<void> {
    return this.submit(() => this.client.terrain(this.model.id, action));
  }

  move(direction: "N" | "S" | "E" | "W"): Promise<void> {
    return this.terrain(actions.move(direction));
  }

  enterPortal(): Promise<void> {
    return this.terrain(actions.enterPortal());
  }

  buy(pipe: string): Promise<void> {
    return this.terrain(actions.buy(pipe));
  }

  turn(token: string): Promise<void> {
    return this.submit(() => this.client.cubeMove(this.model.id, token));
  }

  scan(text: string): Promise<void> {
    return this.submit(() => this.client.scan(this.model.id, text));
  }

  setTool(tool: string): void {
    this.tool = tool;
    this.pipeAnchor = null;
  }

  /** Click-to-place: the selected tool decides the terrain action. */
  cellClick(x: number, y: number): Promise<void> | void {
    const cell: Cell = [x, y];
    if (this.tool === "walk") return;
    if (this.tool === "bridge" || this.tool === "ladder" || this.tool === "fence") {
      return this.terrain(actions.place(this.tool, cell));
    }
    if (this.tool === "boost") {
      const level = Number(this.statics.elevation[y][x]);
      return this.terrain(actions.boost([x, y, level]));
    }
    if (this.tool.startsWith("pipe:")) {
      const pipe = this.tool.slice("pipe:".length);
      if (pipe === "vertical") {
        const level = Math.max(0, Number(this.statics.elevation[y][x]) - 1);
        return this.terrain(actions.pipeV(pipe, cell, level));
      }
      if (this.pipeAnchor === null) {
        this.pipeAnchor = cell;
        this.model = withBanner(this.model, `pipe from ${x},${y}: pick the far end`);
        this.onChange(this.model);
        return;
      }
      const from = this.pipeAnchor;
      this.pipeAnchor = null;
      const level = Math.min(
        Number(this.statics.elevation[from[1]][from[0]]),
        Number(this.statics.elevation[y][x]),
      );
      return this.terrain(actions.pipeH(pipe, from, cell, level));
    }
  }
}
