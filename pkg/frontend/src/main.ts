// Browser bootstrap: create (or rejoin) a session and wire the renderer.

import { App } from "./app.js";
import { ApiClient } from "./client.js";
import { render } from "./render.js";

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app element");
  const params = new URLSearchParams(location.search);
  const base = params.get("api") ?? "";
  const client = new ApiClient(base);

  const existing = params.get("session");
  const view = existing
    ? await client.getView(existing)
    : await client.createSession({});
  if (!existing) {
    params.set("session", view.id);
    history.replaceState(null, "", `${location.pathname}?${params}`);
  }

  const app = new App(client, view, (model) => {
    render(root, app.statics, model, {
      onMove: (d) => void app.move(d),
      onTurn: (token) => void app.turn(token),
      onScan: (text) => void app.scan(text),
      onEnterPortal: () => void app.enterPortal(),
      onBuy: (pipe) => void app.buy(pipe),
      onCellClick: (x, y) => void app.cellClick(x, y),
      onToolChange: (tool) => app.setTool(tool),
    });
  });
}

boot().catch((err) => {
  const root = document.getElementById("app");
  if (root) root.textContent = `failed to start: ${err}`;
});
