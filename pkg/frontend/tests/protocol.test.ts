import { describe, expect, it } from "vitest";

import { actions, invertToken, moveToken } from "../src/protocol.js";

describe("terrain action builders", () => {
  it("builds the documented wire shapes", () => {
    expect(actions.move("N")).toEqual({ action: "move", direction: "N" });
    expect(actions.place("bridge", [5, 4])).toEqual({
      action: "place",
      asset: "bridge",
      cell: [5, 4],
    });
    expect(actions.pipeH("wide", [1, 4], [2, 4], 0)).toEqual({
      action: "pipe",
      pipe: "wide",
      from: [1, 4],
      to: [2, 4],
      level: 0,
    });
    expect(actions.pipeV("vertical", [10, 5], 0)).toEqual({
      action: "pipe",
      pipe: "vertical",
      cell: [10, 5],
      level: 0,
    });
    expect(actions.boost([4, 1, 0])).toEqual({ action: "boost", node: [4, 1, 0] });
    expect(actions.buy("wide")).toEqual({ action: "buy", pipe: "wide" });
    expect(actions.enterPortal()).toEqual({ action: "enter_portal" });
  });
});

describe("move tokens", () => {
  it("formats face turns", () => {
    expect(moveToken("U", "cw")).toBe("U");
    expect(moveToken("R", "ccw")).toBe("R'");
    expect(moveToken("F", "half")).toBe("F2");
  });

  it("inverts directions", () => {
    expect(invertToken("U", "cw")).toBe("U'");
    expect(invertToken("U", "ccw")).toBe("U");
    expect(invertToken("U", "half")).toBe("U2");
  });
});
