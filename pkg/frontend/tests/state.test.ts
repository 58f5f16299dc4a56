import { beforeEach, describe, expect, test } from "vitest";

import { HypergraphModel } from "../src/model.js";
import { Simulation } from "../src/simulation.js";
import { ViewState } from "../src/state.js";
import { h0ComponentsS1, h0Hif, h0Layout } from "./fixtures.js";

let model: HypergraphModel;
let state: ViewState;

beforeEach(() => {
  model = HypergraphModel.fromHif(h0Hif());
  state = new ViewState(model, h0Layout());
});

describe("model indexing", () => {
  test("entities and memberships", () => {
    expect(model.nodes).toEqual(["1", "2", "3", "4", "5", "6"]);
    expect(model.edges).toEqual(["A", "B", "C", "D"]);
    expect(model.edgeMembers.get("A")).toEqual(["1", "2", "3"]);
    expect(model.nodeMemberships.get("4")).toEqual(["B", "C"]);
    expect(model.nodeProps.get("2")?.attrs).toEqual({ color: "red", rank: 3 });
  });
});

describe("selection expansion", () => {
  test("nodes_of_edges adds exactly the members of selected edges", () => {
    state.toggleSelect("edge", "A");
    state.expandSelection("nodes_of_edges");
    expect([...state.selectedNodes].sort()).toEqual(["1", "2", "3"]);
  });

  test("empty selection expansion is a no-op", () => {
    state.expandSelection("nodes_of_edges");
    state.expandSelection("edges_of_nodes");
    expect(state.selectedNodes.size).toBe(0);
    expect(state.selectedEdges.size).toBe(0);
  });

  test("is monotone", () => {
    state.toggleSelect("edge", "A");
    let prevNodes = 0;
    let prevEdges = 1;
    for (let i = 0; i < 6; i++) {
      state.expandSelection(i % 2 === 0 ? "nodes_of_edges" : "edges_of_nodes");
      expect(state.selectedNodes.size).toBeGreaterThanOrEqual(prevNodes);
      expect(state.selectedEdges.size).toBeGreaterThanOrEqual(prevEdges);
      prevNodes = state.selectedNodes.size;
      prevEdges = state.selectedEdges.size;
    }
  });

  test("fixed point from {A} equals the s=1 component the CLI reports", () => {
    state.toggleSelect("edge", "A");
    state.expandToFixedPoint();
    const componentOfA = h0ComponentsS1().find((c) => c.includes("A"))!;
    expect([...state.selectedEdges].sort()).toEqual(componentOfA);
    expect([...state.selectedNodes].sort()).toEqual(["1", "2", "3", "4", "5"]);
    // a second pass must change nothing
    const nodes = state.selectedNodes.size;
    const edges = state.selectedEdges.size;
    state.expandToFixedPoint();
    expect(state.selectedNodes.size).toBe(nodes);
    expect(state.selectedEdges.size).toBe(edges);
  });

  test("selection ignores unknown ids", () => {
    state.toggleSelect("node", "zzz");
    state.toggleSelect("edge", "zzz");
    expect(state.selectedNodes.size).toBe(0);
    expect(state.selectedEdges.size).toBe(0);
  });
});

describe("brush selection", () => {
  test("selects exactly the nodes whose centers lie in the rectangle", () => {
    const inside = new Set<string>();
    const [x, y] = state.nodePositions.get("2")!;
    const rect = { x0: x - 1, y0: y - 1, x1: x + 1, y1: y + 1 };
    for (const [node, [nx, ny]] of state.nodePositions) {
      if (rect.x0 <= nx && nx <= rect.x1 && rect.y0 <= ny && ny <= rect.y1) inside.add(node);
    }
    state.brushSelect(rect);
    expect(state.selectedNodes).toEqual(inside);
    expect(state.selectedNodes.has("2")).toBe(true);
  });

  test("degenerate rectangle selects nothing when empty", () => {
    state.brushSelect({ x0: -10, y0: -10, x1: -5, y1: -5 });
    expect(state.selectedNodes.size).toBe(0);
  });
});

describe("drag and pin", () => {
  test("dragPin moves, pins, and reports the member edges", () => {
    const touched = state.dragPin("4", 333, 444);
    expect(touched).toEqual(["B", "C"]);
    expect(state.nodePositions.get("4")).toEqual([333, 444]);
    expect(state.pinned.has("4")).toBe(true);
  });

  test("hull containment holds after a drag", () => {
    state.dragPin("4", 900, 900);
    for (const node of model.nodes) {
      expect(state.nodeDiscContained(node)).toBe(true);
    }
  });

  test("releasePin unpins", () => {
    state.dragPin("4", 10, 10);
    state.releasePin("4");
    expect(state.pinned.has("4")).toBe(false);
  });
});

describe("simulation", () => {
  test("pinned nodes never move during ticks", () => {
    const simulation = new Simulation(model, state);
    state.dragPin("4", 500, 500);
    simulation.reheat();
    const before = [...state.nodePositions.get("4")!];
    const others = new Map([...state.nodePositions].filter(([n]) => n !== "4"));
    for (let i = 0; i < 10; i++) simulation.tick();
    expect(state.nodePositions.get("4")).toEqual(before);
    const moved = [...others].some(([n, p]) => {
      const q = state.nodePositions.get(n)!;
      return q[0] !== p[0] || q[1] !== p[1];
    });
    expect(moved).toBe(true);
  });

  test("cools to idle", () => {
    const simulation = new Simulation(model, state, 2, 0.5, 0.25);
    simulation.reheat();
    let guard = 0;
    while (simulation.tick() && guard < 100) guard++;
    expect(simulation.running).toBe(false);
    expect(guard).toBeLessThan(100);
  });
});
