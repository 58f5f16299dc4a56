import { describe, expect, test } from "vitest";

import {
  convexHull,
  discInside,
  memberHull,
  offsetPolygon,
  pointStrictlyInside,
  polygonIsConvexCcw,
  type Point,
} from "../src/geometry.js";
import { HypergraphModel } from "../src/model.js";
import { ViewState } from "../src/state.js";
import { h0Hif, h0Layout } from "./fixtures.js";

describe("convexHull", () => {
  test("drops interior and collinear points", () => {
    const pts: Point[] = [[0, 0], [2, 0], [1, 0], [1, 1], [1, 0.5]];
    expect(convexHull(pts)).toEqual([[0, 0], [2, 0], [1, 1]]);
  });

  test("collinear input reduces to its extremes", () => {
    expect(convexHull([[0, 0], [5, 0], [10, 0]])).toEqual([[0, 0], [10, 0]]);
  });

  test("single point", () => {
    expect(convexHull([[3, 4], [3, 4]])).toEqual([[3, 4]]);
  });
});

describe("offsetPolygon", () => {
  test("single point becomes a 32-gon at the offset radius", () => {
    const polygon = offsetPolygon([[50, 50]], 18);
    expect(polygon).toHaveLength(32);
    for (const [x, y] of polygon) {
      expect(Math.hypot(x - 50, y - 50)).toBeCloseTo(18, 9);
    }
  });

  test("segment becomes a capsule with the expected extents", () => {
    const polygon = offsetPolygon([[0, 0], [100, 0]], 18);
    expect(polygonIsConvexCcw(polygon)).toBe(true);
    const xs = polygon.map((p) => p[0]);
    const ys = polygon.map((p) => p[1]);
    expect(Math.min(...xs)).toBeCloseTo(-18, 9);
    expect(Math.max(...xs)).toBeCloseTo(118, 9);
    expect(Math.min(...ys)).toBeCloseTo(-18, 9);
    expect(Math.max(...ys)).toBeCloseTo(18, 9);
  });

  test("corner arcs carry at least 8 vertices", () => {
    const polygon = offsetPolygon([[0, 0], [10, 0], [10, 10], [0, 10]], 5);
    expect(polygon.length).toBeGreaterThanOrEqual(32);
    expect(polygonIsConvexCcw(polygon)).toBe(true);
  });

  test("member discs stay strictly inside the hull", () => {
    const members: Point[] = [[0, 0], [120, 10], [40, 90]];
    const polygon = memberHull(members, 18);
    for (const center of members) {
      expect(discInside(polygon, center, 8)).toBe(true);
    }
    expect(pointStrictlyInside(polygon, [-50, -50])).toBe(false);
  });
});

describe("parity with the server layout", () => {
  test("recomputed hulls match the layout document's hulls", () => {
    const model = HypergraphModel.fromHif(h0Hif());
    const layout = h0Layout();
    const state = new ViewState(model, layout);
    for (const edge of model.edges) {
      const expected = layout.hulls[edge];
      const got = state.hullFor(edge)!;
      expect(got.length).toBe(expected.length);
      let worst = 0;
      for (let i = 0; i < got.length; i++) {
        worst = Math.max(worst, Math.abs(got[i][0] - expected[i][0]), Math.abs(got[i][1] - expected[i][1]));
      }
      // positions in the document are rounded to 1e-6, so allow that much slack
      expect(worst).toBeLessThan(1e-3);
    }
  });
});
