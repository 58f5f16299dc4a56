import { describe, expect, test } from "vitest";

import { PALETTE, categoricalKey, categoricalScale, colorFor, sizeScale } from "../src/scales.js";

describe("categorical scale", () => {
  test("canonical key ordering: booleans, numbers, text", () => {
    expect(categoricalKey(true)).toBe("b:true");
    expect(categoricalKey(2)).toBe("n:2");
    expect(categoricalKey(2.5)).toBe("n:2.5");
    expect(categoricalKey("a")).toBe("s:a");
  });

  test("palette assignment follows sorted canonical keys", () => {
    const scale = categoricalScale(["y", "x", "x", null, undefined]);
    expect(colorFor(scale, "x", "#999999")).toBe(PALETTE[0]);
    expect(colorFor(scale, "y", "#999999")).toBe(PALETTE[1]);
    expect(colorFor(scale, "missing-category", "#999999")).toBe("#999999");
    expect(colorFor(scale, null, "#999999")).toBe("#999999");
  });

  test("cycles after 12 hues", () => {
    const scale = categoricalScale(Array.from({ length: 15 }, (_, i) => `v${String(i).padStart(2, "0")}`));
    expect(colorFor(scale, "v00", "#999999")).toBe(PALETTE[0]);
    expect(colorFor(scale, "v12", "#999999")).toBe(PALETTE[0]);
    expect(colorFor(scale, "v13", "#999999")).toBe(PALETTE[1]);
  });

  test("integral numbers share a category with their decimal form", () => {
    // the server normalizes 2.0 to "n:2" as well
    expect(categoricalKey(2.0)).toBe("n:2");
  });
});

describe("size scale", () => {
  test("linear over the observed range", () => {
    const scale = sizeScale([0, 10], 8);
    expect(scale(0)).toBeCloseTo(4, 12);
    expect(scale(10)).toBeCloseTo(14, 12);
    expect(scale(5)).toBeCloseTo(9, 12);
  });

  test("constant attribute keeps the base radius", () => {
    const scale = sizeScale([3.5, 3.5, 3.5], 8);
    expect(scale(3.5)).toBe(8);
  });

  test("non-numeric values keep the base radius", () => {
    const scale = sizeScale([0, 10], 8);
    expect(scale("oops")).toBe(8);
    expect(scale(undefined)).toBe(8);
  });
});
