/**
 * Visual-encoding scales, matching the server's SVG renderer exactly:
 * categorical values map onto the same 12-hue palette in the same canonical
 * order, and numeric values map linearly onto 0.5x..1.75x the base radius.
 */

export const PALETTE = [
  "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948",
  "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
] as const;

/** Canonical sort key: booleans, then numbers in minimal decimal form, then text. */
export function categoricalKey(value: unknown): string {
  if (typeof value === "boolean") return value ? "b:true" : "b:false";
  if (typeof value === "number") return `n:${String(value)}`;
  return `s:${String(value)}`;
}

export function categoricalScale(values: Iterable<unknown>): Map<string, string> {
  const keys = new Set<string>();
  for (const value of values) {
    if (value !== null && value !== undefined) keys.add(categoricalKey(value));
  }
  const scale = new Map<string, string>();
  [...keys].sort().forEach((key, i) => scale.set(key, PALETTE[i % PALETTE.length]));
  return scale;
}

export function colorFor(scale: Map<string, string>, value: unknown, fallback: string): string {
  if (value === null || value === undefined) return fallback;
  return scale.get(categoricalKey(value)) ?? fallback;
}

/** Linear radius scale over the observed numeric range; constant range keeps the base radius. */
export function sizeScale(values: number[], baseRadius: number): (value: unknown) => number {
  if (values.length === 0) return () => baseRadius;
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  return (value: unknown) => {
    if (typeof value !== "number" || !Number.isFinite(value) || hi <= lo) return baseRadius;
    return baseRadius * (0.5 + (1.25 * (value - lo)) / (hi - lo));
  };
}
