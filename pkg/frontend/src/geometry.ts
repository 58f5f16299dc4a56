/**
 * Hull geometry, kept rule-for-rule identical to the server's layout module:
 * convex hull by monotone chain (extreme points only), outward offset with
 * rounded corner arcs (step <= pi/16, at least 8 vertices per corner),
 * a 32-gon circle for single points, and a capsule for collinear members.
 */

export type Point = [number, number];

const MAX_ARC_STEP = Math.PI / 16;
const MIN_ARC_POINTS = 8;
const TWO_PI = 2 * Math.PI;

export function cross(o: Point, a: Point, b: Point): number {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

export function convexHull(points: Point[]): Point[] {
  const unique = new Map<string, Point>();
  for (const p of points) unique.set(`${p[0]},${p[1]}`, p);
  const pts = [...unique.values()].sort((a, b) => a[0] - b[0] || a[1] - b[1]);
  if (pts.length <= 2) return pts;

  const build = (seq: Point[]): Point[] => {
    const chain: Point[] = [];
    for (const p of seq) {
      while (chain.length >= 2 && cross(chain[chain.length - 2], chain[chain.length - 1], p) <= 0) {
        chain.pop();
      }
      chain.push(p);
    }
    return chain;
  };

  const lower = build(pts);
  const upper = build([...pts].reverse());
  return lower.slice(0, -1).concat(upper.slice(0, -1));
}

function normalAngle(a: Point, b: Point): number {
  // outward normal of a CCW polygon edge a->b
  return Math.atan2(-(b[0] - a[0]), b[1] - a[1]);
}

function arcPoints(center: Point, radius: number, start: number, sweep: number): Point[] {
  if (sweep < 1e-12) {
    return [[center[0] + radius * Math.cos(start), center[1] + radius * Math.sin(start)]];
  }
  const segments = Math.max(MIN_ARC_POINTS - 1, Math.ceil(sweep / MAX_ARC_STEP));
  const out: Point[] = [];
  for (let t = 0; t <= segments; t++) {
    const angle = start + (sweep * t) / segments;
    out.push([center[0] + radius * Math.cos(angle), center[1] + radius * Math.sin(angle)]);
  }
  return out;
}

export function offsetPolygon(hull: Point[], radius: number): Point[] {
  if (hull.length === 0) return [];
  if (hull.length === 1) {
    const [cx, cy] = hull[0];
    const n = 32;
    const out: Point[] = [];
    for (let t = 0; t < n; t++) {
      out.push([cx + radius * Math.cos((TWO_PI * t) / n), cy + radius * Math.sin((TWO_PI * t) / n)]);
    }
    return out;
  }
  const out: Point[] = [];
  const m = hull.length;
  for (let i = 0; i < m; i++) {
    const vertex = hull[i];
    const before = hull[(i - 1 + m) % m];
    const after = hull[(i + 1) % m];
    const aIn = normalAngle(before, vertex);
    const aOut = normalAngle(vertex, after);
    const sweep = (((aOut - aIn) % TWO_PI) + TWO_PI) % TWO_PI;
    for (const p of arcPoints(vertex, radius, aIn, sweep)) {
      const last = out[out.length - 1];
      if (!last || Math.abs(p[0] - last[0]) > 1e-12 || Math.abs(p[1] - last[1]) > 1e-12) {
        out.push(p);
      }
    }
  }
  if (out.length > 1) {
    const first = out[0];
    const last = out[out.length - 1];
    if (Math.abs(first[0] - last[0]) <= 1e-12 && Math.abs(first[1] - last[1]) <= 1e-12) {
      out.pop();
    }
  }
  return out;
}

/** Offset hull around a set of member positions (the one entry point the viewer uses). */
export function memberHull(positions: Point[], hullPadding: number): Point[] {
  return offsetPolygon(convexHull(positions), hullPadding);
}

export function polygonIsConvexCcw(polygon: Point[], tolerance = 1e-9): boolean {
  if (polygon.length < 3) return false;
  const m = polygon.length;
  for (let i = 0; i < m; i++) {
    if (cross(polygon[i], polygon[(i + 1) % m], polygon[(i + 2) % m]) < -tolerance) return false;
  }
  return true;
}

export function pointStrictlyInside(polygon: Point[], point: Point): boolean {
  const m = polygon.length;
  for (let i = 0; i < m; i++) {
    const a = polygon[i];
    const b = polygon[(i + 1) % m];
    if (Math.abs(a[0] - b[0]) <= 1e-12 && Math.abs(a[1] - b[1]) <= 1e-12) continue;
    if (cross(a, b, point) <= 0) return false;
  }
  return true;
}

/** True when the whole disc of the given radius sits strictly inside the polygon. */
export function discInside(polygon: Point[], center: Point, radius: number, samples = 16): boolean {
  for (let t = 0; t < samples; t++) {
    const p: Point = [
      center[0] + radius * Math.cos((TWO_PI * t) / samples),
      center[1] + radius * Math.sin((TWO_PI * t) / samples),
    ];
    if (!pointStrictlyInside(polygon, p)) return false;
  }
  return pointStrictlyInside(polygon, center);
}
