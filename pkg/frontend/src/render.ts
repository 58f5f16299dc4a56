/**
 * SVG scene management: build the element tree once, then refresh geometry,
 * selection classes, encodings, and the tooltip in place.
 */

import type { Point } from "./geometry.js";
import type { HypergraphModel } from "./model.js";
import { PALETTE, categoricalScale, colorFor, sizeScale } from "./scales.js";
import type { ViewState } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const DEFAULT_NODE_FILL = "#4d4d4d";
const MISSING_VALUE_FILL = "#999999";

export interface Scene {
  svg: SVGSVGElement;
  viewport: SVGGElement;
  hullPaths: Map<string, SVGPathElement>;
  nodeCircles: Map<string, SVGCircleElement>;
  nodeLabels: Map<string, SVGTextElement>;
  brushRect: SVGRectElement;
  tooltip: HTMLDivElement;
  notice: HTMLDivElement;
}

export function pathData(points: Point[]): string {
  if (points.length === 0) return "";
  return "M " + points.map(([x, y]) => `${x} ${y}`).join(" L ") + " Z";
}

function svgEl<K extends keyof SVGElementTagNameMap>(tag: K): SVGElementTagNameMap[K] {
  return document.createElementNS(SVG_NS, tag);
}

export function buildScene(root: HTMLElement, model: HypergraphModel, state: ViewState): Scene {
  const [width, height] = state.canvas;
  const svg = svgEl("svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.classList.add("viewer-canvas");

  const viewport = svgEl("g");
  viewport.classList.add("viewport");
  svg.appendChild(viewport);

  const hullGroup = svgEl("g");
  hullGroup.classList.add("hulls");
  const nodeGroup = svgEl("g");
  nodeGroup.classList.add("nodes");
  const labelGroup = svgEl("g");
  labelGroup.classList.add("labels");
  viewport.append(hullGroup, nodeGroup, labelGroup);

  const hullPaths = new Map<string, SVGPathElement>();
  for (const edge of model.edges) {
    if ((model.edgeMembers.get(edge) ?? []).length === 0) continue;
    const path = svgEl("path");
    path.classList.add("hull");
    path.dataset.edge = edge;
    hullGroup.appendChild(path);
    hullPaths.set(edge, path);
  }

  const nodeCircles = new Map<string, SVGCircleElement>();
  const nodeLabels = new Map<string, SVGTextElement>();
  for (const node of model.nodes) {
    const circle = svgEl("circle");
    circle.classList.add("node");
    circle.dataset.node = node;
    nodeGroup.appendChild(circle);
    nodeCircles.set(node, circle);

    const label = svgEl("text");
    label.classList.add("node-label");
    label.textContent = node;
    labelGroup.appendChild(label);
    nodeLabels.set(node, label);
  }

  const brushRect = svgEl("rect");
  brushRect.classList.add("brush");
  brushRect.setAttribute("display", "none");
  svg.appendChild(brushRect);

  const tooltip = document.createElement("div");
  tooltip.className = "tooltip";
  tooltip.style.display = "none";

  const notice = document.createElement("div");
  notice.className = "notice";
  if (model.nodes.length === 0) notice.textContent = "no data";
  else notice.style.display = "none";

  root.append(svg, tooltip, notice);
  return { svg, viewport, hullPaths, nodeCircles, nodeLabels, brushRect, tooltip, notice };
}

export function refreshGeometry(scene: Scene, model: HypergraphModel, state: ViewState): void {
  for (const [edge, path] of scene.hullPaths) {
    const polygon = state.hullFor(edge);
    if (polygon) path.setAttribute("d", pathData(polygon));
  }
  for (const [node, circle] of scene.nodeCircles) {
    const [x, y] = state.nodePositions.get(node)!;
    circle.setAttribute("cx", String(x));
    circle.setAttribute("cy", String(y));
    const label = scene.nodeLabels.get(node)!;
    label.setAttribute("x", String(x));
    label.setAttribute("y", String(y - Number(circle.getAttribute("r") || state.nodeRadius) - 4));
  }
  model.nodes.forEach((node) => {
    scene.nodeCircles.get(node)!.classList.toggle("pinned", state.pinned.has(node));
  });
}

export function refreshSelection(scene: Scene, state: ViewState): void {
  for (const [node, circle] of scene.nodeCircles) {
    circle.classList.toggle("selected", state.selectedNodes.has(node));
  }
  for (const [edge, path] of scene.hullPaths) {
    path.classList.toggle("selected", state.selectedEdges.has(edge));
  }
}

export function refreshTransform(scene: Scene, state: ViewState): void {
  const { x, y, k } = state.transform;
  scene.viewport.setAttribute("transform", `translate(${x} ${y}) scale(${k})`);
}

/** Recolor and resize from the current encoding bindings; unknown keys are
 * ignored with a console warning. */
export function applyEncodings(scene: Scene, model: HypergraphModel, state: ViewState): void {
  const enc = { ...state.encodings };
  for (const [kind, key] of [
    ["node", enc.node_size],
    ["node", enc.node_color],
    ["edge", enc.edge_color],
  ] as const) {
    if (key !== undefined && !model.attrKeys(kind).includes(key)) {
      console.warn(`unknown ${kind} attribute key ${JSON.stringify(key)}; encoding ignored`);
      if (enc.node_size === key) delete enc.node_size;
      if (enc.node_color === key) delete enc.node_color;
      if (enc.edge_color === key) delete enc.edge_color;
    }
  }

  let edgeFill = (edge: string): string => PALETTE[model.edges.indexOf(edge) % PALETTE.length];
  if (enc.edge_color) {
    const key = enc.edge_color;
    const scale = categoricalScale(model.edges.map((e) => model.edgeProps.get(e)?.attrs[key]));
    edgeFill = (edge) => colorFor(scale, model.edgeProps.get(edge)?.attrs[key], MISSING_VALUE_FILL);
  }
  for (const [edge, path] of scene.hullPaths) {
    const fill = edgeFill(edge);
    path.setAttribute("fill", fill);
    path.setAttribute("stroke", fill);
  }

  let nodeFill = (_node: string) => DEFAULT_NODE_FILL;
  if (enc.node_color) {
    const key = enc.node_color;
    const scale = categoricalScale(model.nodes.map((n) => model.nodeProps.get(n)?.attrs[key]));
    nodeFill = (node) => colorFor(scale, model.nodeProps.get(node)?.attrs[key], DEFAULT_NODE_FILL);
  }
  let nodeRadius = (_node: string) => state.nodeRadius;
  if (enc.node_size) {
    const key = enc.node_size;
    const numeric = model.nodes
      .map((n) => model.nodeProps.get(n)?.attrs[key])
      .filter((v): v is number => typeof v === "number" && Number.isFinite(v));
    const scale = sizeScale(numeric, state.nodeRadius);
    nodeRadius = (node) => scale(model.nodeProps.get(node)?.attrs[key]);
  }
  for (const [node, circle] of scene.nodeCircles) {
    circle.setAttribute("fill", nodeFill(node));
    circle.setAttribute("r", String(nodeRadius(node)));
  }
}

/** Fill and place the tooltip: entity id, weight, then one row per attribute. */
export function showTooltip(
  scene: Scene,
  model: HypergraphModel,
  kind: "node" | "edge",
  id: string,
  clientX: number,
  clientY: number,
): void {
  const props = model.props(kind, id);
  if (!props) return;
  const rows = [
    `<tr><th colspan="2">${escapeHtml(kind)} ${escapeHtml(id)}</th></tr>`,
    `<tr><td>weight</td><td>${escapeHtml(String(props.weight))}</td></tr>`,
  ];
  for (const key of Object.keys(props.attrs).sort()) {
    rows.push(`<tr><td>${escapeHtml(key)}</td><td>${escapeHtml(String(props.attrs[key]))}</td></tr>`);
  }
  scene.tooltip.innerHTML = `<table>${rows.join("")}</table>`;
  scene.tooltip.style.display = "block";
  scene.tooltip.style.left = `${clientX + 12}px`;
  scene.tooltip.style.top = `${clientY + 12}px`;
}

export function hideTooltip(scene: Scene): void {
  scene.tooltip.style.display = "none";
}

export function showBanner(root: HTMLElement, message: string): void {
  const banner = document.createElement("div");
  banner.className = "error-banner";
  banner.textContent = message;
  root.prepend(banner);
}

function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}
