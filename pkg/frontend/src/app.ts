/**
 * Viewer application: fetches the hypergraph and its layout from the serving
 * CLI, renders the Euler diagram, and wires up the interactions — drag to
 * pin (hulls follow live), modifier-click to unpin, click/brush selection
 * with expansion in both directions, hover tooltips, encoding pickers, and
 * pan/zoom. All state is client-local; refreshing refetches server truth.
 */

import type { HifDocument, HypergraphModel as Model, LayoutDoc } from "./model.js";
import { HypergraphModel } from "./model.js";
import {
  applyEncodings,
  buildScene,
  hideTooltip,
  refreshGeometry,
  refreshSelection,
  refreshTransform,
  showBanner,
  showTooltip,
  type Scene,
} from "./render.js";
import { Simulation } from "./simulation.js";
import { ViewState, type ExpandDirection } from "./state.js";

export class ViewerApp {
  readonly model: Model;
  readonly state: ViewState;
  readonly scene: Scene;
  readonly simulation: Simulation;
  private dragging: string | null = null;
  private moved = false;
  private frameScheduled = false;

  constructor(readonly root: HTMLElement, hifDoc: HifDocument, layoutDoc: LayoutDoc) {
    this.model = HypergraphModel.fromHif(hifDoc);
    this.state = new ViewState(this.model, layoutDoc);
    this.buildToolbar();
    this.scene = buildScene(root, this.model, this.state);
    this.simulation = new Simulation(this.model, this.state);
    refreshGeometry(this.scene, this.model, this.state);
    applyEncodings(this.scene, this.model, this.state);
    refreshSelection(this.scene, this.state);
    refreshTransform(this.scene, this.state);
    this.wireEvents();
  }

  // -- interactions the tests drive directly -------------------------------

  /** Move a node under the pointer and pin it; member hulls update live. */
  drag(node: string, x: number, y: number): string[] {
    const touched = this.state.dragPin(node, x, y);
    refreshGeometry(this.scene, this.model, this.state);
    return touched;
  }

  endDrag(): void {
    this.dragging = null;
    this.simulation.reheat();
    this.pump();
  }

  releasePin(node: string): void {
    this.state.releasePin(node);
    refreshGeometry(this.scene, this.model, this.state);
    this.simulation.reheat();
    this.pump();
  }

  expand(direction: ExpandDirection): void {
    this.state.expandSelection(direction);
    refreshSelection(this.scene, this.state);
  }

  applyEncoding(binding: { node_size?: string; node_color?: string; edge_color?: string }): void {
    this.state.encodings = { ...this.state.encodings, ...binding };
    applyEncodings(this.scene, this.model, this.state);
    refreshGeometry(this.scene, this.model, this.state);
  }

  hover(kind: "node" | "edge", id: string, clientX = 0, clientY = 0): void {
    this.state.hover = { kind, id };
    showTooltip(this.scene, this.model, kind, id, clientX, clientY);
  }

  unhover(): void {
    this.state.hover = null;
    hideTooltip(this.scene);
  }

  // -- simulation loop ------------------------------------------------------

  private pump(): void {
    if (this.frameScheduled || typeof requestAnimationFrame !== "function") return;
    if (!this.simulation.running) return;
    this.frameScheduled = true;
    requestAnimationFrame(() => {
      this.frameScheduled = false;
      if (this.dragging === null && this.simulation.tick()) {
        refreshGeometry(this.scene, this.model, this.state);
        this.pump();
      } else {
        refreshGeometry(this.scene, this.model, this.state);
      }
    });
  }

  // -- DOM wiring ------------------------------------------------------------

  private buildToolbar(): void {
    const bar = document.createElement("div");
    bar.className = "toolbar";

    const expandNodes = document.createElement("button");
    expandNodes.textContent = "select nodes of edges";
    expandNodes.dataset.action = "expand-nodes";
    expandNodes.addEventListener("click", () => this.expand("nodes_of_edges"));

    const expandEdges = document.createElement("button");
    expandEdges.textContent = "select edges of nodes";
    expandEdges.dataset.action = "expand-edges";
    expandEdges.addEventListener("click", () => this.expand("edges_of_nodes"));

    const clear = document.createElement("button");
    clear.textContent = "clear selection";
    clear.dataset.action = "clear";
    clear.addEventListener("click", () => {
      this.state.clearSelection();
      refreshSelection(this.scene, this.state);
    });

    bar.append(
      expandNodes,
      expandEdges,
      clear,
      this.encodingPicker("node_size", "node size", this.model.attrKeys("node")),
      this.encodingPicker("node_color", "node color", this.model.attrKeys("node")),
      this.encodingPicker("edge_color", "edge color", this.model.attrKeys("edge")),
    );
    this.root.appendChild(bar);
  }

  private encodingPicker(binding: "node_size" | "node_color" | "edge_color", label: string, keys: string[]) {
    const select = document.createElement("select");
    select.dataset.binding = binding;
    const none = document.createElement("option");
    none.value = "";
    none.textContent = label;
    select.appendChild(none);
    for (const key of keys) {
      const option = document.createElement("option");
      option.value = key;
      option.textContent = `${label}: ${key}`;
      select.appendChild(option);
    }
    select.addEventListener("change", () => {
      this.applyEncoding({ [binding]: select.value || undefined });
    });
    return select;
  }

  private toCanvas(event: { clientX: number; clientY: number }): [number, number] {
    const rect = this.scene.svg.getBoundingClientRect();
    const [width, height] = this.state.canvas;
    const sx = rect.width > 0 ? width / rect.width : 1;
    const sy = rect.height > 0 ? height / rect.height : 1;
    const { x, y, k } = this.state.transform;
    return [((event.clientX - rect.left) * sx - x) / k, ((event.clientY - rect.top) * sy - y) / k];
  }

  private wireEvents(): void {
    const svg = this.scene.svg;
    let brushStart: [number, number] | null = null;
    let panStart: { px: number; py: number; tx: number; ty: number } | null = null;

    svg.addEventListener("pointerdown", (event) => {
      const target = event.target as Element;
      const node = target instanceof Element ? (target as SVGElement).dataset?.node : undefined;
      const [cx, cy] = this.toCanvas(event);
      if (node) {
        if (event.altKey || event.ctrlKey || event.metaKey) {
          this.releasePin(node);
          return;
        }
        this.dragging = node;
        this.moved = false;
      } else if (event.shiftKey) {
        brushStart = [cx, cy];
      } else {
        panStart = { px: event.clientX, py: event.clientY, tx: this.state.transform.x, ty: this.state.transform.y };
      }
    });

    svg.addEventListener("pointermove", (event) => {
      if (this.dragging) {
        this.moved = true;
        const [cx, cy] = this.toCanvas(event);
        this.drag(this.dragging, cx, cy);
        return;
      }
      if (brushStart) {
        const [cx, cy] = this.toCanvas(event);
        const rect = this.scene.brushRect;
        rect.setAttribute("display", "inline");
        rect.setAttribute("x", String(Math.min(brushStart[0], cx)));
        rect.setAttribute("y", String(Math.min(brushStart[1], cy)));
        rect.setAttribute("width", String(Math.abs(cx - brushStart[0])));
        rect.setAttribute("height", String(Math.abs(cy - brushStart[1])));
        return;
      }
      if (panStart) {
        const rect = svg.getBoundingClientRect();
        const sx = rect.width > 0 ? this.state.canvas[0] / rect.width : 1;
        this.state.transform.x = panStart.tx + (event.clientX - panStart.px) * sx;
        this.state.transform.y = panStart.ty + (event.clientY - panStart.py) * sx;
        refreshTransform(this.scene, this.state);
      }
    });

    svg.addEventListener("pointerup", (event) => {
      if (this.dragging) {
        const node = this.dragging;
        if (!this.moved) {
          // a stationary press is a click: toggle selection, drop the pin
          this.state.releasePin(node);
          this.state.toggleSelect("node", node);
          refreshSelection(this.scene, this.state);
          this.dragging = null;
        } else {
          this.endDrag();
        }
        return;
      }
      if (brushStart) {
        const [cx, cy] = this.toCanvas(event);
        this.state.brushSelect({ x0: brushStart[0], y0: brushStart[1], x1: cx, y1: cy }, event.altKey);
        this.scene.brushRect.setAttribute("display", "none");
        refreshSelection(this.scene, this.state);
        brushStart = null;
        return;
      }
      if (panStart) {
        const target = event.target as SVGElement;
        const edge = target?.dataset?.edge;
        if (edge && Math.hypot(event.clientX - panStart.px, event.clientY - panStart.py) < 3) {
          this.state.toggleSelect("edge", edge);
          refreshSelection(this.scene, this.state);
        }
        panStart = null;
      }
    });

    svg.addEventListener("wheel", (event) => {
      event.preventDefault();
      const factor = Math.exp(-event.deltaY * 0.0015);
      const next = Math.min(8, Math.max(0.2, this.state.transform.k * factor));
      const [cx, cy] = this.toCanvas(event);
      // keep the point under the cursor fixed while zooming
      this.state.transform.x += cx * (this.state.transform.k - next);
      this.state.transform.y += cy * (this.state.transform.k - next);
      this.state.transform.k = next;
      refreshTransform(this.scene, this.state);
    });

    svg.addEventListener("pointerover", (event) => {
      const target = event.target as SVGElement;
      if (target?.dataset?.node) this.hover("node", target.dataset.node, event.clientX, event.clientY);
      else if (target?.dataset?.edge) this.hover("edge", target.dataset.edge, event.clientX, event.clientY);
    });
    svg.addEventListener("pointerout", () => this.unhover());
  }
}

export function init(root: HTMLElement, hifDoc: HifDocument, layoutDoc: LayoutDoc): ViewerApp {
  return new ViewerApp(root, hifDoc, layoutDoc);
}

type Fetcher = (url: string) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

/** Fetch both API documents and start the viewer; failures show a banner. */
export async function boot(root: HTMLElement, fetcher?: Fetcher): Promise<ViewerApp | null> {
  const doFetch = fetcher ?? ((url: string) => fetch(url));
  try {
    const [hifRes, layoutRes] = await Promise.all([doFetch("/api/hif"), doFetch("/api/layout")]);
    if (!hifRes.ok || !layoutRes.ok) {
      throw new Error(`server returned ${hifRes.status}/${layoutRes.status}`);
    }
    const hifDoc = (await hifRes.json()) as HifDocument;
    const layoutDoc = (await layoutRes.json()) as LayoutDoc;
    return init(root, hifDoc, layoutDoc);
  } catch (err) {
    showBanner(root, `could not load hypergraph data: ${String(err)}`);
    return null;
  }
}
