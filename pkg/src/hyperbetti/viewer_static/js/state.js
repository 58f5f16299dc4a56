/**
 * Client-side view state: a mutable copy of the layout, pins, selection,
 * encodings, and the hover/pan-zoom bookkeeping. Pure logic, no DOM.
 */
import { memberHull, discInside } from "./geometry.js";
export class ViewState {
    constructor(model, layout) {
        this.model = model;
        this.nodePositions = new Map();
        this.edgePositions = new Map();
        this.pinned = new Set();
        this.selectedNodes = new Set();
        this.selectedEdges = new Set();
        this.hover = null;
        this.transform = { x: 0, y: 0, k: 1 };
        this.canvas = layout.params.canvas;
        this.nodeRadius = layout.params.node_radius;
        this.hullPadding = layout.params.hull_padding;
        this.encodings = { ...layout.encodings };
        for (const node of model.nodes) {
            const p = layout.positions[node];
            this.nodePositions.set(node, p ? [p[0], p[1]] : [this.canvas[0] / 2, this.canvas[1] / 2]);
        }
        for (const edge of model.edges) {
            // the wire format is a flat map: an edge id shadowed by a node id
            // falls back to the centroid of the edge's members
            const p = model.nodes.includes(edge) ? undefined : layout.positions[edge];
            this.edgePositions.set(edge, p ? [p[0], p[1]] : this.edgeCentroid(edge));
        }
        for (const node of layout.pinned) {
            if (this.nodePositions.has(node))
                this.pinned.add(node);
        }
    }
    edgeCentroid(edge) {
        const members = this.model.edgeMembers.get(edge) ?? [];
        if (members.length === 0)
            return [this.canvas[0] / 2, this.canvas[1] / 2];
        let sx = 0;
        let sy = 0;
        for (const node of members) {
            const [x, y] = this.nodePositions.get(node);
            sx += x;
            sy += y;
        }
        return [sx / members.length, sy / members.length];
    }
    /** Current hull polygon for a non-empty edge (same rules as the server). */
    hullFor(edge) {
        const members = this.model.edgeMembers.get(edge);
        if (!members || members.length === 0)
            return null;
        const pts = members.map((n) => this.nodePositions.get(n));
        return memberHull(pts, this.hullPadding);
    }
    allHulls() {
        const hulls = new Map();
        for (const edge of this.model.edges) {
            const polygon = this.hullFor(edge);
            if (polygon)
                hulls.set(edge, polygon);
        }
        return hulls;
    }
    /** Every member disc of every hull containing the node lies strictly inside it. */
    nodeDiscContained(node) {
        for (const edge of this.model.nodeMemberships.get(node) ?? []) {
            const polygon = this.hullFor(edge);
            if (!polygon)
                return false;
            for (const member of this.model.edgeMembers.get(edge)) {
                if (!discInside(polygon, this.nodePositions.get(member), this.nodeRadius))
                    return false;
            }
        }
        return true;
    }
    /** Move a node to the pointer and pin it; returns the edges whose hulls change. */
    dragPin(node, x, y) {
        if (!this.nodePositions.has(node))
            return [];
        this.nodePositions.set(node, [x, y]);
        this.pinned.add(node);
        return [...(this.model.nodeMemberships.get(node) ?? [])];
    }
    releasePin(node) {
        this.pinned.delete(node);
    }
    toggleSelect(kind, id) {
        const target = kind === "node" ? this.selectedNodes : this.selectedEdges;
        const exists = kind === "node" ? this.model.nodeProps.has(id) : this.model.edgeProps.has(id);
        if (!exists)
            return;
        if (target.has(id))
            target.delete(id);
        else
            target.add(id);
    }
    clearSelection() {
        this.selectedNodes.clear();
        this.selectedEdges.clear();
    }
    /**
     * Grow the selection: nodes_of_edges adds every node incident to a selected
     * edge, edges_of_nodes every edge containing a selected node. Monotone.
     */
    expandSelection(direction) {
        if (direction === "nodes_of_edges") {
            for (const edge of this.selectedEdges) {
                for (const node of this.model.edgeMembers.get(edge) ?? [])
                    this.selectedNodes.add(node);
            }
        }
        else {
            for (const node of this.selectedNodes) {
                for (const edge of this.model.nodeMemberships.get(node) ?? [])
                    this.selectedEdges.add(edge);
            }
        }
    }
    /** Alternate both expansion directions until a fixed point is reached. */
    expandToFixedPoint() {
        for (;;) {
            const before = this.selectedNodes.size + this.selectedEdges.size;
            this.expandSelection("nodes_of_edges");
            this.expandSelection("edges_of_nodes");
            if (this.selectedNodes.size + this.selectedEdges.size === before)
                return;
        }
    }
    /** Select exactly the nodes whose centers lie within the rectangle. */
    brushSelect(rect, additive = false) {
        if (!additive)
            this.clearSelection();
        const xLo = Math.min(rect.x0, rect.x1);
        const xHi = Math.max(rect.x0, rect.x1);
        const yLo = Math.min(rect.y0, rect.y1);
        const yHi = Math.max(rect.y0, rect.y1);
        for (const [node, [x, y]] of this.nodePositions) {
            if (xLo <= x && x <= xHi && yLo <= y && y <= yHi)
                this.selectedNodes.add(node);
        }
    }
}
