/**
 * Live spring simulation resumed after interaction: the same bipartite
 * force model as the server layout (phantom edge vertices pull members
 * together, everything repels), except pinned nodes never move and the
 * step cools until the simulation goes idle.
 */
export class Simulation {
    constructor(model, state, initialStep = 24, decay = 0.92, idleStep = 0.25) {
        this.model = model;
        this.state = state;
        this.initialStep = initialStep;
        this.decay = decay;
        this.idleStep = idleStep;
        this.step = 0;
    }
    get running() {
        return this.step > this.idleStep;
    }
    reheat() {
        this.step = this.initialStep;
    }
    stop() {
        this.step = 0;
    }
    /** One force pass; returns true while the simulation stays hot. */
    tick() {
        if (!this.running)
            return false;
        const { model, state } = this;
        const order = [
            ...model.nodes.map((v) => ["n", v]),
            ...model.edges.map((v) => ["e", v]),
        ];
        if (order.length === 0) {
            this.step = 0;
            return false;
        }
        const pos = (key) => key[0] === "n" ? state.nodePositions.get(key[1]) : state.edgePositions.get(key[1]);
        const [width, height] = state.canvas;
        const ideal = Math.sqrt((width * height) / order.length);
        const disp = new Map();
        const keyOf = (key) => `${key[0]}:${key[1]}`;
        for (const key of order)
            disp.set(keyOf(key), [0, 0]);
        for (let i = 0; i < order.length; i++) {
            const a = order[i];
            const [ax, ay] = pos(a);
            for (let j = i + 1; j < order.length; j++) {
                const b = order[j];
                let dx = ax - pos(b)[0];
                let dy = ay - pos(b)[1];
                let dist = Math.hypot(dx, dy);
                if (dist < 1e-12) {
                    dx = 1;
                    dy = 0;
                    dist = 1;
                }
                const force = (ideal * ideal) / dist;
                const fx = (force * dx) / dist;
                const fy = (force * dy) / dist;
                const da = disp.get(keyOf(a));
                const db = disp.get(keyOf(b));
                da[0] += fx;
                da[1] += fy;
                db[0] -= fx;
                db[1] -= fy;
            }
        }
        for (const edge of model.edges) {
            for (const node of model.edgeMembers.get(edge) ?? []) {
                const [ex, ey] = state.edgePositions.get(edge);
                const [nx, ny] = state.nodePositions.get(node);
                const dx = ex - nx;
                const dy = ey - ny;
                const dist = Math.hypot(dx, dy);
                if (dist < 1e-12)
                    continue;
                const force = (dist * dist) / ideal;
                const fx = (force * dx) / dist;
                const fy = (force * dy) / dist;
                const de = disp.get(`e:${edge}`);
                const dn = disp.get(`n:${node}`);
                de[0] -= fx;
                de[1] -= fy;
                dn[0] += fx;
                dn[1] += fy;
            }
        }
        for (const key of order) {
            const [kind, id] = key;
            if (kind === "n" && state.pinned.has(id))
                continue;
            let [dx, dy] = disp.get(keyOf(key));
            const length = Math.hypot(dx, dy);
            if (length > this.step) {
                dx = (dx / length) * this.step;
                dy = (dy / length) * this.step;
            }
            const store = kind === "n" ? state.nodePositions : state.edgePositions;
            const [x, y] = store.get(id);
            // keep everything on-canvas so hulls stay visible while untangling
            store.set(id, [
                Math.min(width - state.hullPadding, Math.max(state.hullPadding, x + dx)),
                Math.min(height - state.hullPadding, Math.max(state.hullPadding, y + dy)),
            ]);
        }
        this.step *= this.decay;
        return this.running;
    }
}
