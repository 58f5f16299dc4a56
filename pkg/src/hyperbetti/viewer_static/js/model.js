/** HIF and layout document types plus an indexed hypergraph model. */
const defaultProps = () => ({ weight: 1.0, attrs: {} });
export class HypergraphModel {
    constructor(name) {
        this.nodes = [];
        this.edges = [];
        this.nodeProps = new Map();
        this.edgeProps = new Map();
        this.edgeMembers = new Map();
        this.nodeMemberships = new Map();
        this.name = name;
    }
    static fromHif(doc) {
        const name = typeof doc.metadata?.name === "string" ? doc.metadata.name : "";
        const model = new HypergraphModel(name);
        const registerNode = (id, props) => {
            if (!model.nodeProps.has(id)) {
                model.nodeProps.set(id, props ?? defaultProps());
                model.nodeMemberships.set(id, []);
            }
            else if (props) {
                model.nodeProps.set(id, props);
            }
        };
        const registerEdge = (id, props) => {
            if (!model.edgeProps.has(id)) {
                model.edgeProps.set(id, props ?? defaultProps());
                model.edgeMembers.set(id, []);
            }
            else if (props) {
                model.edgeProps.set(id, props);
            }
        };
        for (const rec of doc.nodes ?? []) {
            registerNode(String(rec.node), { weight: rec.weight ?? 1.0, attrs: rec.attrs ?? {} });
        }
        for (const rec of doc.edges ?? []) {
            registerEdge(String(rec.edge), { weight: rec.weight ?? 1.0, attrs: rec.attrs ?? {} });
        }
        for (const rec of doc.incidences) {
            const edge = String(rec.edge);
            const node = String(rec.node);
            registerEdge(edge);
            registerNode(node);
            model.edgeMembers.get(edge).push(node);
            model.nodeMemberships.get(node).push(edge);
        }
        model.nodes.push(...[...model.nodeProps.keys()].sort());
        model.edges.push(...[...model.edgeProps.keys()].sort());
        for (const members of model.edgeMembers.values())
            members.sort();
        for (const memberships of model.nodeMemberships.values())
            memberships.sort();
        return model;
    }
    props(kind, id) {
        return kind === "node" ? this.nodeProps.get(id) : this.edgeProps.get(id);
    }
    /** Attribute keys observed on any entity of the given kind, sorted. */
    attrKeys(kind) {
        const store = kind === "node" ? this.nodeProps : this.edgeProps;
        const keys = new Set();
        for (const props of store.values()) {
            for (const key of Object.keys(props.attrs))
                keys.add(key);
        }
        return [...keys].sort();
    }
}
