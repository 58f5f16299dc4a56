/** HIF and layout document types plus an indexed hypergraph model. */

export type Attrs = Record<string, unknown>;

export interface EntityProps {
  weight: number;
  attrs: Attrs;
}

export interface HifRecord {
  node?: unknown;
  edge?: unknown;
  weight?: number;
  attrs?: Attrs;
}

export interface HifDocument {
  "network-type"?: string;
  metadata?: Record<string, unknown>;
  nodes?: HifRecord[];
  edges?: HifRecord[];
  incidences: HifRecord[];
}

export interface LayoutParamsDoc {
  iterations: number;
  canvas: [number, number];
  node_radius: number;
  hull_padding: number;
  cooling: { initial_step: number; decay: number };
}

export interface EncodingBindings {
  node_size?: string;
  node_color?: string;
  edge_color?: string;
}

export interface LayoutDoc {
  positions: Record<string, [number, number]>;
  pinned: string[];
  hulls: Record<string, [number, number][]>;
  encodings: EncodingBindings;
  seed: number;
  params: LayoutParamsDoc;
}

const defaultProps = (): EntityProps => ({ weight: 1.0, attrs: {} });

export class HypergraphModel {
  readonly nodes: string[] = [];
  readonly edges: string[] = [];
  readonly nodeProps = new Map<string, EntityProps>();
  readonly edgeProps = new Map<string, EntityProps>();
  readonly edgeMembers = new Map<string, string[]>();
  readonly nodeMemberships = new Map<string, string[]>();
  readonly name: string;

  private constructor(name: string) {
    this.name = name;
  }

  static fromHif(doc: HifDocument): HypergraphModel {
    const name = typeof doc.metadata?.name === "string" ? doc.metadata.name : "";
    const model = new HypergraphModel(name);
    const registerNode = (id: string, props?: EntityProps) => {
      if (!model.nodeProps.has(id)) {
        model.nodeProps.set(id, props ?? defaultProps());
        model.nodeMemberships.set(id, []);
      } else if (props) {
        model.nodeProps.set(id, props);
      }
    };
    const registerEdge = (id: string, props?: EntityProps) => {
      if (!model.edgeProps.has(id)) {
        model.edgeProps.set(id, props ?? defaultProps());
        model.edgeMembers.set(id, []);
      } else if (props) {
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
      model.edgeMembers.get(edge)!.push(node);
      model.nodeMemberships.get(node)!.push(edge);
    }
    model.nodes.push(...[...model.nodeProps.keys()].sort());
    model.edges.push(...[...model.edgeProps.keys()].sort());
    for (const members of model.edgeMembers.values()) members.sort();
    for (const memberships of model.nodeMemberships.values()) memberships.sort();
    return model;
  }

  props(kind: "node" | "edge", id: string): EntityProps | undefined {
    return kind === "node" ? this.nodeProps.get(id) : this.edgeProps.get(id);
  }

  /** Attribute keys observed on any entity of the given kind, sorted. */
  attrKeys(kind: "node" | "edge"): string[] {
    const store = kind === "node" ? this.nodeProps : this.edgeProps;
    const keys = new Set<string>();
    for (const props of store.values()) {
      for (const key of Object.keys(props.attrs)) keys.add(key);
    }
    return [...keys].sort();
  }
}
