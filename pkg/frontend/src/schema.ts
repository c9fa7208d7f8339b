/**
 * Graph JSON validation.
 *
 * The document shape mirrors what the analysis pipeline exports: a node per
 * event (id, label, frequency, marker flag, string attributes, optional x/y),
 * an edge per adjacent pair (counts and residual statistics), and a meta
 * block. Validation walks the document in order and throws on the first
 * offending field, naming its path, so the error banner can point at it.
 */

export interface GraphNode {
  id: number;
  label: string;
  frequency: number;
  marker: boolean;
  attrs: Record<string, string>;
  x?: number;
  y?: number;
}

export interface GraphEdge {
  source: number;
  target: number;
  c: number;
  expected: number;
  e: number;
  d: number;
  p?: number;
}

export interface GraphMeta {
  N: number;
  M: number;
  mode: "population" | "sample";
  min_d: number;
  alpha?: number;
  created?: string;
}

export interface Graph {
  nodes: GraphNode[];
  edges: GraphEdge[];
  meta: GraphMeta;
  /** true when every node carries coordinates (all-or-none is enforced) */
  hasPositions: boolean;
}

export class SchemaError extends Error {
  readonly field: string;

  constructor(field: string, problem: string) {
    super(`${field}: ${problem}`);
    this.name = "SchemaError";
    this.field = field;
  }
}

function isRecord(v: unknown): v is Record<string, unknown> {
  return typeof v === "object" && v !== null && !Array.isArray(v);
}

function isFiniteNumber(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

function isInt(v: unknown): v is number {
  return typeof v === "number" && Number.isInteger(v);
}

function wantString(owner: Record<string, unknown>, path: string, key: string): string {
  const v = owner[key];
  if (typeof v !== "string") throw new SchemaError(`${path}.${key}`, "expected a string");
  return v;
}

function wantBool(owner: Record<string, unknown>, path: string, key: string): boolean {
  const v = owner[key];
  if (typeof v !== "boolean") throw new SchemaError(`${path}.${key}`, "expected a boolean");
  return v;
}

function wantInt(owner: Record<string, unknown>, path: string, key: string, min: number): number {
  const v = owner[key];
  if (!isInt(v)) throw new SchemaError(`${path}.${key}`, "expected an integer");
  if (v < min) throw new SchemaError(`${path}.${key}`, `must be >= ${min}`);
  return v;
}

function wantNumber(owner: Record<string, unknown>, path: string, key: string): number {
  const v = owner[key];
  if (!isFiniteNumber(v)) throw new SchemaError(`${path}.${key}`, "expected a finite number");
  return v;
}

function readNode(raw: unknown, path: string): GraphNode {
  if (!isRecord(raw)) throw new SchemaError(path, "expected an object");
  const id = wantInt(raw, path, "id", 0);
  const label = wantString(raw, path, "label");
  if (label.length === 0) throw new SchemaError(`${path}.label`, "must not be empty");
  const frequency = wantInt(raw, path, "frequency", 1);
  const marker = wantBool(raw, path, "marker");

  const rawAttrs = raw["attrs"];
  if (!isRecord(rawAttrs)) throw new SchemaError(`${path}.attrs`, "expected an object");
  const attrs: Record<string, string> = {};
  for (const key of Object.keys(rawAttrs)) {
    const v = rawAttrs[key];
    if (typeof v !== "string") throw new SchemaError(`${path}.attrs.${key}`, "expected a string");
    attrs[key] = v;
  }

  const hasX = "x" in raw;
  const hasY = "y" in raw;
  if (hasX !== hasY) {
    throw new SchemaError(`${path}.${hasX ? "x" : "y"}`, "x and y must be given together");
  }
  const node: GraphNode = { id, label, frequency, marker, attrs };
  if (hasX) {
    node.x = wantNumber(raw, path, "x");
    node.y = wantNumber(raw, path, "y");
  }
  return node;
}

function readEdge(raw: unknown, path: string, ids: Set<number>, mode: string): GraphEdge {
  if (!isRecord(raw)) throw new SchemaError(path, "expected an object");
  const source = wantInt(raw, path, "source", 0);
  const target = wantInt(raw, path, "target", 0);
  if (!ids.has(source)) throw new SchemaError(`${path}.source`, "references an unknown node");
  if (!ids.has(target)) throw new SchemaError(`${path}.target`, "references an unknown node");
  if (source === target) throw new SchemaError(`${path}.target`, "self loops are not allowed");
  const c = wantInt(raw, path, "c", 1);
  const expected = wantNumber(raw, path, "expected");
  if (expected <= 0) throw new SchemaError(`${path}.expected`, "must be positive");
  const e = wantNumber(raw, path, "e");
  const d = wantNumber(raw, path, "d");
  if (d <= 0) throw new SchemaError(`${path}.d`, "must be positive; non-adjacent pairs do not belong here");
  const edge: GraphEdge = { source, target, c, expected, e, d };
  if (mode === "sample") {
    edge.p = wantNumber(raw, path, "p");
    if (edge.p < 0 || edge.p > 1) throw new SchemaError(`${path}.p`, "must lie in [0, 1]");
  } else if ("p" in raw) {
    throw new SchemaError(`${path}.p`, "only sample mode edges carry p");
  }
  return edge;
}

function readMeta(raw: unknown): GraphMeta {
  if (!isRecord(raw)) throw new SchemaError("meta", "expected an object");
  const N = wantInt(raw, "meta", "N", 1);
  const M = wantInt(raw, "meta", "M", 1);
  const mode = wantString(raw, "meta", "mode");
  if (mode !== "population" && mode !== "sample") {
    throw new SchemaError("meta.mode", 'expected "population" or "sample"');
  }
  const min_d = wantNumber(raw, "meta", "min_d");
  if (min_d < 0) throw new SchemaError("meta.min_d", "must be >= 0");
  const meta: GraphMeta = { N, M, mode, min_d };
  if (mode === "sample") {
    meta.alpha = wantNumber(raw, "meta", "alpha");
    if (meta.alpha <= 0 || meta.alpha >= 1) throw new SchemaError("meta.alpha", "must lie in (0, 1)");
  } else if ("alpha" in raw) {
    throw new SchemaError("meta.alpha", "only sample mode carries alpha");
  }
  if ("created" in raw) {
    meta.created = wantString(raw, "meta", "created");
  }
  return meta;
}

/** Validate a parsed JSON document and return the typed graph. */
export function readGraph(doc: unknown): Graph {
  if (!isRecord(doc)) throw new SchemaError("document", "expected a JSON object");
  for (const key of ["nodes", "edges", "meta"]) {
    if (!(key in doc)) throw new SchemaError(key, "missing");
  }
  if (!Array.isArray(doc["nodes"])) throw new SchemaError("nodes", "expected an array");
  if (!Array.isArray(doc["edges"])) throw new SchemaError("edges", "expected an array");

  const meta = readMeta(doc["meta"]);

  const nodes: GraphNode[] = [];
  const ids = new Set<number>();
  let withPos = 0;
  doc["nodes"].forEach((raw, i) => {
    const node = readNode(raw, `nodes[${i}]`);
    if (ids.has(node.id)) throw new SchemaError(`nodes[${i}].id`, "duplicate node id");
    ids.add(node.id);
    if (node.x !== undefined) withPos += 1;
    nodes.push(node);
  });
  if (withPos !== 0 && withPos !== nodes.length) {
    throw new SchemaError("nodes", "positions must cover every node or none");
  }

  const seenPairs = new Set<string>();
  const edges: GraphEdge[] = [];
  doc["edges"].forEach((raw, i) => {
    const edge = readEdge(raw, `edges[${i}]`, ids, meta.mode);
    const key =
      edge.source < edge.target ? `${edge.source}:${edge.target}` : `${edge.target}:${edge.source}`;
    if (seenPairs.has(key)) throw new SchemaError(`edges[${i}]`, "duplicate pair");
    seenPairs.add(key);
    edges.push(edge);
  });

  return { nodes, edges, meta, hasPositions: withPos > 0 && withPos === nodes.length };
}
