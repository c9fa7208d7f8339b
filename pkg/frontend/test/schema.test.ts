import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { readGraph, SchemaError } from "../src/schema";

const here = dirname(fileURLToPath(import.meta.url));
const goldenText = readFileSync(join(here, "..", "..", "tests", "golden", "decades.json"), "utf8");

function minimalDoc(): any {
  return {
    nodes: [
      { id: 0, label: "A", frequency: 3, marker: false, attrs: {} },
      { id: 1, label: "B", frequency: 2, marker: true, attrs: {} },
    ],
    edges: [{ source: 0, target: 1, c: 2, expected: 1.5, e: 0.5, d: 1.25 }],
    meta: { N: 4, M: 2, mode: "population", min_d: 0 },
  };
}

function failsAt(doc: unknown, field: string): SchemaError {
  try {
    readGraph(doc);
  } catch (err) {
    expect(err).toBeInstanceOf(SchemaError);
    expect((err as SchemaError).field).toBe(field);
    return err as SchemaError;
  }
  throw new Error(`expected a schema failure at ${field}`);
}

describe("readGraph on well formed input", () => {
  it("accepts the golden fixture", () => {
    const graph = readGraph(JSON.parse(goldenText));
    expect(graph.nodes).toHaveLength(6);
    expect(graph.edges).toHaveLength(4);
    expect(graph.meta).toEqual({ N: 12, M: 6, mode: "population", min_d: 0.0 });
    expect(graph.hasPositions).toBe(true);
    expect(graph.nodes[2].label).toBe("England");
  });

  it("accepts a minimal document without positions", () => {
    const graph = readGraph(minimalDoc());
    expect(graph.hasPositions).toBe(false);
    expect(graph.edges[0].d).toBe(1.25);
  });

  it("accepts sample mode with alpha and per edge p", () => {
    const doc = minimalDoc();
    doc.meta.mode = "sample";
    doc.meta.alpha = 0.05;
    doc.edges[0].p = 0.01;
    const graph = readGraph(doc);
    expect(graph.meta.alpha).toBe(0.05);
    expect(graph.edges[0].p).toBe(0.01);
  });

  it("keeps the optional created stamp", () => {
    const doc = minimalDoc();
    doc.meta.created = "2024-09-17T00:00:00Z";
    expect(readGraph(doc).meta.created).toBe("2024-09-17T00:00:00Z");
  });
});

describe("document structure errors", () => {
  it("rejects non objects", () => {
    failsAt([], "document");
    failsAt("nope", "document");
    failsAt(null, "document");
  });

  it("names a missing top level key", () => {
    const doc = minimalDoc();
    delete doc.meta;
    failsAt(doc, "meta");
  });

  it("rejects a nodes value that is not an array", () => {
    const doc = minimalDoc();
    doc.nodes = {};
    failsAt(doc, "nodes");
  });
});

describe("node errors", () => {
  it("names the first missing field", () => {
    const doc = minimalDoc();
    delete doc.nodes[0].frequency;
    failsAt(doc, "nodes[0].frequency");
  });

  it("rejects a zero frequency", () => {
    const doc = minimalDoc();
    doc.nodes[1].frequency = 0;
    const err = failsAt(doc, "nodes[1].frequency");
    expect(err.message).toContain(">= 1");
  });

  it("rejects a boolean where an integer belongs", () => {
    const doc = minimalDoc();
    doc.nodes[0].frequency = true;
    failsAt(doc, "nodes[0].frequency");
  });

  it("rejects an empty label", () => {
    const doc = minimalDoc();
    doc.nodes[0].label = "";
    failsAt(doc, "nodes[0].label");
  });

  it("rejects non string attribute values", () => {
    const doc = minimalDoc();
    doc.nodes[0].attrs = { year: 1963 };
    failsAt(doc, "nodes[0].attrs.year");
  });

  it("rejects a lone coordinate", () => {
    const doc = minimalDoc();
    doc.nodes[0].x = 0.5;
    failsAt(doc, "nodes[0].x");
  });

  it("rejects positions on only part of the node set", () => {
    const doc = minimalDoc();
    doc.nodes[0].x = 0.5;
    doc.nodes[0].y = 0.5;
    const err = failsAt(doc, "nodes");
    expect(err.message).toContain("every node or none");
  });

  it("rejects duplicate ids", () => {
    const doc = minimalDoc();
    doc.nodes[1].id = 0;
    failsAt(doc, "nodes[1].id");
  });
});

describe("edge errors", () => {
  it("rejects an endpoint that references no node", () => {
    const doc = minimalDoc();
    doc.edges[0].source = 7;
    const err = failsAt(doc, "edges[0].source");
    expect(err.message).toContain("unknown node");
  });

  it("rejects self loops", () => {
    const doc = minimalDoc();
    doc.edges[0].target = 0;
    failsAt(doc, "edges[0].target");
  });

  it("rejects a non positive d", () => {
    const doc = minimalDoc();
    doc.edges[0].d = 0;
    const err = failsAt(doc, "edges[0].d");
    expect(err.message).toContain("positive");
  });

  it("rejects a non positive expectation", () => {
    const doc = minimalDoc();
    doc.edges[0].expected = 0;
    failsAt(doc, "edges[0].expected");
  });

  it("rejects duplicate pairs even when reversed", () => {
    const doc = minimalDoc();
    doc.edges.push({ source: 1, target: 0, c: 2, expected: 1.5, e: 0.5, d: 1.25 });
    const err = failsAt(doc, "edges[1]");
    expect(err.message).toContain("duplicate pair");
  });

  it("forbids p outside sample mode", () => {
    const doc = minimalDoc();
    doc.edges[0].p = 0.2;
    failsAt(doc, "edges[0].p");
  });

  it("requires p in sample mode", () => {
    const doc = minimalDoc();
    doc.meta.mode = "sample";
    doc.meta.alpha = 0.05;
    failsAt(doc, "edges[0].p");
  });
});

describe("meta errors", () => {
  it("rejects unknown modes", () => {
    const doc = minimalDoc();
    doc.meta.mode = "bayesian";
    failsAt(doc, "meta.mode");
  });

  it("rejects a negative min_d", () => {
    const doc = minimalDoc();
    doc.meta.min_d = -0.5;
    failsAt(doc, "meta.min_d");
  });

  it("requires alpha in sample mode and bounds it", () => {
    const doc = minimalDoc();
    doc.meta.mode = "sample";
    doc.edges = [];
    failsAt(doc, "meta.alpha");
    doc.meta.alpha = 1.0;
    failsAt(doc, "meta.alpha");
  });

  it("forbids alpha in population mode", () => {
    const doc = minimalDoc();
    doc.meta.alpha = 0.05;
    failsAt(doc, "meta.alpha");
  });

  it("rejects a non string created stamp", () => {
    const doc = minimalDoc();
    doc.meta.created = 12345;
    failsAt(doc, "meta.created");
  });
});

describe("error ordering", () => {
  it("reports the earliest offending field when several are bad", () => {
    const doc = minimalDoc();
    doc.nodes[0].frequency = -1;
    doc.edges[0].d = 0;
    failsAt(doc, "nodes[0].frequency");
  });
});
