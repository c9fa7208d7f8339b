import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { beforeEach, describe, expect, it, vi } from "vitest";

import { boot } from "../src/main";
import { readGraph } from "../src/schema";
import { Viewer } from "../src/viewer";

const here = dirname(fileURLToPath(import.meta.url));
const goldenText = readFileSync(join(here, "..", "..", "tests", "golden", "decades.json"), "utf8");

function freshGolden(): any {
  return JSON.parse(goldenText);
}

function mount(doc: any = freshGolden()): { viewer: Viewer; host: HTMLElement } {
  document.body.innerHTML = "";
  const host = document.createElement("div");
  document.body.appendChild(host);
  const viewer = new Viewer(host, readGraph(doc));
  return { viewer, host };
}

interface Center {
  label: string;
  x: number;
  y: number;
}

function nodeCenters(host: HTMLElement): Center[] {
  return [...host.querySelectorAll("g.cv-node")].map((g) => {
    const m = /translate\((-?[\d.eE+-]+),(-?[\d.eE+-]+)\)/.exec(g.getAttribute("transform") ?? "");
    expect(m, `node ${g.getAttribute("data-label")} has no position`).not.toBeNull();
    return { label: g.getAttribute("data-label")!, x: parseFloat(m![1]), y: parseFloat(m![2]) };
  });
}

function shapeOf(host: HTMLElement, label: string): SVGPathElement {
  const el = host.querySelector(`g.cv-node[data-label="${label}"] path.cv-shape`);
  expect(el, `no shape for ${label}`).not.toBeNull();
  return el as SVGPathElement;
}

function radiusOf(host: HTMLElement, label: string): number {
  // both shapes start "M <-r> ..." so the first coordinate recovers the radius
  const d = shapeOf(host, label).getAttribute("d")!;
  return -parseFloat(/^M (-?[\d.]+) /.exec(d)![1]);
}

function setInput(host: HTMLElement, selector: string, value: string, type: "input" | "change" = "input"): void {
  const el = host.querySelector(selector) as HTMLInputElement | HTMLSelectElement;
  expect(el, `missing control ${selector}`).not.toBeNull();
  el.value = value;
  el.dispatchEvent(new Event(type, { bubbles: true }));
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("loading the golden fixture", () => {
  it("draws every node and edge", () => {
    const { host } = mount();
    expect(host.querySelectorAll("g.cv-node")).toHaveLength(6);
    expect(host.querySelectorAll("line.cv-edge")).toHaveLength(4);
    expect(host.querySelector("#cv-info")!.textContent).toBe("12 scenarios, 6 events, population mode");
  });

  it("places all nodes inside the viewport", () => {
    const { host } = mount();
    for (const c of nodeCenters(host)) {
      expect(c.x).toBeGreaterThanOrEqual(0);
      expect(c.x).toBeLessThanOrEqual(960);
      expect(c.y).toBeGreaterThanOrEqual(0);
      expect(c.y).toBeLessThanOrEqual(600);
    }
  });

  it("uses the embedded coordinates rather than running a layout", () => {
    const { viewer, host } = mount();
    // ready resolves synchronously for embedded positions; distances between
    // nodes must match the fixture geometry up to one uniform scale factor
    let settled = false;
    void viewer.ready.then(() => {
      settled = true;
    });
    const centers = Object.fromEntries(nodeCenters(host).map((c) => [c.label, c]));
    const g = freshGolden();
    const raw = Object.fromEntries(g.nodes.map((n: any) => [n.label, n]));
    const pairs: Array<[string, string]> = [
      ["Fiction", "England"],
      ["1980s", "1970s"],
      ["Fiction", "Science"],
    ];
    const ratios = pairs.map(([a, b]) => {
      const screen = Math.hypot(centers[a].x - centers[b].x, centers[a].y - centers[b].y);
      const source = Math.hypot(raw[a].x - raw[b].x, raw[a].y - raw[b].y);
      return screen / source;
    });
    expect(ratios[1]).toBeCloseTo(ratios[0], 6);
    expect(ratios[2]).toBeCloseTo(ratios[0], 6);
    return viewer.ready.then(() => expect(settled).toBe(true));
  });

  it("renders the same scene for the same document and state", () => {
    const one = mount().viewer.svgMarkup();
    const two = mount().viewer.svgMarkup();
    expect(one).toBe(two);
  });
});

describe("threshold control", () => {
  it("hides every edge at the top of the slider and keeps all nodes", () => {
    const { host } = mount();
    const slider = host.querySelector("#cv-threshold") as HTMLInputElement;
    setInput(host, "#cv-threshold", slider.max);
    expect(host.querySelectorAll("line.cv-edge")).toHaveLength(0);
    expect(host.querySelectorAll("g.cv-node")).toHaveLength(6);
    expect(host.querySelector("#cv-hidden-count")!.textContent).toBe("4 of 4 edges hidden");
  });

  it("shows every edge at zero", () => {
    const { host } = mount();
    setInput(host, "#cv-threshold", String(0));
    expect(host.querySelectorAll("line.cv-edge")).toHaveLength(4);
    expect(host.querySelector("#cv-hidden-count")!.textContent).toBe("0 of 4 edges hidden");
  });

  it("keeps exactly the edges at or above the median threshold", () => {
    const { viewer, host } = mount();
    const ds = freshGolden()
      .edges.map((e: any) => e.d)
      .sort((a: number, b: number) => a - b);
    const median = (ds[1] + ds[2]) / 2;
    viewer.setThreshold(median);
    const kept = [...host.querySelectorAll("line.cv-edge")].map(
      (l) => `${l.getAttribute("data-source")}:${l.getAttribute("data-target")}`,
    );
    expect(kept.sort()).toEqual(["0:2", "3:4"]);
    expect(host.querySelector("#cv-hidden-count")!.textContent).toBe("2 of 4 edges hidden");
  });

  it("treats thresholds beyond the largest d as hide everything", () => {
    const { viewer, host } = mount();
    viewer.setThreshold(99);
    expect(host.querySelectorAll("line.cv-edge")).toHaveLength(0);
  });
});

describe("search", () => {
  it('highlights England for the query "Eng" and centers it', () => {
    const { host } = mount();
    setInput(host, "#cv-search", "Eng");
    const hits = host.querySelectorAll("g.cv-node.cv-hit");
    expect(hits).toHaveLength(1);
    expect(hits[0].getAttribute("data-label")).toBe("England");
    expect(hits[0].querySelector("circle.cv-ring")!.getAttribute("visibility")).toBe("visible");

    const tr = host.querySelector("g.cv-root")!.getAttribute("transform")!;
    const m = /translate\((-?[\d.eE+-]+),(-?[\d.eE+-]+)\) scale\((-?[\d.eE+-]+)\)/.exec(tr)!;
    const [tx, ty, k] = [parseFloat(m[1]), parseFloat(m[2]), parseFloat(m[3])];
    const eng = nodeCenters(host).find((c) => c.label === "England")!;
    expect(k * eng.x + tx).toBeCloseTo(480, 6);
    expect(k * eng.y + ty).toBeCloseTo(300, 6);
  });

  it("matches case insensitively and counts multiple hits", () => {
    const { host } = mount();
    setInput(host, "#cv-search", "eng");
    expect(host.querySelectorAll("g.cv-node.cv-hit")).toHaveLength(1);

    setInput(host, "#cv-search", "19");
    const hits = [...host.querySelectorAll("g.cv-node.cv-hit")].map((g) => g.getAttribute("data-label"));
    expect(hits.sort()).toEqual(["1970s", "1980s"]);
    expect(host.querySelector("#cv-note")!.textContent).toBe("2 of 6 labels match");
  });

  it("reports no matches without blocking the page", () => {
    const { host } = mount();
    setInput(host, "#cv-search", "zzz");
    expect(host.querySelectorAll("g.cv-node.cv-hit")).toHaveLength(0);
    expect(host.querySelector("#cv-note")!.textContent).toBe("no matches");
    expect(host.querySelectorAll("g.cv-node")).toHaveLength(6);
  });

  it("clears highlights on an empty query", () => {
    const { host } = mount();
    setInput(host, "#cv-search", "Eng");
    setInput(host, "#cv-search", "");
    expect(host.querySelectorAll("g.cv-node.cv-hit")).toHaveLength(0);
    expect(host.querySelector("#cv-note")!.textContent).toBe("");
  });
});

describe("node and edge appearance", () => {
  it("draws marked events as crosses and others as circles", () => {
    const { host } = mount();
    expect(shapeOf(host, "1980s").getAttribute("d")).toContain("H");
    expect(shapeOf(host, "1970s").getAttribute("d")).toContain("H");
    expect(shapeOf(host, "Fiction").getAttribute("d")).toContain("a ");
  });

  it("turns crosses into circles when the shape toggle is off", () => {
    const { host } = mount();
    const box = host.querySelector("#cv-crosses") as HTMLInputElement;
    box.checked = false;
    box.dispatchEvent(new Event("change", { bubbles: true }));
    expect(shapeOf(host, "1980s").getAttribute("d")).toContain("a ");
  });

  it("keeps node radius monotone in frequency", () => {
    const { host } = mount();
    const fiction = radiusOf(host, "Fiction"); // frequency 7
    const england = radiusOf(host, "England"); // frequency 5
    const science = radiusOf(host, "Science"); // frequency 4
    expect(fiction).toBeGreaterThan(england);
    expect(england).toBeGreaterThan(science);
  });

  it("offers a uniform node size", () => {
    const { host } = mount();
    setInput(host, "#cv-size", "uniform", "change");
    const radii = ["Fiction", "England", "Science", "1980s"].map((l) => radiusOf(host, l));
    expect(new Set(radii).size).toBe(1);
  });

  it("keeps edge width monotone in d and supports uniform width", () => {
    const { host } = mount();
    const widthByD = new Map(
      [...host.querySelectorAll("line.cv-edge")].map((l) => [
        parseFloat(l.getAttribute("data-d")!),
        parseFloat(l.getAttribute("stroke-width")!),
      ]),
    );
    const sorted = [...widthByD.keys()].sort((a, b) => a - b);
    for (let i = 1; i < sorted.length; i++) {
      expect(widthByD.get(sorted[i])!).toBeGreaterThan(widthByD.get(sorted[i - 1])!);
    }

    setInput(host, "#cv-width", "uniform", "change");
    const widths = [...host.querySelectorAll("line.cv-edge")].map((l) => l.getAttribute("stroke-width"));
    expect(new Set(widths).size).toBe(1);
  });

  it("recolors nodes by the marker flag", () => {
    const { host } = mount();
    setInput(host, "#cv-color-by", "marker", "change");
    expect(shapeOf(host, "England").getAttribute("fill")).toBe("#4e79a7");
    // crosses carry their color on the stroke
    expect(shapeOf(host, "1980s").getAttribute("stroke")).toBe("#e15759");
  });

  it("recolors nodes by a string attribute with a stable assignment", () => {
    const doc = freshGolden();
    for (const node of doc.nodes) {
      node.attrs = node.marker ? {} : { kind: node.label < "G" ? "early" : "late" };
    }
    const { host } = mount(doc);
    setInput(host, "#cv-color-by", "attr:kind", "change");
    const fills = Object.fromEntries(
      ["England", "Fiction", "History", "Science"].map((l) => [l, shapeOf(host, l).getAttribute("fill")]),
    );
    expect(fills["England"]).toBe(fills["Fiction"]);
    expect(fills["History"]).toBe(fills["Science"]);
    expect(fills["England"]).not.toBe(fills["History"]);
    // nodes without the attribute fall back to grey
    expect(shapeOf(host, "1980s").getAttribute("stroke")).toBe("#9aa0a6");
  });

  it("applies the base node color and the edge color inputs", () => {
    const { host } = mount();
    setInput(host, "#cv-node-color", "#123456");
    expect(shapeOf(host, "Fiction").getAttribute("fill")).toBe("#123456");
    setInput(host, "#cv-edge-color", "#654321");
    for (const line of host.querySelectorAll("line.cv-edge")) {
      expect(line.getAttribute("stroke")).toBe("#654321");
    }
  });
});

describe("client side layout", () => {
  function withoutPositions(): any {
    const doc = freshGolden();
    for (const node of doc.nodes) {
      delete node.x;
      delete node.y;
    }
    return doc;
  }

  it("settles all nodes inside the viewport when positions are absent", async () => {
    const { viewer, host } = mount(withoutPositions());
    await viewer.ready;
    for (const c of nodeCenters(host)) {
      expect(c.x).toBeGreaterThanOrEqual(0);
      expect(c.x).toBeLessThanOrEqual(960);
      expect(c.y).toBeGreaterThanOrEqual(0);
      expect(c.y).toBeLessThanOrEqual(600);
    }
  });

  it("reruns deterministically", async () => {
    const { viewer, host } = mount(withoutPositions());
    await viewer.ready;
    const first = nodeCenters(host);
    await viewer.relayout();
    const second = nodeCenters(host);
    expect(second).toHaveLength(first.length);
    for (let i = 0; i < first.length; i++) {
      expect(second[i].x).toBeCloseTo(first[i].x, 6);
      expect(second[i].y).toBeCloseTo(first[i].y, 6);
    }
  });

  it("reruns on request and can restore the embedded positions", async () => {
    const { viewer, host } = mount();
    const before = nodeCenters(host);
    (host.querySelector("#cv-relayout") as HTMLButtonElement).click();
    await viewer.relayout();
    (host.querySelector("#cv-reset") as HTMLButtonElement).click();
    const after = nodeCenters(host);
    for (let i = 0; i < before.length; i++) {
      expect(after[i].x).toBeCloseTo(before[i].x, 9);
      expect(after[i].y).toBeCloseTo(before[i].y, 9);
    }
  });
});

describe("export", () => {
  it("produces standalone svg markup of the current scene", () => {
    const { viewer } = mount();
    const markup = viewer.svgMarkup();
    expect(markup).toContain("<svg");
    expect(markup).toContain('xmlns="http://www.w3.org/2000/svg"');
    expect(markup.match(/cv-node/g)!.length).toBeGreaterThanOrEqual(6);
    expect(markup).toContain("England");
  });

  it("has working export buttons on the panel", () => {
    const { host } = mount();
    expect(host.querySelector("#cv-export-svg")).not.toBeNull();
    expect(host.querySelector("#cv-export-png")).not.toBeNull();
  });
});

describe("boot on a full page", () => {
  function page(payload: string): void {
    document.body.innerHTML = "";
    const app = document.createElement("div");
    app.id = "app";
    const holder = document.createElement("script");
    holder.setAttribute("type", "application/json");
    holder.id = "graph-data";
    holder.textContent = payload;
    document.body.appendChild(app);
    document.body.appendChild(holder);
  }

  it("mounts the viewer from the embedded payload", () => {
    page(goldenText);
    const viewer = boot();
    expect(viewer).not.toBeNull();
    expect(document.querySelectorAll("g.cv-node")).toHaveLength(6);
    expect(document.querySelector(".cv-banner")).toBeNull();
  });

  it("shows a banner on malformed json, not a blank page", () => {
    page("{nodes: oops");
    expect(boot()).toBeNull();
    const banner = document.querySelector(".cv-banner");
    expect(banner).not.toBeNull();
    expect(banner!.textContent).toContain("could not parse");
  });

  it("shows a banner naming the first bad field on schema violations", () => {
    const doc = freshGolden();
    delete doc.nodes[0].frequency;
    page(JSON.stringify(doc));
    expect(boot()).toBeNull();
    expect(document.querySelector(".cv-banner")!.textContent).toContain("nodes[0].frequency");
  });

  it("issues no network request while loading and interacting", async () => {
    const fetchSpy = vi.fn();
    vi.stubGlobal("fetch", fetchSpy);
    const xhrOpen = vi.spyOn(XMLHttpRequest.prototype, "open");

    page(goldenText);
    const viewer = boot()!;
    const host = document.getElementById("app")!;
    setInput(host, "#cv-search", "Eng");
    const slider = host.querySelector("#cv-threshold") as HTMLInputElement;
    setInput(host, "#cv-threshold", slider.max);
    setInput(host, "#cv-color-by", "marker", "change");
    await viewer.relayout();
    viewer.svgMarkup();

    expect(fetchSpy).not.toHaveBeenCalled();
    expect(xhrOpen).not.toHaveBeenCalled();
    expect(document.querySelectorAll("img, script[src], link[href]")).toHaveLength(0);

    vi.unstubAllGlobals();
    xhrOpen.mockRestore();
  });
});
