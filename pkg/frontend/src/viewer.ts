/**
 * Interactive explorer for a coincidence graph.
 *
 * The graph arrives as a validated document (see schema.ts). Nodes are drawn
 * at their embedded coordinates when the document carries them; otherwise a
 * client-side force simulation computes positions, run in small slices so the
 * event loop stays responsive. A control panel drives thresholding, sizing,
 * coloring, shapes, search, layout reruns and image export. Everything works
 * offline: no request of any kind leaves the page.
 */

import { drag, type D3DragEvent } from "d3-drag";
import {
  forceCollide,
  forceLink,
  forceManyBody,
  forceSimulation,
  forceX,
  forceY,
  type SimulationLinkDatum,
  type SimulationNodeDatum,
} from "d3-force";
import { select, type Selection } from "d3-selection";
import { zoom, zoomIdentity, zoomTransform, type D3ZoomEvent, type ZoomBehavior } from "d3-zoom";

import type { Graph, GraphEdge, GraphNode } from "./schema";

// Fixed world coordinates; the svg scales to its container via viewBox.
const WORLD_W = 960;
const WORLD_H = 600;
const FIT_PAD = 40;

const PALETTE = [
  "#4e79a7",
  "#f28e2c",
  "#e15759",
  "#76b7b2",
  "#59a14f",
  "#edc949",
  "#af7aa1",
  "#ff9da7",
  "#9c755f",
  "#bab0ab",
];

export interface ViewState {
  threshold: number;
  sizeByFrequency: boolean;
  widthByStrength: boolean;
  /** "single", "marker", or "attr:<key>" */
  colorBy: string;
  nodeColor: string;
  edgeColor: string;
  crossMarkers: boolean;
  query: string;
}

interface SimNode extends SimulationNodeDatum {
  id: number;
}

interface SimLink extends SimulationLinkDatum<SimNode> {
  d: number;
}

interface Point {
  x: number;
  y: number;
}

/** Drop an error banner into the host element. Used for schema failures. */
export function showBanner(host: HTMLElement, message: string): void {
  const banner = host.ownerDocument.createElement("div");
  banner.className = "cv-banner";
  banner.setAttribute("role", "alert");
  banner.textContent = message;
  host.prepend(banner);
  ensureStyle(host.ownerDocument);
}

function ensureStyle(doc: Document): void {
  if (doc.getElementById("cv-style")) return;
  const style = doc.createElement("style");
  style.id = "cv-style";
  style.textContent = `
.cv-wrap { position: relative; width: 100%; height: 100%; font: 13px/1.45 system-ui, sans-serif; color: #24292f; }
.cv-wrap svg { display: block; width: 100%; height: 100%; cursor: grab; }
.cv-banner { background: #b3261e; color: #fff; padding: 10px 14px; font: 14px/1.4 system-ui, sans-serif; }
.cv-panel { position: absolute; top: 10px; right: 10px; width: 230px; background: rgba(255,255,255,0.96);
  border: 1px solid #d0d7de; border-radius: 6px; padding: 10px 12px; box-shadow: 0 1px 4px rgba(0,0,0,0.12); }
.cv-panel label { display: block; margin: 7px 0 2px; font-weight: 600; }
.cv-panel input[type=search] { width: 100%; box-sizing: border-box; }
.cv-panel input[type=range] { width: 100%; }
.cv-panel select { width: 100%; }
.cv-row { display: flex; gap: 6px; flex-wrap: wrap; margin-top: 8px; }
.cv-row button { flex: 1 1 45%; padding: 3px 6px; }
.cv-note { color: #6e7781; min-height: 1.2em; display: block; }
.cv-count { color: #57606a; margin-top: 2px; }
.cv-info { margin-top: 8px; padding-top: 6px; border-top: 1px solid #d8dee4; color: #57606a; }
.cv-hit text { font-weight: 700; }
`;
  doc.head.appendChild(style);
}

function circlePath(r: number): string {
  return `M ${-r} 0 a ${r} ${r} 0 1 0 ${2 * r} 0 a ${r} ${r} 0 1 0 ${-2 * r} 0`;
}

function crossPath(r: number): string {
  return `M ${-r} 0 H ${r} M 0 ${-r} V ${r}`;
}

export class Viewer {
  readonly state: ViewState;
  /** resolves once the first usable positions are on screen */
  readonly ready: Promise<void>;

  private readonly graph: Graph;
  private readonly container: HTMLElement;
  private readonly doc: Document;
  private readonly maxD: number;
  private readonly maxFrequency: number;
  private readonly sliderMax: number;
  private readonly sliderStep: number;

  private svg!: Selection<SVGSVGElement, unknown, null, undefined>;
  private root!: Selection<SVGGElement, unknown, null, undefined>;
  private edgeLayer!: Selection<SVGGElement, unknown, null, undefined>;
  private nodeLayer!: Selection<SVGGElement, unknown, null, undefined>;
  private zoomBehavior!: ZoomBehavior<SVGSVGElement, unknown>;

  private pts = new Map<number, Point>();
  private hits = new Set<number>();
  private colorTables = new Map<string, Map<string, string>>();
  private layoutActive = false;
  private layoutDone: Promise<void> = Promise.resolve();

  // manual repositioning; d3-drag swallows the mousedown so zoom stays put
  private readonly dragBehavior = drag<SVGGElement, GraphNode>()
    .container(() => this.root.node() as SVGGElement)
    .on("drag", (event: D3DragEvent<SVGGElement, GraphNode, unknown>, d) => {
      this.pts.set(d.id, { x: event.x, y: event.y });
      this.place();
    });

  constructor(container: HTMLElement, graph: Graph) {
    this.container = container;
    this.doc = container.ownerDocument;
    this.graph = graph;
    this.maxD = graph.edges.reduce((m, e) => Math.max(m, e.d), 0);
    this.maxFrequency = graph.nodes.reduce((m, n) => Math.max(m, n.frequency), 1);
    // one step above the largest d so the top slider stop hides every edge
    this.sliderStep = this.maxD > 0 ? this.maxD / 100 : 1;
    this.sliderMax = this.maxD > 0 ? this.maxD + this.sliderStep : 1;

    this.state = {
      threshold: 0,
      sizeByFrequency: true,
      widthByStrength: true,
      colorBy: "single",
      nodeColor: "#4e79a7",
      edgeColor: "#9aa0a6",
      crossMarkers: true,
      query: "",
    };

    ensureStyle(this.doc);
    this.buildDom();
    this.installZoom();

    if (graph.hasPositions) {
      // embedded coordinates are authoritative; flip y so "up" stays up
      this.fitInto(graph.nodes.map((n) => ({ id: n.id, x: n.x as number, y: -(n.y as number) })));
      this.rebuild();
      this.ready = Promise.resolve();
    } else {
      this.seedRing();
      this.rebuild();
      this.ready = this.relayout();
    }
  }

  // ---------------------------------------------------------------- dom

  private buildDom(): void {
    const wrap = this.doc.createElement("div");
    wrap.className = "cv-wrap";
    this.container.appendChild(wrap);

    const svgEl = this.doc.createElementNS("http://www.w3.org/2000/svg", "svg");
    svgEl.setAttribute("viewBox", `0 0 ${WORLD_W} ${WORLD_H}`);
    svgEl.setAttribute("preserveAspectRatio", "xMidYMid meet");
    wrap.appendChild(svgEl);

    this.svg = select(svgEl as SVGSVGElement);
    this.svg
      .append("rect")
      .attr("class", "cv-bg")
      .attr("width", WORLD_W)
      .attr("height", WORLD_H)
      .attr("fill", "#ffffff");
    this.root = this.svg.append("g").attr("class", "cv-root");
    this.edgeLayer = this.root.append("g").attr("class", "cv-edges");
    this.nodeLayer = this.root.append("g").attr("class", "cv-nodes");

    const attrKeys = new Set<string>();
    for (const n of this.graph.nodes) for (const k of Object.keys(n.attrs)) attrKeys.add(k);
    const colorOptions = ['<option value="single">single color</option>', '<option value="marker">marker flag</option>']
      .concat(
        [...attrKeys].sort().map((k) => `<option value="attr:${escapeHtml(k)}">attr: ${escapeHtml(k)}</option>`),
      )
      .join("");

    const meta = this.graph.meta;
    const metaBits = [`${meta.N} scenarios`, `${meta.M} events`, `${meta.mode} mode`];
    if (meta.alpha !== undefined) metaBits.push(`alpha ${meta.alpha}`);
    if (meta.min_d > 0) metaBits.push(`min d ${meta.min_d}`);

    const panel = this.doc.createElement("div");
    panel.className = "cv-panel";
    panel.innerHTML = `
<label for="cv-search">search</label>
<input id="cv-search" type="search" placeholder="label substring" autocomplete="off">
<span id="cv-note" class="cv-note"></span>
<label for="cv-threshold">edge threshold (d)</label>
<input id="cv-threshold" type="range" min="0" max="${this.sliderMax}" step="${this.sliderStep}" value="0"${
      this.graph.edges.length === 0 ? " disabled" : ""
    }>
<div class="cv-count"><span id="cv-threshold-value">0.000</span> &middot; <span id="cv-hidden-count"></span></div>
<label for="cv-size">node size</label>
<select id="cv-size"><option value="frequency">by frequency</option><option value="uniform">uniform</option></select>
<label for="cv-color-by">node color</label>
<select id="cv-color-by">${colorOptions}</select>
<input id="cv-node-color" type="color" value="${this.state.nodeColor}" title="base node color">
<label><input id="cv-crosses" type="checkbox" checked> draw marked events as crosses</label>
<label for="cv-width">edge width</label>
<select id="cv-width"><option value="strength">by strength</option><option value="uniform">uniform</option></select>
<label for="cv-edge-color">edge color</label>
<input id="cv-edge-color" type="color" value="${this.state.edgeColor}">
<div class="cv-row">
  <button id="cv-relayout" type="button">rerun layout</button>
  <button id="cv-reset" type="button"${this.graph.hasPositions ? "" : " disabled"}>reset positions</button>
  <button id="cv-export-svg" type="button">export svg</button>
  <button id="cv-export-png" type="button">export png</button>
</div>
<div id="cv-info" class="cv-info">${escapeHtml(metaBits.join(", "))}</div>
`;
    wrap.appendChild(panel);

    this.q<HTMLInputElement>("#cv-search").addEventListener("input", (ev) => {
      this.search((ev.target as HTMLInputElement).value);
    });
    this.q<HTMLInputElement>("#cv-threshold").addEventListener("input", (ev) => {
      this.setThreshold(parseFloat((ev.target as HTMLInputElement).value));
    });
    this.q<HTMLSelectElement>("#cv-size").addEventListener("change", (ev) => {
      this.state.sizeByFrequency = (ev.target as HTMLSelectElement).value === "frequency";
      this.rebuild();
    });
    this.q<HTMLSelectElement>("#cv-color-by").addEventListener("change", (ev) => {
      this.state.colorBy = (ev.target as HTMLSelectElement).value;
      this.rebuild();
    });
    this.q<HTMLInputElement>("#cv-node-color").addEventListener("input", (ev) => {
      this.state.nodeColor = (ev.target as HTMLInputElement).value;
      this.rebuild();
    });
    this.q<HTMLInputElement>("#cv-crosses").addEventListener("change", (ev) => {
      this.state.crossMarkers = (ev.target as HTMLInputElement).checked;
      this.rebuild();
    });
    this.q<HTMLSelectElement>("#cv-width").addEventListener("change", (ev) => {
      this.state.widthByStrength = (ev.target as HTMLSelectElement).value === "strength";
      this.rebuild();
    });
    this.q<HTMLInputElement>("#cv-edge-color").addEventListener("input", (ev) => {
      this.state.edgeColor = (ev.target as HTMLInputElement).value;
      this.rebuild();
    });
    this.q<HTMLButtonElement>("#cv-relayout").addEventListener("click", () => {
      void this.relayout();
    });
    this.q<HTMLButtonElement>("#cv-reset").addEventListener("click", () => this.resetPositions());
    this.q<HTMLButtonElement>("#cv-export-svg").addEventListener("click", () => this.downloadSvg());
    this.q<HTMLButtonElement>("#cv-export-png").addEventListener("click", () => this.downloadPng());
  }

  private q<T extends Element>(selector: string): T {
    const el = this.container.querySelector(selector);
    if (!el) throw new Error(`viewer is missing ${selector}`);
    return el as T;
  }

  private installZoom(): void {
    this.zoomBehavior = zoom<SVGSVGElement, unknown>()
      // fixed extent; the default would read svg.viewBox.baseVal, which some
      // DOM implementations (jsdom among them) do not provide
      .extent([
        [0, 0],
        [WORLD_W, WORLD_H],
      ])
      .scaleExtent([0.2, 8])
      .on("zoom", (event: D3ZoomEvent<SVGSVGElement, unknown>) => {
        this.root.attr("transform", event.transform.toString());
      });
    this.svg.call(this.zoomBehavior);
  }

  // ---------------------------------------------------------------- geometry

  /** Map raw coordinates into the padded world box, preserving aspect ratio. */
  private fitInto(raw: Array<{ id: number; x: number; y: number }>): void {
    if (raw.length === 0) return;
    let x0 = Infinity;
    let x1 = -Infinity;
    let y0 = Infinity;
    let y1 = -Infinity;
    for (const p of raw) {
      x0 = Math.min(x0, p.x);
      x1 = Math.max(x1, p.x);
      y0 = Math.min(y0, p.y);
      y1 = Math.max(y1, p.y);
    }
    const spanX = x1 - x0;
    const spanY = y1 - y0;
    // degenerate extents (single node, collinear nodes) fall back to centering
    const sx = spanX > 0 ? (WORLD_W - 2 * FIT_PAD) / spanX : Infinity;
    const sy = spanY > 0 ? (WORLD_H - 2 * FIT_PAD) / spanY : Infinity;
    const scale = Number.isFinite(Math.min(sx, sy)) ? Math.min(sx, sy) : 1;
    const offX = (WORLD_W - scale * spanX) / 2;
    const offY = (WORLD_H - scale * spanY) / 2;
    this.pts = new Map(raw.map((p) => [p.id, { x: offX + scale * (p.x - x0), y: offY + scale * (p.y - y0) }]));
  }

  private seedRing(): void {
    const n = Math.max(this.graph.nodes.length, 1);
    this.fitInto(
      this.graph.nodes.map((node, i) => ({
        id: node.id,
        x: Math.cos((2 * Math.PI * i) / n),
        y: Math.sin((2 * Math.PI * i) / n),
      })),
    );
  }

  private radius(node: GraphNode): number {
    if (!this.state.sizeByFrequency) return 8;
    return 4 + 11 * Math.sqrt(node.frequency / this.maxFrequency);
  }

  private edgeWidth(edge: GraphEdge): number {
    if (!this.state.widthByStrength || this.maxD <= 0) return 1.5;
    return 0.75 + 3.25 * (edge.d / this.maxD);
  }

  private nodeFill(node: GraphNode): string {
    const by = this.state.colorBy;
    if (by === "single") return this.state.nodeColor;
    if (by === "marker") return node.marker ? PALETTE[2] : PALETTE[0];
    const key = by.slice("attr:".length);
    const value = node.attrs[key];
    if (value === undefined) return "#9aa0a6";
    return this.colorFor(key, value);
  }

  private colorFor(key: string, value: string): string {
    let table = this.colorTables.get(key);
    if (!table) {
      const values = [...new Set(this.graph.nodes.map((n) => n.attrs[key]).filter((v): v is string => v !== undefined))].sort();
      table = new Map(values.map((v, i) => [v, PALETTE[i % PALETTE.length]]));
      this.colorTables.set(key, table);
    }
    return table.get(value) ?? "#9aa0a6";
  }

  // ---------------------------------------------------------------- rendering

  /** Recompute the whole scene from (graph, state). */
  private rebuild(): void {
    const total = this.graph.edges.length;
    const visible = this.graph.edges.filter((e) => e.d >= this.state.threshold);
    const labelOf = new Map(this.graph.nodes.map((n) => [n.id, n.label]));

    this.edgeLayer
      .selectAll<SVGLineElement, GraphEdge>("line.cv-edge")
      .data(visible, (d) => `${d.source}:${d.target}`)
      .join((enter) => {
        const line = enter.append("line").attr("class", "cv-edge");
        line.append("title");
        return line;
      })
      .attr("stroke", this.state.edgeColor)
      .attr("stroke-opacity", 0.75)
      .attr("stroke-width", (d) => this.edgeWidth(d))
      .attr("data-source", (d) => d.source)
      .attr("data-target", (d) => d.target)
      .attr("data-d", (d) => d.d)
      .select("title")
      .text((d) => `${labelOf.get(d.source)} / ${labelOf.get(d.target)}: c=${d.c}, d=${round3(d.d)}`);

    const groups = this.nodeLayer
      .selectAll<SVGGElement, GraphNode>("g.cv-node")
      .data(this.graph.nodes, (d) => String(d.id))
      .join((enter) => {
        const g = enter.append("g").attr("class", "cv-node");
        g.append("circle").attr("class", "cv-ring").attr("fill", "none");
        g.append("path").attr("class", "cv-shape");
        g.append("text").attr("class", "cv-label");
        g.append("title");
        return g;
      })
      .attr("data-id", (d) => d.id)
      .attr("data-label", (d) => d.label)
      .classed("cv-hit", (d) => this.hits.has(d.id))
      .call(this.dragBehavior);

    groups
      .select<SVGCircleElement>("circle.cv-ring")
      .attr("r", (d) => this.radius(d) + 4)
      .attr("stroke", "#d4351c")
      .attr("stroke-width", 2.5)
      .attr("visibility", (d) => (this.hits.has(d.id) ? "visible" : "hidden"));

    groups
      .select<SVGPathElement>("path.cv-shape")
      .attr("d", (d) => {
        const r = this.radius(d);
        return d.marker && this.state.crossMarkers ? crossPath(r) : circlePath(r);
      })
      .attr("fill", (d) => (d.marker && this.state.crossMarkers ? "none" : this.nodeFill(d)))
      .attr("stroke", (d) => (d.marker && this.state.crossMarkers ? this.nodeFill(d) : "#343b41"))
      .attr("stroke-width", (d) => (d.marker && this.state.crossMarkers ? 3 : 1));

    groups
      .select<SVGTextElement>("text.cv-label")
      .attr("text-anchor", "middle")
      .attr("y", (d) => -(this.radius(d) + 6))
      .attr("font-size", 11)
      .attr("font-family", "system-ui, sans-serif")
      .attr("paint-order", "stroke")
      .attr("stroke", "#ffffff")
      .attr("stroke-width", 3)
      .attr("fill", "#24292f")
      .text((d) => d.label);

    groups.select<SVGTitleElement>("title").text((d) => {
      const extras = Object.entries(d.attrs).map(([k, v]) => `${k}: ${v}`);
      return [`${d.label}`, `frequency ${d.frequency}`, ...extras].join("\n");
    });

    this.q("#cv-hidden-count").textContent = `${total - visible.length} of ${total} edges hidden`;
    this.q("#cv-threshold-value").textContent = round3(this.state.threshold);
    this.place();
  }

  /** Position pass only; cheap enough to run per drag event or layout slice. */
  private place(): void {
    this.nodeLayer
      .selectAll<SVGGElement, GraphNode>("g.cv-node")
      .attr("transform", (d) => {
        const p = this.pts.get(d.id);
        return p ? `translate(${p.x},${p.y})` : null;
      });
    this.edgeLayer
      .selectAll<SVGLineElement, GraphEdge>("line.cv-edge")
      .attr("x1", (d) => this.pts.get(d.source)?.x ?? 0)
      .attr("y1", (d) => this.pts.get(d.source)?.y ?? 0)
      .attr("x2", (d) => this.pts.get(d.target)?.x ?? 0)
      .attr("y2", (d) => this.pts.get(d.target)?.y ?? 0);
  }

  // ---------------------------------------------------------------- controls

  setThreshold(value: number): void {
    this.state.threshold = Math.max(0, value);
    this.rebuild();
  }

  search(query: string): void {
    this.state.query = query;
    const needle = query.trim().toLowerCase();
    this.hits = new Set();
    if (needle.length > 0) {
      for (const n of this.graph.nodes) {
        if (n.label.toLowerCase().includes(needle)) this.hits.add(n.id);
      }
    }
    const note = this.q("#cv-note");
    if (needle.length === 0) {
      note.textContent = "";
    } else if (this.hits.size === 0) {
      note.textContent = "no matches";
    } else {
      note.textContent = `${this.hits.size} of ${this.graph.nodes.length} labels match`;
    }
    this.rebuild();
    const first = this.graph.nodes.find((n) => this.hits.has(n.id));
    if (first) this.centerOn(first.id);
  }

  centerOn(id: number): void {
    const p = this.pts.get(id);
    const svgEl = this.svg.node();
    if (!p || !svgEl) return;
    const current = zoomTransform(svgEl);
    const next = zoomIdentity
      .translate(WORLD_W / 2 - current.k * p.x, WORLD_H / 2 - current.k * p.y)
      .scale(current.k);
    this.svg.call(this.zoomBehavior.transform, next);
  }

  resetPositions(): void {
    if (!this.graph.hasPositions || this.layoutActive) return;
    this.fitInto(this.graph.nodes.map((n) => ({ id: n.id, x: n.x as number, y: -(n.y as number) })));
    this.place();
  }

  /**
   * Client-side force layout. Ticks run in bounded slices on the normal
   * event loop, never blocking input, and each slice repaints so the graph
   * visibly settles. Cold-starts from the simulation's own deterministic
   * seeding, so repeated runs give identical pictures.
   */
  relayout(): Promise<void> {
    if (this.layoutActive) return this.layoutDone;
    this.layoutActive = true;

    const radiusOf = new Map(this.graph.nodes.map((n) => [n.id, this.radius(n)]));
    const simNodes: SimNode[] = this.graph.nodes.map((n) => ({ id: n.id }));
    const simLinks: SimLink[] = this.graph.edges.map((e) => ({ source: e.source, target: e.target, d: e.d }));
    const maxD = this.maxD > 0 ? this.maxD : 1;
    const sim = forceSimulation(simNodes)
      .force(
        "link",
        forceLink<SimNode, SimLink>(simLinks)
          .id((n) => n.id)
          .distance(70)
          .strength((l) => 0.2 + 0.8 * (l.d / maxD)),
      )
      .force("charge", forceManyBody().strength(-220))
      .force("x", forceX(0).strength(0.06))
      .force("y", forceY(0).strength(0.06))
      .force("collide", forceCollide<SimNode>().radius((n) => (radiusOf.get(n.id) ?? 8) + 4))
      .stop();

    const schedule =
      typeof requestAnimationFrame === "function"
        ? (fn: () => void) => requestAnimationFrame(fn)
        : (fn: () => void) => setTimeout(fn, 16);

    this.layoutDone = new Promise<void>((resolve) => {
      const step = (): void => {
        for (let i = 0; i < 20 && sim.alpha() > sim.alphaMin(); i++) sim.tick();
        this.fitInto(simNodes.map((s) => ({ id: s.id, x: s.x ?? 0, y: s.y ?? 0 })));
        this.place();
        if (sim.alpha() > sim.alphaMin()) {
          schedule(step);
        } else {
          this.layoutActive = false;
          resolve();
        }
      };
      schedule(step);
    });
    return this.layoutDone;
  }

  // ---------------------------------------------------------------- export

  /** Standalone SVG markup of the current scene (styling is attribute based). */
  svgMarkup(): string {
    const svgEl = this.svg.node();
    if (!svgEl) return "";
    const clone = svgEl.cloneNode(true) as SVGSVGElement;
    clone.setAttribute("xmlns", "http://www.w3.org/2000/svg");
    clone.setAttribute("width", String(WORLD_W));
    clone.setAttribute("height", String(WORLD_H));
    return new XMLSerializer().serializeToString(clone);
  }

  downloadSvg(): void {
    const url = "data:image/svg+xml;charset=utf-8," + encodeURIComponent(this.svgMarkup());
    this.triggerDownload(url, "network.svg");
  }

  downloadPng(): void {
    const doc = this.doc;
    const img = new Image();
    img.onload = () => {
      try {
        const canvas = doc.createElement("canvas");
        canvas.width = WORLD_W * 2;
        canvas.height = WORLD_H * 2;
        const ctx = canvas.getContext("2d");
        if (!ctx) throw new Error("no 2d context");
        ctx.drawImage(img, 0, 0, canvas.width, canvas.height);
        this.triggerDownload(canvas.toDataURL("image/png"), "network.png");
      } catch {
        this.q("#cv-note").textContent = "png export is not available here; use svg";
      }
    };
    img.onerror = () => {
      this.q("#cv-note").textContent = "png export is not available here; use svg";
    };
    img.src = "data:image/svg+xml;charset=utf-8," + encodeURIComponent(this.svgMarkup());
  }

  private triggerDownload(url: string, filename: string): void {
    const a = this.doc.createElement("a");
    a.href = url;
    a.download = filename;
    this.doc.body.appendChild(a);
    try {
      a.click();
    } catch {
      // some embedders refuse synthetic downloads; nothing else to do
    }
    a.remove();
  }
}

function round3(v: number): string {
  return v.toFixed(3);
}

function escapeHtml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}
