"""Final graph assembly and serialization: graph JSON, GraphML, offline HTML.

The graph JSON schema is the toolkit's interchange contract: top-level keys
``nodes``, ``edges``, ``meta``; node keys id, label, frequency, marker, attrs,
x, y (x/y only when positions were computed); edge keys source, target, c,
expected, e, d, p (p only in sample mode).  Key order is fixed and numbers
round-trip at full double precision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Mapping
from xml.sax.saxutils import escape, quoteattr

import numpy as np

from .coincidence import EdgeTable
from .errors import ConfigError, IntegrityError
from .incidence import EventCatalog


@dataclass(frozen=True)
class GraphNode:
    id: int
    label: str
    frequency: int
    marker: bool
    attrs: dict
    x: float | None = None
    y: float | None = None


@dataclass(frozen=True)
class GraphEdge:
    source: int
    target: int
    c: int
    expected: float
    e: float
    d: float
    p: float | None = None


@dataclass(frozen=True)
class CoincidenceGraph:
    """Nodes with frequencies, statistically validated edges, optional positions.

    Every edge has d > 0 and references existing nodes; isolated nodes are
    kept because their frequency still carries information.
    """

    nodes: tuple[GraphNode, ...]
    edges: tuple[GraphEdge, ...]
    meta: dict = field(default_factory=dict)


def assemble(
    catalog: EventCatalog,
    table: EdgeTable,
    positions: np.ndarray | None = None,
    min_d: float = 0.0,
    created: str | None = None,
    node_attrs: Mapping[str, Mapping[str, str]] | None = None,
) -> CoincidenceGraph:
    """Build the graph from a pruned edge table.

    Nodes follow catalog order (frequency-descending); edges are sorted by
    descending d, then by endpoint ids.  The table must already be pruned:
    non-adjacent rows or rows with d <= 0 are an integrity error.
    """
    m = len(catalog)
    if len(table) and (table.i.min() < 0 or max(table.i.max(), table.j.max()) >= m):
        raise IntegrityError("edge references an unknown event id")
    if np.any(table.i == table.j):
        raise IntegrityError("self-loops are not allowed")
    if not bool(np.all(table.adjacent)):
        raise IntegrityError("edge table contains non-adjacent pairs; prune before assembling")
    if len(table) and table.d.min() <= 0:
        raise IntegrityError("every serialized edge must have d > 0")
    if positions is not None:
        positions = np.asarray(positions, dtype=np.float64)
        if positions.shape != (m, 2):
            raise IntegrityError(f"positions must have shape ({m}, 2)")
        if not np.all(np.isfinite(positions)):
            raise IntegrityError("positions must be finite")

    attrs_by_label = dict(node_attrs or {})
    nodes = tuple(
        GraphNode(
            id=i,
            label=catalog.labels[i],
            frequency=int(catalog.frequencies[i]),
            marker=bool(catalog.marker[i]),
            attrs=dict(attrs_by_label.get(catalog.labels[i], {})),
            x=float(positions[i, 0]) if positions is not None else None,
            y=float(positions[i, 1]) if positions is not None else None,
        )
        for i in range(m)
    )

    order = sorted(range(len(table)), key=lambda k: (-table.d[k], table.i[k], table.j[k]))
    edges = tuple(
        GraphEdge(
            source=int(table.i[k]),
            target=int(table.j[k]),
            c=int(table.c[k]),
            expected=float(table.expected[k]),
            e=float(table.e[k]),
            d=float(table.d[k]),
            p=float(table.p[k]) if table.p is not None else None,
        )
        for k in order
    )

    meta = {"N": int(table.n_scenarios), "M": m, "mode": table.mode.kind}
    if table.mode.kind == "sample":
        meta["alpha"] = float(table.mode.alpha)
    meta["min_d"] = float(min_d)
    if created is not None:
        meta["created"] = created
    return CoincidenceGraph(nodes, edges, meta)


def to_json(graph: CoincidenceGraph) -> bytes:
    """Serialize with fixed key order; floats keep full round-trip precision."""
    nodes = []
    for n in graph.nodes:
        obj = {
            "id": n.id,
            "label": n.label,
            "frequency": n.frequency,
            "marker": n.marker,
            "attrs": n.attrs,
        }
        if n.x is not None:
            obj["x"] = n.x
            obj["y"] = n.y
        nodes.append(obj)
    edges = []
    for e in graph.edges:
        obj = {
            "source": e.source,
            "target": e.target,
            "c": e.c,
            "expected": e.expected,
            "e": e.e,
            "d": e.d,
        }
        if e.p is not None:
            obj["p"] = e.p
        edges.append(obj)
    doc = {"nodes": nodes, "edges": edges, "meta": graph.meta}
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _require(obj: dict, key: str, kinds, where: str):
    if key not in obj:
        raise IntegrityError(f"{where}: missing field {key!r}")
    value = obj[key]
    allowed = kinds if isinstance(kinds, tuple) else (kinds,)
    # bool is an int subclass in Python but not in the schema
    if isinstance(value, bool) and bool not in allowed:
        raise IntegrityError(f"{where}: field {key!r} has the wrong type")
    if not isinstance(value, allowed):
        raise IntegrityError(f"{where}: field {key!r} has the wrong type")
    return value


def from_json(data: bytes | str) -> CoincidenceGraph:
    """Parse and validate a graph JSON document."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise IntegrityError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise IntegrityError("top level must be an object")
    for key in ("nodes", "edges", "meta"):
        if key not in doc:
            raise IntegrityError(f"missing top-level key {key!r}")

    nodes = []
    ids = set()
    for idx, obj in enumerate(doc["nodes"]):
        where = f"nodes[{idx}]"
        nid = _require(obj, "id", int, where)
        label = _require(obj, "label", str, where)
        freq = _require(obj, "frequency", int, where)
        marker = _require(obj, "marker", bool, where)
        attrs = _require(obj, "attrs", dict, where)
        if freq < 1:
            raise IntegrityError(f"{where}: frequency must be >= 1")
        if nid in ids:
            raise IntegrityError(f"{where}: duplicate node id {nid}")
        ids.add(nid)
        has_x, has_y = "x" in obj, "y" in obj
        if has_x != has_y:
            raise IntegrityError(f"{where}: x and y must be present together")
        x = float(obj["x"]) if has_x else None
        y = float(obj["y"]) if has_y else None
        nodes.append(GraphNode(nid, label, freq, marker, dict(attrs), x, y))

    edges = []
    for idx, obj in enumerate(doc["edges"]):
        where = f"edges[{idx}]"
        src = _require(obj, "source", int, where)
        tgt = _require(obj, "target", int, where)
        c = _require(obj, "c", int, where)
        expected = float(_require(obj, "expected", (int, float), where))
        e = float(_require(obj, "e", (int, float), where))
        d = float(_require(obj, "d", (int, float), where))
        p = float(obj["p"]) if "p" in obj else None
        if src not in ids or tgt not in ids:
            raise IntegrityError(f"{where}: endpoint references an unknown node")
        if src == tgt:
            raise IntegrityError(f"{where}: self-loop")
        if not d > 0:
            raise IntegrityError(f"{where}: d must be > 0")
        edges.append(GraphEdge(src, tgt, c, expected, e, d, p))

    if not isinstance(doc["meta"], dict):
        raise IntegrityError("meta must be an object")
    return CoincidenceGraph(tuple(nodes), tuple(edges), dict(doc["meta"]))


def to_graphml(graph: CoincidenceGraph) -> bytes:
    """GraphML with undirected edges and declared keys for all fields."""
    has_positions = any(n.x is not None for n in graph.nodes)
    has_p = any(e.p is not None for e in graph.edges)
    attr_names = sorted({name for n in graph.nodes for name in n.attrs})

    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    out.append('<graphml xmlns="http://graphml.graphdrawing.org/xmlns">')
    out.append('  <key id="label" for="node" attr.name="label" attr.type="string"/>')
    out.append('  <key id="frequency" for="node" attr.name="frequency" attr.type="long"/>')
    out.append('  <key id="marker" for="node" attr.name="marker" attr.type="boolean"/>')
    if has_positions:
        out.append('  <key id="x" for="node" attr.name="x" attr.type="double"/>')
        out.append('  <key id="y" for="node" attr.name="y" attr.type="double"/>')
    for k, name in enumerate(attr_names):
        out.append(
            f'  <key id="a{k}" for="node" attr.name={quoteattr(name)} attr.type="string"/>'
        )
    out.append('  <key id="c" for="edge" attr.name="c" attr.type="long"/>')
    out.append('  <key id="expected" for="edge" attr.name="expected" attr.type="double"/>')
    out.append('  <key id="e" for="edge" attr.name="e" attr.type="double"/>')
    out.append('  <key id="d" for="edge" attr.name="d" attr.type="double"/>')
    if has_p:
        out.append('  <key id="p" for="edge" attr.name="p" attr.type="double"/>')
    out.append('  <graph id="G" edgedefault="undirected">')
    attr_key = {name: f"a{k}" for k, name in enumerate(attr_names)}
    for n in graph.nodes:
        out.append(f'    <node id="n{n.id}">')
        out.append(f'      <data key="label">{escape(n.label)}</data>')
        out.append(f'      <data key="frequency">{n.frequency}</data>')
        out.append(f'      <data key="marker">{"true" if n.marker else "false"}</data>')
        if n.x is not None:
            out.append(f'      <data key="x">{n.x!r}</data>')
            out.append(f'      <data key="y">{n.y!r}</data>')
        for name in sorted(n.attrs):
            out.append(
                f'      <data key="{attr_key[name]}">{escape(str(n.attrs[name]))}</data>'
            )
        out.append("    </node>")
    for k, e in enumerate(graph.edges):
        out.append(f'    <edge id="e{k}" source="n{e.source}" target="n{e.target}">')
        out.append(f'      <data key="c">{e.c}</data>')
        out.append(f'      <data key="expected">{e.expected!r}</data>')
        out.append(f'      <data key="e">{e.e!r}</data>')
        out.append(f'      <data key="d">{e.d!r}</data>')
        if e.p is not None:
            out.append(f'      <data key="p">{e.p!r}</data>')
        out.append("    </edge>")
    out.append("  </graph>")
    out.append("</graphml>")
    return ("\n".join(out) + "\n").encode("utf-8")


_HTML_TEMPLATE = """<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<meta name="viewport" content="width=device-width, initial-scale=1">
<title>Coincidence network</title>
<style>
  html, body {{ margin: 0; height: 100%; background: #ffffff; }}
  #app {{ width: 100%; height: 100%; }}
</style>
</head>
<body>
<div id="app"></div>
<script type="application/json" id="graph-data">{payload}</script>
<script>
{script}
</script>
</body>
</html>
"""


def render_html(graph: CoincidenceGraph, asset_path=None) -> str:
    """One self-contained page: embedded graph JSON plus the inlined viewer.

    Opening the file in a browser needs no server and makes no network
    requests.  The viewer bundle is vendored at coocnet/assets/viewer.js; pass
    asset_path to use a different build.
    """
    if asset_path is None:
        candidate = resources.files("coocnet").joinpath("assets/viewer.js")
        if not candidate.is_file():
            raise ConfigError(
                "viewer asset bundle not found: build it with "
                "`cd frontend && npm install && npm run build` (which copies "
                "dist/viewer.js to src/coocnet/assets/viewer.js), or pass asset_path"
            )
        script = candidate.read_text(encoding="utf-8")
    else:
        try:
            with open(asset_path, "r", encoding="utf-8") as fh:
                script = fh.read()
        except FileNotFoundError:
            raise ConfigError(
                f"viewer asset bundle not found at {asset_path}: build it with "
                "`cd frontend && npm install && npm run build`"
            ) from None
    if "</script" in script.lower():
        raise ConfigError("viewer bundle contains '</script' and cannot be inlined")
    # "</" would end the enclosing script element early; "<\/" is identical JSON
    payload = to_json(graph).decode("utf-8").rstrip("\n").replace("</", "<\\/")
    return _HTML_TEMPLATE.format(payload=payload, script=script)
