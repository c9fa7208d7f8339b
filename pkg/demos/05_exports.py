"""
Exporting a network to JSON, GraphML, and HTML
==============================================

Runs the decades pipeline and writes every export format next to this
script.  The HTML export needs the vendored viewer bundle; the script skips
it with a note when the bundle has not been built yet.
"""

from pathlib import Path

from coocnet import (
    ConfigError,
    DecadeBinning,
    IngestConfig,
    LayoutInput,
    add_bin_events,
    analyze,
    assemble,
    build_incidence,
    layout_by_name,
    parse_delimited,
    prune_edges,
    render_html,
    select_events,
    to_graphml,
    to_json,
)

root = Path(__file__).resolve().parents[1]
out = Path(__file__).resolve().parent / "out"
out.mkdir(exist_ok=True)

config = IngestConfig(event_columns=("subjects",), attribute_columns=("year",))
records = parse_delimited(root / "data" / "decades.csv", config)
binning = DecadeBinning(attribute="year")
inc = build_incidence(add_bin_events(records, binning), binning.labels)
inc = select_events(inc, top_k=6)
pruned = prune_edges(analyze(inc))

positions = layout_by_name(
    "kk",
    LayoutInput(
        n_nodes=inc.n_events, edge_i=pruned.i, edge_j=pruned.j, weights=pruned.d
    ),
)
graph = assemble(inc.catalog, pruned, positions)

(out / "decades.json").write_bytes(to_json(graph))
print("wrote", out / "decades.json")

(out / "decades.graphml").write_bytes(to_graphml(graph))
print("wrote", out / "decades.graphml")

try:
    (out / "decades.html").write_text(render_html(graph), encoding="utf-8")
    print("wrote", out / "decades.html")
except ConfigError as exc:
    print("html skipped:", exc)
