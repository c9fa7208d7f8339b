"""Statistically validated co-occurrence networks from scenario/event records.

Pipeline: parse records (delimited text or an N-Triples subset), filter
scenarios, build the binary incidence matrix, reduce events, compute joint
counts and adjusted residuals, keep statistically adjacent edges, lay the
graph out in 2-D, and export it as graph JSON, GraphML, or a self-contained
interactive HTML page.
"""

from .coincidence import (
    AnalysisMode,
    CoincidenceMatrix,
    EdgeStatistics,
    EdgeTable,
    analyze,
    coincide_in_probability,
    coincidence,
    expected_count,
    haberman_residual,
    pearson_residual,
    prune_edges,
    upper_tail_p,
    write_edge_table,
)
from .errors import (
    ConfigError,
    CoocnetError,
    IntegrityError,
    RecordError,
    SaturatedEventError,
)
from .graphout import (
    CoincidenceGraph,
    GraphEdge,
    GraphNode,
    assemble,
    from_json,
    render_html,
    to_graphml,
    to_json,
)
from .incidence import (
    DecadeBinning,
    EventCatalog,
    IncidenceMatrix,
    add_bin_events,
    build_incidence,
    read_incidence,
    select_events,
    select_events_grouped,
    write_incidence,
)
from .ingest import (
    AttributeCompare,
    AttributePresent,
    FilterStats,
    IngestConfig,
    NonEmptyEvents,
    ScenarioRecord,
    TripleParseStats,
    filter_scenarios,
    parse_delimited,
    parse_ntriples,
    write_delimited,
)
from .layout import (
    LayoutInput,
    classical_mds_coordinates,
    graph_distances,
    layout_by_name,
    layout_fruchterman_reingold,
    layout_kamada_kawai,
    layout_mds,
    stress,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisMode",
    "AttributeCompare",
    "AttributePresent",
    "CoincidenceGraph",
    "CoincidenceMatrix",
    "ConfigError",
    "CoocnetError",
    "DecadeBinning",
    "EdgeStatistics",
    "EdgeTable",
    "EventCatalog",
    "FilterStats",
    "GraphEdge",
    "GraphNode",
    "IncidenceMatrix",
    "IngestConfig",
    "IntegrityError",
    "LayoutInput",
    "NonEmptyEvents",
    "RecordError",
    "SaturatedEventError",
    "ScenarioRecord",
    "TripleParseStats",
    "add_bin_events",
    "analyze",
    "assemble",
    "build_incidence",
    "classical_mds_coordinates",
    "coincide_in_probability",
    "coincidence",
    "expected_count",
    "filter_scenarios",
    "from_json",
    "graph_distances",
    "haberman_residual",
    "layout_by_name",
    "layout_fruchterman_reingold",
    "layout_kamada_kawai",
    "layout_mds",
    "parse_delimited",
    "parse_ntriples",
    "pearson_residual",
    "prune_edges",
    "read_incidence",
    "render_html",
    "select_events",
    "select_events_grouped",
    "stress",
    "to_graphml",
    "to_json",
    "upper_tail_p",
    "write_delimited",
    "write_edge_table",
    "write_incidence",
]
