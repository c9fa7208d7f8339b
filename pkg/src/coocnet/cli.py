"""Command-line pipelines: `coocnet stats` and `coocnet run`.

`run` wires ingest -> filter -> bins -> incidence -> selection -> analysis ->
prune -> layout -> export, driven by flags and/or a single JSON config file
(flags override config).  Outputs are written atomically; on failure all
outputs of the failed run are removed.  Exit codes: 0 ok, 1 runtime error,
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
import tempfile
import time
from datetime import datetime, timezone
from pathlib import Path

from . import graphout, layout
from .coincidence import AnalysisMode, analyze, prune_edges, write_edge_table
from .errors import ConfigError, CoocnetError
from .incidence import (
    DecadeBinning,
    add_bin_events,
    build_incidence,
    select_events,
    select_events_grouped,
)
from .ingest import (
    AttributeCompare,
    AttributePresent,
    FilterStats,
    IngestConfig,
    NonEmptyEvents,
    TripleParseStats,
    filter_scenarios,
    parse_delimited,
    parse_ntriples,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coocnet",
        description="Statistically validated co-occurrence networks from record collections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("--input", help="input file path (overrides config)")
        p.add_argument(
            "--format",
            choices=["delimited", "ntriples"],
            help="input format (default: delimited)",
        )
        p.add_argument("--config", help="JSON config file")

    p_stats = sub.add_parser(
        "stats", help="print the per-event frequency table with cumulative mass"
    )
    add_io(p_stats)

    p_run = sub.add_parser("run", help="run the full pipeline and export the graph")
    add_io(p_run)
    p_run.add_argument("--top-k", type=int, help="keep the k most frequent events")
    p_run.add_argument("--min-count", type=int, help="keep events with frequency >= bound")
    p_run.add_argument(
        "--coverage",
        type=float,
        help="keep the smallest top-frequency prefix covering this fraction of mass",
    )
    p_run.add_argument(
        "--group",
        action="append",
        help="group event label for grouped coverage selection (repeatable; "
        "requires --coverage)",
    )
    p_run.add_argument("--mode", choices=["population", "sample"], help="adjacency rule")
    p_run.add_argument("--alpha", type=float, help="sample-mode significance level")
    p_run.add_argument("--min-d", type=float, help="prune edges with d below this")
    p_run.add_argument("--layout", choices=["fr", "kk", "mds"], help="layout algorithm")
    p_run.add_argument("--seed", type=int, help="layout PRNG seed (default 0)")
    p_run.add_argument("--out-json", help="write graph JSON here")
    p_run.add_argument("--out-graphml", help="write GraphML here")
    p_run.add_argument("--out-html", help="write the self-contained HTML explorer here")
    p_run.add_argument("--out-edges", help="write the full edge-statistics table here")
    p_run.add_argument(
        "--deterministic",
        action="store_true",
        help="omit the creation timestamp so outputs are byte-stable",
    )
    p_run.add_argument("--threads", type=int, help="worker cap (stages are vectorized)")
    return parser


def _check_keys(section: dict, allowed: set[str], where: str):
    extra = set(section) - allowed
    if extra:
        raise ConfigError(f"unknown key(s) in {where}: {', '.join(sorted(extra))}")


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file is not valid JSON: {exc}") from None
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    _check_keys(
        cfg,
        {"input", "filters", "binning", "selection", "analysis", "layout", "outputs",
         "deterministic", "threads"},
        "config",
    )
    return cfg


def _resolve_input(args, cfg) -> tuple[str, str, IngestConfig]:
    section = dict(cfg.get("input", {}))
    _check_keys(
        section,
        {"path", "format", "delimiter", "multi_value_separator", "event_columns",
         "attribute_columns", "predicate_map", "iri_label_suffix", "grouping"},
        "config.input",
    )
    path = args.input or section.get("path")
    if not path:
        raise ConfigError("no input: pass --input or set input.path in the config")
    if not os.path.exists(path):
        raise ConfigError(f"input file not found: {path}")
    fmt = args.format or section.get("format") or "delimited"
    if fmt not in ("delimited", "ntriples"):
        raise ConfigError(f"unknown input format {fmt!r}")
    ingest_cfg = IngestConfig(
        field_delimiter=section.get("delimiter", ";"),
        multi_value_separator=section.get("multi_value_separator", "|"),
        event_columns=tuple(section.get("event_columns", ())),
        attribute_columns=tuple(section.get("attribute_columns", ())),
        predicate_map=dict(section.get("predicate_map", {})),
        iri_label_suffix=bool(section.get("iri_label_suffix", False)),
        grouping=section.get("grouping", "buffered"),
    )
    return path, fmt, ingest_cfg


def _parse_records(path, fmt, ingest_cfg, triple_stats=None):
    if fmt == "delimited":
        return parse_delimited(path, ingest_cfg)
    return parse_ntriples(path, ingest_cfg, stats=triple_stats)


def _build_filters(cfg) -> list:
    predicates = []
    for idx, spec in enumerate(cfg.get("filters", [])):
        where = f"config.filters[{idx}]"
        if not isinstance(spec, dict) or "type" not in spec:
            raise ConfigError(f"{where}: each filter needs a 'type'")
        kind = spec["type"]
        if kind == "nonempty-events":
            _check_keys(spec, {"type"}, where)
            predicates.append(NonEmptyEvents())
        elif kind == "present":
            _check_keys(spec, {"type", "attribute"}, where)
            if "attribute" not in spec:
                raise ConfigError(f"{where}: 'present' filter needs 'attribute'")
            predicates.append(AttributePresent(spec["attribute"]))
        elif kind == "compare":
            _check_keys(spec, {"type", "attribute", "op", "value"}, where)
            for need in ("attribute", "op", "value"):
                if need not in spec:
                    raise ConfigError(f"{where}: 'compare' filter needs {need!r}")
            predicates.append(AttributeCompare(spec["attribute"], spec["op"], spec["value"]))
        else:
            raise ConfigError(f"{where}: unknown filter type {kind!r}")
    return predicates


def _build_binning(cfg) -> DecadeBinning | None:
    section = cfg.get("binning")
    if section is None:
        return None
    _check_keys(section, {"attribute", "kind"}, "config.binning")
    kind = section.get("kind", "decade")
    if kind != "decade":
        raise ConfigError(f"config.binning: unknown kind {kind!r}")
    return DecadeBinning(attribute=section.get("attribute", "year"))


def _resolve_selection(args, cfg) -> dict | None:
    flags = {
        "top_k": args.top_k,
        "min_count": args.min_count,
        "coverage": args.coverage,
        "group": args.group,
    }
    if any(v is not None for v in flags.values()):
        if flags["group"] is not None:
            if flags["coverage"] is None:
                raise ConfigError("--group requires --coverage")
            if flags["top_k"] is not None or flags["min_count"] is not None:
                raise ConfigError("--group cannot be combined with --top-k or --min-count")
            return {"mode": "grouped", "groups": flags["group"], "fraction": flags["coverage"]}
        given = [k for k in ("top_k", "min_count", "coverage") if flags[k] is not None]
        if len(given) > 1:
            raise ConfigError(f"selection flags are mutually exclusive, got {', '.join(given)}")
        mode = given[0]
        if mode == "coverage":
            return {"mode": "coverage", "fraction": flags["coverage"]}
        return {"mode": mode, "k": flags[mode]}

    section = cfg.get("selection")
    if section is None:
        return None
    _check_keys(section, {"mode", "k", "fraction", "groups"}, "config.selection")
    if "mode" not in section:
        raise ConfigError("config.selection needs a 'mode'")
    return dict(section)


def _apply_selection(inc, selection):
    mode = selection["mode"]
    if mode == "top_k":
        return select_events(inc, top_k=int(selection["k"])), f"top_k k={selection['k']}"
    if mode == "min_count":
        return (
            select_events(inc, min_count=int(selection["k"])),
            f"min_count k={selection['k']}",
        )
    if mode == "coverage":
        frac = float(selection["fraction"])
        return select_events(inc, coverage=frac), f"coverage fraction={frac}"
    if mode == "grouped":
        groups = list(selection.get("groups", []))
        frac = float(selection["fraction"])
        return (
            select_events_grouped(inc, groups, frac),
            f"grouped fraction={frac} groups={','.join(groups)}",
        )
    raise ConfigError(f"unknown selection mode {mode!r}")


def _resolve_analysis(args, cfg) -> tuple[AnalysisMode, float]:
    section = dict(cfg.get("analysis", {}))
    _check_keys(section, {"mode", "alpha", "min_d"}, "config.analysis")
    kind = args.mode or section.get("mode", "population")
    alpha = args.alpha if args.alpha is not None else section.get("alpha", 0.05)
    min_d = args.min_d if args.min_d is not None else section.get("min_d", 0.0)
    mode = AnalysisMode(kind=kind, alpha=float(alpha))
    if float(min_d) < 0:
        raise ConfigError(f"min_d must be >= 0, got {min_d}")
    return mode, float(min_d)


def _resolve_layout(args, cfg) -> tuple[str, int, dict]:
    section = dict(cfg.get("layout", {}))
    _check_keys(section, {"algorithm", "seed", "iterations", "max_iters", "tol"}, "config.layout")
    algorithm = args.layout or section.get("algorithm", "fr")
    if algorithm not in ("fr", "kk", "mds"):
        raise ConfigError(f"unknown layout algorithm {algorithm!r}")
    seed = args.seed if args.seed is not None else section.get("seed", 0)
    kwargs = {}
    if algorithm == "fr" and "iterations" in section:
        kwargs["iterations"] = int(section["iterations"])
    if algorithm == "kk":
        if "max_iters" in section:
            kwargs["max_iters"] = int(section["max_iters"])
        if "tol" in section:
            kwargs["tol"] = float(section["tol"])
    return algorithm, int(seed), kwargs


def _resolve_outputs(args, cfg) -> dict[str, str]:
    section = dict(cfg.get("outputs", {}))
    _check_keys(section, {"json", "graphml", "html", "edges"}, "config.outputs")
    outputs = {
        "json": args.out_json or section.get("json"),
        "graphml": args.out_graphml or section.get("graphml"),
        "html": args.out_html or section.get("html"),
        "edges": args.out_edges or section.get("edges"),
    }
    outputs = {k: v for k, v in outputs.items() if v}
    if not outputs:
        raise ConfigError(
            "no outputs requested: set one of --out-json/--out-graphml/--out-html/"
            "--out-edges or config.outputs"
        )
    for kind, path in outputs.items():
        parent = Path(path).resolve().parent
        if not parent.is_dir():
            raise ConfigError(f"output directory for {kind} does not exist: {parent}")
    return outputs


def _atomic_write(path: str, data: bytes, written: list):
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=str(target.parent), prefix=".coocnet-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, target)
        written.append(target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_stats(args) -> int:
    cfg = _load_config(args.config)
    path, fmt, ingest_cfg = _resolve_input(args, cfg)
    if fmt == "delimited":
        ingest_cfg.validate_delimited()
    else:
        ingest_cfg.validate_triples()
    counts: dict[str, int] = {}
    for rec in _parse_records(path, fmt, ingest_cfg):
        for label in rec.events:
            counts[label] = counts.get(label, 0) + 1
    order = sorted(counts, key=lambda lbl: (-counts[lbl], lbl))
    total = sum(counts.values())
    print("label\tfrequency\tcumulative_fraction")
    acc = 0
    for label in order:  # total > 0 whenever there is anything to print
        acc += counts[label]
        print(f"{label}\t{counts[label]}\t{acc / total:.6f}")
    return 0


def cmd_run(args) -> int:
    cfg = _load_config(args.config)
    path, fmt, ingest_cfg = _resolve_input(args, cfg)
    predicates = _build_filters(cfg)
    binning = _build_binning(cfg)
    selection = _resolve_selection(args, cfg)
    mode, min_d = _resolve_analysis(args, cfg)
    algorithm, seed, layout_kwargs = _resolve_layout(args, cfg)
    outputs = _resolve_outputs(args, cfg)
    deterministic = args.deterministic or bool(cfg.get("deterministic", False))
    threads = args.threads if args.threads is not None else cfg.get("threads", 1)
    if int(threads) < 1:
        raise ConfigError(f"threads must be >= 1, got {threads}")

    report: list[str] = []
    written: list[Path] = []
    stage = "setup"
    try:
        # Ingest, filter, bin, and build run as one fused streaming pass.
        stage = "incidence"
        t0 = time.perf_counter()
        triple_stats = TripleParseStats() if fmt == "ntriples" else None
        records = _parse_records(path, fmt, ingest_cfg, triple_stats)
        filter_stats = FilterStats()
        records = filter_scenarios(records, predicates, filter_stats)
        if binning is not None:
            records = add_bin_events(records, binning)
        inc = build_incidence(records, marker_labels=binning.labels if binning else ())
        dt = time.perf_counter() - t0
        report.append(f"ingest: {filter_stats.input_count} scenarios read from {path}")
        if triple_stats is not None:
            report.append(
                f"ingest: {triple_stats.triples} triples on {triple_stats.lines} lines, "
                f"{triple_stats.skipped_total} skipped (unmapped predicates)"
            )
        drops = ", ".join(
            f"{name}: {count}" for name, count in filter_stats.dropped.items() if count
        )
        if filter_stats.unparseable:
            drops = f"{drops + ', ' if drops else ''}unparseable: {filter_stats.unparseable}"
        report.append(
            f"filter: {filter_stats.input_count} -> {filter_stats.passed} scenarios"
            + (f" (dropped {drops})" if drops else "")
        )
        if binning is not None:
            report.append(
                f"bins: {len(binning.labels)} {binning.attribute} bins added, "
                f"{binning.skipped} scenarios without a parseable value"
            )
        report.append(
            f"incidence: N={inc.n_scenarios}, M={inc.n_events} "
            f"(streamed with ingest) [{dt:.3f}s]"
        )

        stage = "selection"
        t0 = time.perf_counter()
        if selection is not None:
            before = inc.n_events
            inc, desc = _apply_selection(inc, selection)
            report.append(
                f"selection: {before} -> {inc.n_events} events ({desc}) "
                f"[{time.perf_counter() - t0:.3f}s]"
            )
        else:
            report.append(f"selection: {inc.n_events} -> {inc.n_events} events (none)")

        stage = "analysis"
        t0 = time.perf_counter()
        table = analyze(inc, mode)
        adjacent = int(table.adjacent.sum())
        report.append(
            f"analysis: {len(table)} co-occurring pairs, {adjacent} adjacent "
            f"({mode.kind}{f', alpha={mode.alpha}' if mode.kind == 'sample' else ''}) "
            f"[{time.perf_counter() - t0:.3f}s]"
        )
        if table.saturated:
            report.append(
                "warning: saturated events excluded from edges: "
                + ", ".join(table.saturated)
            )

        stage = "prune"
        t0 = time.perf_counter()
        pruned = prune_edges(table, min_d)
        report.append(
            f"prune: {adjacent} -> {len(pruned)} edges (min_d={min_d}) "
            f"[{time.perf_counter() - t0:.3f}s]"
        )

        positions = None
        needs_graph = any(k in outputs for k in ("json", "graphml", "html"))
        if needs_graph:
            stage = "layout"
            t0 = time.perf_counter()
            spec = layout.LayoutInput(
                n_nodes=inc.n_events,
                edge_i=pruned.i,
                edge_j=pruned.j,
                weights=pruned.d,
                seed=seed,
            )
            positions = layout.layout_by_name(algorithm, spec, **layout_kwargs)
            report.append(
                f"layout: {algorithm} seed={seed} [{time.perf_counter() - t0:.3f}s]"
            )

        stage = "export"
        t0 = time.perf_counter()
        payloads: dict[str, bytes] = {}
        if needs_graph:
            created = None
            if not deterministic:
                created = datetime.now(timezone.utc).isoformat(timespec="seconds")
            graph = graphout.assemble(
                inc.catalog, pruned, positions, min_d=min_d, created=created
            )
            if "json" in outputs:
                payloads["json"] = graphout.to_json(graph)
            if "graphml" in outputs:
                payloads["graphml"] = graphout.to_graphml(graph)
            if "html" in outputs:
                payloads["html"] = graphout.render_html(graph).encode("utf-8")
        if "edges" in outputs:
            buf = io.StringIO()
            write_edge_table(table, buf)
            payloads["edges"] = buf.getvalue().encode("utf-8")
        for kind, path_out in outputs.items():
            _atomic_write(path_out, payloads[kind], written)
            report.append(f"write: {path_out} ({len(payloads[kind])} bytes)")
        report.append(f"export: [{time.perf_counter() - t0:.3f}s]")
    except ConfigError:
        for leftover in written:
            leftover.unlink(missing_ok=True)
        raise
    except (CoocnetError, OSError) as exc:
        for leftover in written:
            leftover.unlink(missing_ok=True)
        print(f"error in {stage}: {exc}", file=sys.stderr)
        return 1

    for line in report:
        print(line)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "stats":
            return cmd_stats(args)
        return cmd_run(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CoocnetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
