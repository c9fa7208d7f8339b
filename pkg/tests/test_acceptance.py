"""Acceptance gate: one test per shipped guarantee, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -s -q` to see every
`acceptance PASS/FAIL: <guarantee>` line; under default capture the lines
surface only for failing tests.
"""

import time
from pathlib import Path

import numpy as np
import pytest

from coocnet.cli import main
from coocnet.coincidence import (
    AnalysisMode,
    analyze,
    coincide_in_probability,
    coincidence,
    haberman_residual,
    pearson_residual,
    prune_edges,
)
from coocnet.incidence import (
    EventCatalog,
    IncidenceMatrix,
    build_incidence,
    select_events,
    select_events_grouped,
)
from coocnet.ingest import IngestConfig, ScenarioRecord, parse_delimited
from coocnet.layout import (
    LayoutInput,
    classical_mds_coordinates,
    graph_distances,
    layout_fruchterman_reingold,
    layout_kamada_kawai,
    stress,
)

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = Path(__file__).resolve().parent / "golden"


def _report(name: str, ok: bool, detail: str = ""):
    verdict = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"acceptance {verdict}: {name}{suffix}", flush=True)
    assert ok, f"acceptance failed: {name}{suffix}"


def incidence_from_dense(x: np.ndarray) -> IncidenceMatrix:
    """Wrap a 0/1 matrix whose columns all occur at least once."""
    x = np.asarray(x, dtype=np.int64)
    n, m = x.shape
    freq = x.sum(axis=0)
    assert (freq > 0).all(), "fixture bug: empty event column"
    order = np.argsort(-freq, kind="stable")
    x = x[:, order]
    freq = freq[order]
    # labels ascend with the final ids, so frequency ties are in label order
    catalog = EventCatalog(
        tuple(f"E{i:04d}" for i in range(m)),
        freq.astype(np.int64),
        np.zeros(m, dtype=bool),
    )
    counts = x.sum(axis=1)
    indptr = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
    indices = np.nonzero(x)[1].astype(np.int64)
    return IncidenceMatrix(catalog, indptr, indices, tuple(f"s{i}" for i in range(n)))


def test_pair_counts_match_dense_oracle():
    rng = np.random.default_rng(11_22_33)
    t0 = time.perf_counter()
    exact = True
    for _ in range(1000):
        n = int(rng.integers(1, 201))
        m = int(rng.integers(1, 31))
        density = rng.uniform(0.05, 0.6)
        x = (rng.random((n, m)) < density).astype(np.int64)
        x = x[:, x.sum(axis=0) > 0]
        if x.shape[1] == 0:
            x = np.ones((n, 1), dtype=np.int64)
        inc = incidence_from_dense(x)
        got = coincidence(inc).to_dense()
        want = x[:, np.argsort(-x.sum(axis=0), kind="stable")]
        want = want.T @ want
        if not np.array_equal(got, want):
            exact = False
            break
    elapsed = time.perf_counter() - t0
    _report(
        "pair counts equal the dense-product oracle on 1000 random matrices",
        exact and elapsed < 10.0,
        f"{elapsed:.2f}s",
    )


def test_residual_hand_values():
    checks = [
        abs(pearson_residual(2, 2, 2, 4) - 1.0),
        abs(haberman_residual(pearson_residual(2, 2, 2, 4), 2, 2, 4) - 2.0),
        abs(pearson_residual(1, 2, 2, 4) - 0.0),
        abs(haberman_residual(pearson_residual(1, 2, 2, 4), 2, 2, 4) - 0.0),
        abs(pearson_residual(0, 2, 2, 4) - (-1.0)),
    ]
    worst = max(checks)
    _report(
        "residuals match the 4-scenario hand fixtures to 1e-12",
        worst <= 1e-12,
        f"worst deviation {worst:.2e}",
    )


def test_probability_rule_equals_positive_residual():
    rng = np.random.default_rng(3141592)
    total = 1_200_000
    n = rng.integers(2, 10_001, size=total)
    cii = rng.integers(1, n)  # strictly below n on both margins
    cjj = rng.integers(1, n)
    lo = np.maximum(0, cii + cjj - n)
    hi = np.minimum(cii, cjj)
    cij = rng.integers(lo, hi + 1)
    by_rule = coincide_in_probability(cij, cii, cjj, n)
    by_residual = pearson_residual(cij, cii, cjj, n) > 0
    mismatches = int((by_rule != by_residual).sum())
    _report(
        "integer probability rule equals the positive-residual rule",
        mismatches == 0,
        f"{total} random pairs, {mismatches} counterexamples",
    )


def test_null_calibration_and_alpha_half():
    rng = np.random.default_rng(908172)
    replicates = 50
    n, m = 10_000, 10
    tail_hits = 0
    total_pairs = 0
    alpha_half_matches = True
    for _ in range(replicates):
        p = rng.uniform(0.2, 0.8, size=m)
        x = (rng.random((n, m)) < p[None, :]).astype(np.int64)
        inc = incidence_from_dense(x)
        table = analyze(inc, AnalysisMode())
        tail_hits += int((table.d > 1.645).sum())
        total_pairs += m * (m - 1) // 2
        sample = analyze(inc, AnalysisMode(kind="sample", alpha=0.5))
        if not np.array_equal(table.adjacent, sample.adjacent):
            alpha_half_matches = False
    fraction = tail_hits / total_pairs
    _report(
        "null calibration: tail above 1.645 is 5% +/- 2%",
        0.03 <= fraction <= 0.07,
        f"{fraction:.4f} over {total_pairs} independent pairs",
    )
    _report(
        "sample rule at alpha=0.5 reproduces the population rule exactly",
        alpha_half_matches,
        f"{replicates} replicates",
    )


def test_coverage_on_zipf_catalog():
    freqs = [1000 // k for k in range(1, 101)]
    records = []
    sid = 0
    for k, f in enumerate(freqs):
        for _ in range(f):
            records.append(ScenarioRecord(f"s{sid}", frozenset({f"T{k:03d}"})))
            sid += 1
    inc = build_incidence(records)
    total = int(inc.catalog.frequencies.sum())
    kept = select_events(inc, coverage=0.5)
    k = kept.n_events
    is_prefix = kept.catalog.labels == inc.catalog.labels[:k]
    mass = int(kept.catalog.frequencies.sum())
    minimal = int(inc.catalog.frequencies[: k - 1].sum()) < 0.5 * total
    _report(
        "half coverage keeps the minimal top-frequency prefix with >=50% mass",
        is_prefix and mass >= 0.5 * total and minimal,
        f"{k} of 100 events, {mass}/{total} occurrences",
    )


def test_grouped_union_counts_shared_events_once():
    # 157 topics over 4 groups; 23 topics belong to two groups, so the
    # per-group picks sum to 180 while the union holds 157
    primary = {0: range(0, 45), 1: range(45, 90), 2: range(90, 135), 3: range(135, 157)}
    shared = {3: range(0, 23)}  # also shown to group 3
    records = []
    sid = 0
    oracle_picks = {g: set() for g in range(4)}
    for g in range(4):
        topics = list(primary[g]) + list(shared.get(g, []))
        for t in topics:
            records.append(
                ScenarioRecord(f"s{sid}", frozenset({f"G{g}", f"T{t:03d}"}))
            )
            oracle_picks[g].add(f"T{t:03d}")
            sid += 1
    inc = build_incidence(records)
    kept = select_events_grouped(inc, ["G0", "G1", "G2", "G3"], 1.0)
    union = set().union(*oracle_picks.values())
    expected = union | {"G0", "G1", "G2", "G3"}
    overlap_proof = sum(len(s) for s in oracle_picks.values()) > len(union)
    _report(
        "grouped selection union counts shared events once",
        set(kept.catalog.labels) == expected
        and kept.n_events == 161
        and len(union) == 157
        and overlap_proof,
        f"picks sum {sum(len(s) for s in oracle_picks.values())}, "
        f"union {len(union)}, selected {kept.n_events}",
    )


def test_layout_guarantees():
    r2 = np.sqrt(2.0)
    square = np.array(
        [[0, 1, r2, 1], [1, 0, 1, r2], [r2, 1, 0, 1], [1, r2, 1, 0]]
    )
    pos = classical_mds_coordinates(square)
    got = np.linalg.norm(pos[:, None, :] - pos[None, :, :], axis=-1)
    mds_err = float(np.abs(got - square).max())

    path3 = LayoutInput(3, np.array([0, 1]), np.array([1, 2]))
    kk_stress = stress(layout_kamada_kawai(path3), graph_distances(path3))

    fr_stable = np.array_equal(
        layout_fruchterman_reingold(path3), layout_fruchterman_reingold(path3)
    )
    _report(
        "square recovered to 1e-6, 3-path stress below 1e-3, force layout bit-stable",
        mds_err <= 1e-6 and kk_stress < 1e-3 and fr_stable,
        f"square err {mds_err:.1e}, path stress {kk_stress:.1e}",
    )


def test_end_to_end_determinism_and_goldens(tmp_path):
    config = str(ROOT / "data" / "decades.config.json")
    outputs = {}
    for tag in ("one", "two"):
        out_json = tmp_path / f"{tag}.json"
        out_graphml = tmp_path / f"{tag}.graphml"
        code = main(
            [
                "run",
                "--config",
                config,
                "--input",
                str(ROOT / "data" / "decades.csv"),
                "--deterministic",
                "--out-json",
                str(out_json),
                "--out-graphml",
                str(out_graphml),
            ]
        )
        assert code == 0
        outputs[tag] = (out_json.read_bytes(), out_graphml.read_bytes())
    identical = outputs["one"] == outputs["two"]
    matches_golden = outputs["one"] == (
        (GOLDEN / "decades.json").read_bytes(),
        (GOLDEN / "decades.graphml").read_bytes(),
    )
    _report(
        "deterministic runs are byte-identical and match the committed goldens",
        identical and matches_golden,
        f"repeat={identical}, golden={matches_golden}",
    )


def _peak_rss_bytes() -> int:
    status = Path("/proc/self/status")
    if status.exists():
        for line in status.read_text().splitlines():
            if line.startswith("VmHWM:"):
                return int(line.split()[1]) * 1024
    import psutil

    return psutil.Process().memory_info().rss


def test_performance_100k_by_1k(tmp_path):
    rng = np.random.default_rng(660001)
    n, m, per = 100_000, 1000, 5
    # mild popularity skew so joint counts spread out
    weights = 1.0 / np.arange(1, m + 1) ** 0.3
    weights /= weights.sum()
    picks = rng.choice(m, size=(n, per), p=weights)
    labels = np.array([f"E{i:03d}" for i in range(m)])
    corpus = tmp_path / "corpus.csv"
    with open(corpus, "w", encoding="utf-8") as fh:
        fh.write("id;events\n")
        for i in range(n):
            fh.write(f"s{i};{'|'.join(labels[picks[i]])}\n")

    cfg = IngestConfig(event_columns=("events",))
    t0 = time.perf_counter()
    inc = build_incidence(parse_delimited(corpus, cfg))
    table = analyze(inc)
    pruned = prune_edges(table)
    elapsed = time.perf_counter() - t0
    peak_gb = _peak_rss_bytes() / 1e9
    ok = elapsed < 30.0 and peak_gb < 2.0 and inc.n_scenarios == n and len(pruned) > 0
    _report(
        "100k x 1k corpus: ingest, analysis, and pruning within 30s and 2GB",
        ok,
        f"{elapsed:.1f}s, peak {peak_gb:.2f}GB, {len(table)} pairs, "
        f"{len(pruned)} edges kept",
    )
