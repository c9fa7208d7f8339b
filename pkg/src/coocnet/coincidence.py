"""Coincidence counts, residual statistics, and the adjacency rule.

For events i, j over N scenarios with frequencies c_ii, c_jj and joint count
c_ij, the expected count under independence is c_ii*c_jj/N.  The Pearson
residual standardizes the deviation; the adjusted (Haberman) residual rescales
it to unit variance, so it is approximately standard normal under
independence.  Two events are adjacent when the adjusted residual is positive
(population data) or significantly positive (sample data).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterator, Union

import numpy as np
from scipy.special import erfc

from .errors import ConfigError, SaturatedEventError
from .incidence import EventCatalog, IncidenceMatrix

_SQRT2 = float(np.sqrt(2.0))


def _scalarize(value, *inputs):
    if any(isinstance(x, np.ndarray) for x in inputs):
        return value
    return value.item() if hasattr(value, "item") else value


@dataclass(frozen=True, eq=False)
class CoincidenceMatrix:
    """Symmetric M x M joint-count matrix, stored as diagonal + sparse pairs.

    pair_i < pair_j always; pairs with zero joint count are not materialized
    (their residuals are negative, so they can never become edges).
    """

    n_scenarios: int
    diagonal: np.ndarray
    pair_i: np.ndarray
    pair_j: np.ndarray
    pair_c: np.ndarray

    @property
    def n_events(self) -> int:
        return self.diagonal.shape[0]

    def joint(self, i: int, j: int) -> int:
        if i == j:
            return int(self.diagonal[i])
        if i > j:
            i, j = j, i
        key = i * self.n_events + j
        keys = self.pair_i * self.n_events + self.pair_j
        pos = np.searchsorted(keys, key)
        if pos < keys.shape[0] and keys[pos] == key:
            return int(self.pair_c[pos])
        return 0

    def to_dense(self) -> np.ndarray:
        """Dense symmetric array; tests and small matrices only."""
        dense = np.zeros((self.n_events, self.n_events), dtype=np.int64)
        np.fill_diagonal(dense, self.diagonal)
        dense[self.pair_i, self.pair_j] = self.pair_c
        dense[self.pair_j, self.pair_i] = self.pair_c
        return dense


def coincidence(inc: IncidenceMatrix) -> CoincidenceMatrix:
    """Exact joint counts by per-scenario pair enumeration.

    Rows are grouped by length so each group becomes one rectangular gather;
    pairs are encoded as i*M+j keys and tallied with a single unique pass.
    Result is independent of row order and of the grouping.
    """
    m = inc.n_events
    if m > 3_000_000_000:
        raise ConfigError("event id space too large for 64-bit pair encoding")
    lengths = np.diff(inc.indptr)
    key_chunks = [np.empty(0, dtype=np.int64)]
    for length in np.unique(lengths):
        if length < 2:
            continue
        row_ids = np.flatnonzero(lengths == length)
        starts = inc.indptr[row_ids]
        block = inc.indices[starts[:, None] + np.arange(length)]
        a, b = np.triu_indices(length, k=1)
        # rows are sorted ascending, so block[:, a] < block[:, b] elementwise
        key_chunks.append((block[:, a] * m + block[:, b]).ravel())
    keys = np.concatenate(key_chunks)
    uniq, counts = np.unique(keys, return_counts=True)
    return CoincidenceMatrix(
        n_scenarios=inc.n_scenarios,
        diagonal=inc.catalog.frequencies.copy(),
        pair_i=uniq // m,
        pair_j=uniq % m,
        pair_c=counts.astype(np.int64),
    )


def expected_count(c_ii, c_jj, n):
    """Independence expectation c_ii*c_jj/n, in double precision."""
    n_arr = np.asarray(n, dtype=np.float64)
    if np.any(n_arr < 1):
        raise ConfigError("scenario count must be >= 1")
    value = np.asarray(c_ii, np.float64) * np.asarray(c_jj, np.float64) / n_arr
    return _scalarize(value, c_ii, c_jj, n)


def coincide_in_probability(c_ij, c_ii, c_jj, n):
    """True iff the joint count strictly exceeds its independence expectation.

    Evaluated as n*c_ij > c_ii*c_jj in 64-bit integers, so the strict boundary
    is exact.
    """
    n_arr = np.asarray(n, dtype=np.int64)
    if np.any(n_arr < 1):
        raise ConfigError("scenario count must be >= 1")
    value = n_arr * np.asarray(c_ij, np.int64) > np.asarray(c_ii, np.int64) * np.asarray(
        c_jj, np.int64
    )
    return _scalarize(value, c_ij, c_ii, c_jj, n)


def pearson_residual(c_ij, c_ii, c_jj, n):
    """(c_ij - c_ii*c_jj/n) / sqrt(c_ii*c_jj/n)."""
    if np.any(np.asarray(c_ii) < 1) or np.any(np.asarray(c_jj) < 1):
        raise ConfigError("zero expected count: event frequencies must be >= 1")
    exp = np.asarray(expected_count(c_ii, c_jj, n), dtype=np.float64)
    value = (np.asarray(c_ij, np.float64) - exp) / np.sqrt(exp)
    return _scalarize(value, c_ij, c_ii, c_jj, n)


def haberman_residual(e_ij, c_ii, c_jj, n):
    """e_ij / sqrt((1 - c_ii/n)(1 - c_jj/n)); undefined for saturated events."""
    fi = np.asarray(c_ii, np.float64)
    fj = np.asarray(c_jj, np.float64)
    n_arr = np.asarray(n, np.float64)
    if np.any(fi >= n_arr) or np.any(fj >= n_arr):
        raise SaturatedEventError(
            "event occurs in every scenario; adjusted residual is undefined"
        )
    value = np.asarray(e_ij, np.float64) / np.sqrt((1.0 - fi / n_arr) * (1.0 - fj / n_arr))
    return _scalarize(value, e_ij, c_ii, c_jj, n)


def upper_tail_p(d):
    """One-sided upper-tail standard-normal p-value of d."""
    value = 0.5 * erfc(np.asarray(d, np.float64) / _SQRT2)
    return _scalarize(value, d)


@dataclass(frozen=True)
class AnalysisMode:
    """population: adjacency is d > 0.  sample: adjacency is p < alpha.

    alpha = 0.5 makes the sample rule coincide with the population rule
    (the threshold z becomes 0).
    """

    kind: str = "population"
    alpha: float = 0.05

    def __post_init__(self):
        if self.kind not in ("population", "sample"):
            raise ConfigError(f"unknown analysis mode {self.kind!r}")
        if self.kind == "sample" and not (0.0 < self.alpha < 1.0):
            raise ConfigError(f"alpha must be strictly between 0 and 1, got {self.alpha}")


@dataclass(frozen=True)
class EdgeStatistics:
    """One event pair: counts, residuals, optional p-value, adjacency verdict."""

    i: int
    j: int
    c: int
    expected: float
    e: float
    d: float
    p: float | None
    adjacent: bool


@dataclass(frozen=True, eq=False)
class EdgeTable:
    """All co-occurring pairs with their statistics, as parallel arrays.

    ``saturated`` lists labels of events excluded because they occur in every
    scenario (their adjusted residual is undefined).
    """

    catalog: EventCatalog
    n_scenarios: int
    mode: AnalysisMode
    i: np.ndarray
    j: np.ndarray
    c: np.ndarray
    expected: np.ndarray
    e: np.ndarray
    d: np.ndarray
    p: np.ndarray | None
    adjacent: np.ndarray
    saturated: tuple[str, ...]

    def __len__(self) -> int:
        return self.i.shape[0]

    def __iter__(self) -> Iterator[EdgeStatistics]:
        for k in range(len(self)):
            yield EdgeStatistics(
                int(self.i[k]),
                int(self.j[k]),
                int(self.c[k]),
                float(self.expected[k]),
                float(self.e[k]),
                float(self.d[k]),
                None if self.p is None else float(self.p[k]),
                bool(self.adjacent[k]),
            )

    def _take(self, mask: np.ndarray) -> "EdgeTable":
        return EdgeTable(
            catalog=self.catalog,
            n_scenarios=self.n_scenarios,
            mode=self.mode,
            i=self.i[mask],
            j=self.j[mask],
            c=self.c[mask],
            expected=self.expected[mask],
            e=self.e[mask],
            d=self.d[mask],
            p=None if self.p is None else self.p[mask],
            adjacent=self.adjacent[mask],
            saturated=self.saturated,
        )


def analyze(inc: IncidenceMatrix, mode: AnalysisMode | None = None) -> EdgeTable:
    """Full pair statistics for every co-occurring, non-saturated pair.

    Saturated events (frequency = N) are excluded from pairs and reported in
    the table's ``saturated`` list; all other pairs get expected count,
    Pearson and adjusted residuals, the adjacency verdict, and in sample mode
    the one-sided p-value.
    """
    if mode is None:
        mode = AnalysisMode()
    cm = coincidence(inc)
    n = cm.n_scenarios
    freq = cm.diagonal
    sat_ids = np.flatnonzero(freq >= n)
    saturated = tuple(inc.catalog.labels[k] for k in sat_ids)

    keep = np.ones(cm.pair_c.shape[0], dtype=bool)
    if sat_ids.size:
        sat_mask = np.zeros(cm.n_events, dtype=bool)
        sat_mask[sat_ids] = True
        keep = ~(sat_mask[cm.pair_i] | sat_mask[cm.pair_j])
    i, j, c = cm.pair_i[keep], cm.pair_j[keep], cm.pair_c[keep]

    fi = freq[i]
    fj = freq[j]
    expected = np.asarray(expected_count(fi, fj, n), dtype=np.float64)
    e = np.asarray(pearson_residual(c, fi, fj, n), dtype=np.float64)
    d = np.asarray(haberman_residual(e, fi, fj, n), dtype=np.float64)

    if mode.kind == "sample":
        p = np.asarray(upper_tail_p(d), dtype=np.float64)
        adjacent = p < mode.alpha
    else:
        p = None
        adjacent = d > 0.0

    return EdgeTable(
        catalog=inc.catalog,
        n_scenarios=n,
        mode=mode,
        i=i,
        j=j,
        c=c,
        expected=expected,
        e=e,
        d=d,
        p=p,
        adjacent=adjacent,
        saturated=saturated,
    )


def prune_edges(table: EdgeTable, min_d: float = 0.0) -> EdgeTable:
    """Keep adjacent pairs with d >= min_d; min_d = 0 is the plain adjacency rule."""
    if min_d < 0:
        raise ConfigError(f"min_d must be >= 0, got {min_d}")
    return table._take(table.adjacent & (table.d >= min_d))


def write_edge_table(table: EdgeTable, target: Union[str, Path, IO[str]]) -> None:
    """Tab-separated dump of all pair statistics.

    Columns: i_label, j_label, c_ij, expected, e, d, p, adjacent.  Rows sorted
    by descending d, then lexicographically by the label pair.  The p column
    is empty in population mode.
    """
    labels = table.catalog.labels
    order = sorted(
        range(len(table)),
        key=lambda k: (-table.d[k], labels[table.i[k]], labels[table.j[k]]),
    )
    own = isinstance(target, (str, Path))
    fh = open(target, "w", encoding="utf-8", newline="") if own else target
    try:
        fh.write("i_label\tj_label\tc_ij\texpected\te\td\tp\tadjacent\n")
        for k in order:
            p = "" if table.p is None else repr(float(table.p[k]))
            fh.write(
                f"{labels[table.i[k]]}\t{labels[table.j[k]]}\t{int(table.c[k])}\t"
                f"{float(table.expected[k])!r}\t{float(table.e[k])!r}\t"
                f"{float(table.d[k])!r}\t{p}\t"
                f"{'true' if table.adjacent[k] else 'false'}\n"
            )
    finally:
        if own:
            fh.close()
