"""2-D node placement: force-directed, stress minimization, classical scaling.

All three layouts are deterministic given their input and seed.  Edge weights
are connection strengths (larger = stronger); stress-based layouts convert
them to ideal distances via 1/weight, so strongly connected nodes sit closer.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import ConfigError


@dataclass(frozen=True, eq=False)
class LayoutInput:
    """Node count, weighted undirected edge list, canvas, and PRNG seed."""

    n_nodes: int
    edge_i: np.ndarray = field(default_factory=lambda: np.empty(0, np.int64))
    edge_j: np.ndarray = field(default_factory=lambda: np.empty(0, np.int64))
    weights: np.ndarray | None = None
    width: float = 1.0
    height: float = 1.0
    seed: int = 0

    def __post_init__(self):
        ei = np.asarray(self.edge_i, dtype=np.int64)
        ej = np.asarray(self.edge_j, dtype=np.int64)
        object.__setattr__(self, "edge_i", ei)
        object.__setattr__(self, "edge_j", ej)
        if self.n_nodes < 1:
            raise ConfigError("layout needs at least one node")
        if not (self.width > 0 and self.height > 0):
            raise ConfigError("canvas dimensions must be positive")
        if ei.shape != ej.shape:
            raise ConfigError("edge endpoint arrays differ in length")
        if ei.size:
            if ei.min() < 0 or ej.min() < 0 or max(ei.max(), ej.max()) >= self.n_nodes:
                raise ConfigError("edge endpoint out of range")
            if np.any(ei == ej):
                raise ConfigError("self-loops are not allowed")
            lo, hi = np.minimum(ei, ej), np.maximum(ei, ej)
            keys = lo * self.n_nodes + hi
            if np.unique(keys).shape[0] != keys.shape[0]:
                raise ConfigError("duplicate edges are not allowed")
        if self.weights is not None:
            w = np.asarray(self.weights, dtype=np.float64)
            object.__setattr__(self, "weights", w)
            if w.shape != ei.shape:
                raise ConfigError("weights length does not match edge count")
            if w.size and (not np.all(np.isfinite(w)) or w.min() <= 0):
                raise ConfigError("edge weights must be positive and finite")


def graph_distances(spec: LayoutInput) -> np.ndarray:
    """All-pairs shortest paths on edge length 1/weight.

    Disconnected pairs get 1.5x the maximum finite distance (1.0 when the
    graph has no edges at all), keeping components separate but finite.
    """
    n = spec.n_nodes
    w = spec.weights if spec.weights is not None else np.ones(spec.edge_i.shape[0])
    lengths = 1.0 / w if w.size else w
    graph = coo_matrix((lengths, (spec.edge_i, spec.edge_j)), shape=(n, n))
    dist = shortest_path(graph.tocsr(), method="D", directed=False)
    off = ~np.eye(n, dtype=bool)
    finite = dist[off & np.isfinite(dist)]
    max_finite = float(finite.max()) if finite.size else 0.0
    fill = 1.5 * max_finite if max_finite > 0 else 1.0
    dist[~np.isfinite(dist)] = fill
    return dist


def stress(positions: np.ndarray, distances: np.ndarray) -> float:
    """Sum over pairs of ((embedded - ideal)/ideal)^2."""
    diff = positions[:, None, :] - positions[None, :, :]
    d = np.sqrt((diff**2).sum(axis=-1))
    iu = np.triu_indices(positions.shape[0], k=1)
    return float((((d - distances)[iu] / distances[iu]) ** 2).sum())


def layout_fruchterman_reingold(spec: LayoutInput, iterations: int = 500) -> np.ndarray:
    """Classic force-directed placement, clamped to the canvas.

    Repulsion k^2/dist between all node pairs, attraction dist^2/k along
    edges scaled by normalized edge weight, displacement capped by a linearly
    cooling temperature from 0.1*width down to zero.  Bit-reproducible for a
    fixed (input, seed, iterations).
    """
    if iterations < 1:
        raise ConfigError("iterations must be >= 1")
    n, w, h = spec.n_nodes, spec.width, spec.height
    rng = np.random.default_rng(spec.seed)
    pos = rng.uniform(size=(n, 2)) * np.array([w, h])
    if n == 1:
        return np.array([[w / 2.0, h / 2.0]])

    k = np.sqrt(w * h / n)
    if spec.weights is not None and spec.weights.size:
        wfac = spec.weights / spec.weights.max()
    else:
        wfac = np.ones(spec.edge_i.shape[0])

    ei, ej = spec.edge_i, spec.edge_j
    for it in range(iterations):
        t = 0.1 * w * (1.0 - it / iterations)
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.sqrt((delta**2).sum(axis=-1))
        np.fill_diagonal(dist, 1.0)  # self-delta is zero, any divisor works
        dist = np.maximum(dist, 1e-9)  # clamping can make distinct nodes coincide
        disp = (delta * (k * k / dist**2)[:, :, None]).sum(axis=1)
        if ei.size:
            dvec = pos[ei] - pos[ej]
            dlen = np.sqrt((dvec**2).sum(axis=-1))
            dlen = np.maximum(dlen, 1e-12)
            pull = dvec / dlen[:, None] * (dlen**2 / k * wfac)[:, None]
            np.add.at(disp, ei, -pull)
            np.add.at(disp, ej, pull)
        norm = np.maximum(np.sqrt((disp**2).sum(axis=-1)), 1e-12)
        step = np.minimum(norm, t)
        pos += disp / norm[:, None] * step[:, None]
        np.clip(pos[:, 0], 0.0, w, out=pos[:, 0])
        np.clip(pos[:, 1], 0.0, h, out=pos[:, 1])
    return pos


def _node_terms(pos: np.ndarray, distances: np.ndarray, m: int) -> float:
    diff = pos[m] - pos
    r = np.sqrt((diff**2).sum(axis=-1))
    lm = distances[m]
    terms = ((r - lm) / np.where(lm > 0, lm, 1.0)) ** 2
    terms[m] = 0.0
    return float(terms.sum())


def _node_gradient(pos: np.ndarray, distances: np.ndarray, m: int) -> np.ndarray:
    diff = pos[m] - pos
    r = np.sqrt((diff**2).sum(axis=-1))
    r[m] = 1.0
    r = np.maximum(r, 1e-12)
    lm = np.where(distances[m] > 0, distances[m], 1.0)
    coef = 2.0 * (r - distances[m]) / (lm**2 * r)
    coef[m] = 0.0
    return (coef[:, None] * diff).sum(axis=0)


def _node_hessian(pos: np.ndarray, distances: np.ndarray, m: int) -> tuple[float, float, float]:
    diff = pos[m] - pos
    r = np.sqrt((diff**2).sum(axis=-1))
    r[m] = 1.0
    r = np.maximum(r, 1e-12)
    lm = np.where(distances[m] > 0, distances[m], 1.0)
    k = 2.0 / lm**2
    k[m] = 0.0
    r3 = r**3
    hxx = float((k * (1.0 - distances[m] * diff[:, 1] ** 2 / r3)).sum())
    hyy = float((k * (1.0 - distances[m] * diff[:, 0] ** 2 / r3)).sum())
    hxy = float((k * (distances[m] * diff[:, 0] * diff[:, 1] / r3)).sum())
    return hxx, hyy, hxy


def layout_kamada_kawai(
    spec: LayoutInput, max_iters: int = 1000, tol: float = 1e-6
) -> np.ndarray:
    """Stress minimization over graph-theoretic ideal distances.

    Starting from a circle, the node with the largest stress gradient is
    relaxed by a 2x2 Newton step (gradient fallback when the Hessian is
    degenerate), with step halving so total stress never increases.  Stops
    when every node's gradient norm is below tol.
    """
    if max_iters < 1:
        raise ConfigError("max_iters must be >= 1")
    if not tol > 0:
        raise ConfigError("tol must be positive")
    n, w, h = spec.n_nodes, spec.width, spec.height
    center = np.array([w / 2.0, h / 2.0])
    if n == 1:
        return center[None, :]
    distances = graph_distances(spec)

    theta = 2.0 * np.pi * np.arange(n) / n
    radius = min(w, h) / 2.0
    pos = center + radius * np.stack([np.cos(theta), np.sin(theta)], axis=1)

    grads = np.array([_node_gradient(pos, distances, m) for m in range(n)])
    gnorm = np.sqrt((grads**2).sum(axis=1))

    for _ in range(max_iters):
        m = int(np.argmax(gnorm))
        if gnorm[m] < tol:
            break
        improved = False
        for _inner in range(50):
            g = _node_gradient(pos, distances, m)
            if np.sqrt((g**2).sum()) < tol:
                break
            hxx, hyy, hxy = _node_hessian(pos, distances, m)
            det = hxx * hyy - hxy * hxy
            step = None
            if det > 1e-12 and hxx > 0:  # positive definite: Newton step descends
                step = np.array(
                    [(-g[0] * hyy + g[1] * hxy) / det, (g[0] * hxy - g[1] * hxx) / det]
                )
            if step is None or g @ step >= 0:
                step = -g
            before = _node_terms(pos, distances, m)
            old = pos[m].copy()
            scale = 1.0
            accepted = False
            for _half in range(40):
                pos[m] = old + scale * step
                if _node_terms(pos, distances, m) < before:
                    accepted = True
                    break
                scale *= 0.5
            if not accepted:
                pos[m] = old
                break
            improved = True
        grads = np.array([_node_gradient(pos, distances, mm) for mm in range(n)])
        gnorm = np.sqrt((grads**2).sum(axis=1))
        if not improved and int(np.argmax(gnorm)) == m and gnorm[m] >= tol:
            break  # the worst node cannot descend further
    return pos


def classical_mds_coordinates(
    distances: np.ndarray, seed: int = 0, tol: float = 1e-10, max_iter: int = 20000
) -> np.ndarray:
    """Double-center the squared distances and extract the top two eigenpairs.

    Power iteration runs on B shifted by sigma*I (sigma bounds the spectral
    radius) so the dominant eigenvalue of the shifted operator matches the
    algebraically largest eigenvalue of B even when B is indefinite; deflation
    then yields the second pair.  Eigenvector orientation is fixed by making
    the first component of magnitude > 1e-12 positive.
    """
    d = np.asarray(distances, dtype=np.float64)
    n = d.shape[0]
    if n == 1:
        return np.zeros((1, 2))
    d2 = d**2
    b = -0.5 * (d2 - d2.mean(axis=1, keepdims=True) - d2.mean(axis=0, keepdims=True) + d2.mean())
    b = 0.5 * (b + b.T)
    sigma = min(float(np.linalg.norm(b, "fro")), float(np.abs(b).sum(axis=1).max()))
    work = b.copy()
    rng = np.random.default_rng(seed)
    coords = np.zeros((n, 2))
    for axis in range(2):
        v = rng.standard_normal(n)
        v /= np.linalg.norm(v)
        for _ in range(max_iter):
            nxt = work @ v + sigma * v
            norm = np.linalg.norm(nxt)
            if norm < 1e-200:
                break  # shifted operator annihilates v: eigenvalue is at the spectrum floor
            nxt /= norm
            done = np.linalg.norm(nxt - v) < tol
            v = nxt
            if done:
                break
        lam = float(v @ (work @ v))
        for comp in v:
            if abs(comp) > 1e-12:
                if comp < 0:
                    v = -v
                break
        coords[:, axis] = v * np.sqrt(max(lam, 0.0))
        work -= lam * np.outer(v, v)
    return coords


def layout_mds(spec: LayoutInput) -> np.ndarray:
    """Classical scaling of the graph distances; coordinates centered at the origin."""
    if spec.n_nodes == 1:
        return np.zeros((1, 2))
    distances = graph_distances(spec)
    n = spec.n_nodes
    if n >= 4:
        off = distances[~np.eye(n, dtype=bool)]
        if np.allclose(off, off[0]):
            warnings.warn("all pairwise distances are equal; the embedding is not unique")
    return classical_mds_coordinates(distances, seed=spec.seed)


_ALGORITHMS: dict[str, Callable] = {
    "fr": layout_fruchterman_reingold,
    "kk": layout_kamada_kawai,
    "mds": layout_mds,
}


def layout_by_name(name: str, spec: LayoutInput, **kwargs) -> np.ndarray:
    """Dispatch by short algorithm name: fr, kk, or mds."""
    try:
        func = _ALGORITHMS[name]
    except KeyError:
        raise ConfigError(f"unknown layout algorithm {name!r}; use fr, kk, or mds") from None
    return func(spec, **kwargs)
