"""Deterministic, seedable K-means over sentence vectors.

Initialization is kmeans++ driven by an explicitly specified SplitMix64
generator, so identical (points, config) reproduce bit-identical results
across runs and platforms; Lloyd iterations then run to convergence.  All
arithmetic is 64-bit floating point with no parallel reductions, and every
tie breaks toward the lowest index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyInput, KTooLarge, NonFiniteInput

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 PRNG: 64-bit state, golden-ratio increment, avalanche mix."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
        return z ^ (z >> 31)

    def next_double(self) -> float:
        # 53-bit mantissa draw, uniform on [0, 1).
        return (self.next_u64() >> 11) * 2.0**-53


@dataclass(frozen=True)
class KMeansConfig:
    k: int
    seed: int
    max_iters: int = 300
    rel_tol: float = 1e-4

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if self.rel_tol <= 0:
            raise ValueError("rel_tol must be > 0")


@dataclass(frozen=True)
class KMeansResult:
    centroids: np.ndarray
    assignments: np.ndarray
    inertia: float
    iterations: int
    inertia_history: tuple[float, ...]


def _as_points(points) -> np.ndarray:
    vectors = getattr(points, "vectors", points)
    array = np.asarray(vectors, dtype=np.float64)
    if array.ndim != 2:
        raise ValueError(f"points must be 2-D, got shape {array.shape}")
    return array


def _sq_dists_to(points: np.ndarray, centroid: np.ndarray) -> np.ndarray:
    diff = points - centroid
    return (diff * diff).sum(axis=1)


def _sq_dist_matrix(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    diff = points[:, None, :] - centroids[None, :, :]
    return (diff * diff).sum(axis=2)


def _plus_plus_init(points: np.ndarray, k: int, rng: SplitMix64) -> np.ndarray:
    n = points.shape[0]
    chosen = np.empty(k, dtype=np.int64)
    chosen[0] = rng.next_u64() % n
    d2 = _sq_dists_to(points, points[chosen[0]])
    for c in range(1, k):
        u = rng.next_double()
        cumulative = np.cumsum(d2)
        total = cumulative[-1]
        idx = int(np.searchsorted(cumulative, u * total, side="right"))
        if idx >= n:
            # All remaining weight is zero (duplicate points) or the draw hit
            # the top of the prefix sums; take the last positively weighted
            # index, or the last point when every weight is zero.
            positive = np.flatnonzero(d2 > 0.0)
            idx = int(positive[-1]) if positive.size else n - 1
        chosen[c] = idx
        d2 = np.minimum(d2, _sq_dists_to(points, points[idx]))
    return points[chosen].copy()


def kmeans_fit(points, config: KMeansConfig) -> KMeansResult:
    """Cluster ``points`` (EmbeddingMatrix or 2-D array) into ``config.k`` groups.

    Empty clusters arising during Lloyd updates are refilled with the point
    farthest from its current centroid.  The returned assignments map every
    point to its nearest final centroid, and ``inertia_history`` records the
    objective after each assignment pass (non-increasing by construction).
    """
    data = _as_points(points)
    n = data.shape[0]
    if n == 0:
        raise EmptyInput("no points to cluster")
    if not np.isfinite(data).all():
        raise NonFiniteInput("points contain non-finite components")
    if config.k > n:
        raise KTooLarge(f"k={config.k} exceeds point count {n}")

    rng = SplitMix64(config.seed)
    centroids = _plus_plus_init(data, config.k, rng)

    history: list[float] = []
    iterations = 0
    for _ in range(config.max_iters):
        iterations += 1
        dists = _sq_dist_matrix(data, centroids)
        assignments = np.argmin(dists, axis=1)
        history.append(float(dists[np.arange(n), assignments].sum()))

        new_centroids = centroids.copy()
        for j in range(config.k):
            members = assignments == j
            if members.any():
                new_centroids[j] = data[members].mean(axis=0)
        # Refill empty clusters (lowest cluster index first) with the point
        # currently farthest from its centroid; ties pick the lowest point.
        empties = [j for j in range(config.k) if not (assignments == j).any()]
        if empties:
            assignments = assignments.copy()
            for j in empties:
                point_dists = ((data - new_centroids[assignments]) ** 2).sum(axis=1)
                steal = int(np.argmax(point_dists))
                new_centroids[j] = data[steal]
                assignments[steal] = j

        shifts = np.sqrt(((new_centroids - centroids) ** 2).sum(axis=1))
        limits = config.rel_tol * (1.0 + np.sqrt((centroids * centroids).sum(axis=1)))
        centroids = new_centroids
        if bool((shifts < limits).all()):
            break

    dists = _sq_dist_matrix(data, centroids)
    assignments = np.argmin(dists, axis=1)
    inertia = float(dists[np.arange(n), assignments].sum())
    history.append(inertia)
    return KMeansResult(
        centroids=centroids,
        assignments=assignments,
        inertia=inertia,
        iterations=iterations,
        inertia_history=tuple(history),
    )


def nearest_to_centroids(result: KMeansResult, points) -> list[int]:
    """For each centroid in index order, the nearest not-yet-selected point.

    Selections are distinct: a point taken by an earlier centroid is skipped
    by later ones (ties break toward the lowest point index).  If fewer
    distinct points than centroids exist the list is shorter.
    """
    data = _as_points(points)
    n = data.shape[0]
    selected: list[int] = []
    taken = np.zeros(n, dtype=bool)
    for centroid in result.centroids:
        if taken.all():
            break
        dists = _sq_dists_to(data, centroid)
        dists[taken] = np.inf
        pick = int(np.argmin(dists))
        selected.append(pick)
        taken[pick] = True
    return selected
