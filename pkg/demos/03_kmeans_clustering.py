#!/usr/bin/env python3
"""Seeded K-means on a toy 2-D instance: kmeans++ init, Lloyd iterations,
and centroid-nearest selection."""

import numpy as np

from vedsum import KMeansConfig, kmeans_fit, nearest_to_centroids

# Three well-separated blobs of four points each.
rng = np.random.default_rng(0)
blobs = [(0.0, 0.0), (8.0, 0.0), (4.0, 7.0)]
points = np.vstack([center + rng.normal(scale=0.4, size=(4, 2)) for center in blobs])

result = kmeans_fit(points, KMeansConfig(k=3, seed=42))
print("iterations:", result.iterations)
print("inertia:   ", result.inertia)
print("history:   ", [round(v, 3) for v in result.inertia_history])
print("assignments:", result.assignments.tolist())
for j, centroid in enumerate(result.centroids):
    members = np.flatnonzero(result.assignments == j).tolist()
    print(f"  centroid {j} at ({centroid[0]:+.2f}, {centroid[1]:+.2f}) <- points {members}")

# The summarizer does not use the centroids themselves: it takes the point
# nearest each centroid (distinct picks, ties to the lowest index).
picks = nearest_to_centroids(result, points)
print("representative points:", picks)

# Same seed, same input, same result: runs are bit-identical.
again = kmeans_fit(points, KMeansConfig(k=3, seed=42))
print("bit-identical rerun:", result.centroids.tobytes() == again.centroids.tobytes())

# A different seed may land in a different local optimum, which is why the
# seed is part of every config and every report.
other = kmeans_fit(points, KMeansConfig(k=3, seed=7))
print("seed 7 inertia:", other.inertia)
