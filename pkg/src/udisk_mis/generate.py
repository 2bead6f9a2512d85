"""Seeded random instance generators."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .geometry import Disk, Instance, InputError

MODES = ("uniform", "clustered", "stabbed")
MAX_RESAMPLE_ROUNDS = 200


@dataclass(frozen=True)
class GenParams:
    mode: str
    n: int
    radius: float = 0.5
    seed: int = 0
    width: float | None = None
    height: float | None = None
    # None means 1e-6 * radius; 0 disables the guard
    min_sep: float | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}; choose from {MODES}")
        if self.n < 0:
            raise InputError(f"n must be non-negative, got {self.n}")
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise InputError(f"radius must be positive, got {self.radius}")
        if not 0 <= self.seed < 2**64:
            raise InputError(f"seed must fit in 64 unsigned bits, got {self.seed}")
        for name in ("width", "height"):
            v = getattr(self, name)
            if v is not None and not (math.isfinite(v) and v > 0):
                raise InputError(f"{name} must be positive, got {v}")
        if self.min_sep is not None and self.min_sep < 0:
            raise InputError(f"min_sep must be non-negative, got {self.min_sep}")

    @property
    def box(self) -> tuple[float, float]:
        """Sampling extents; for stabbed mode height is the band 2r."""
        r = self.radius
        if self.mode == "stabbed":
            return (self.width or max(2 * r, self.n * r), 2 * r)
        side = 2 * r * math.sqrt(max(self.n, 1)) * 1.5
        return (self.width or side, self.height or side)

    @property
    def separation(self) -> float:
        return 1e-6 * self.radius if self.min_sep is None else self.min_sep


def _sampler(p: GenParams, rng: np.random.Generator):
    w, h = p.box
    r = p.radius
    if p.mode == "uniform":
        return lambda m: np.column_stack([rng.uniform(0, w, m), rng.uniform(0, h, m)])
    if p.mode == "stabbed":
        return lambda m: np.column_stack([rng.uniform(0, w, m), rng.uniform(-r, r, m)])
    k = max(1, round(math.sqrt(p.n)))
    centers = np.column_stack([rng.uniform(0, w, k), rng.uniform(0, h, k)])

    def clustered(m):
        which = rng.integers(0, k, m)
        return centers[which] + rng.normal(0.0, 2 * r, (m, 2))

    return clustered


def _bad_points(pts: np.ndarray, diameter: float, sep: float) -> np.ndarray:
    """Indices to resample: the later point of every pair that is too close
    together or within ``sep`` of the adjacency threshold."""
    tree = cKDTree(pts)
    bad = set()
    for i, j in tree.query_pairs(sep, output_type="ndarray").tolist():
        bad.add(max(i, j))
    near = tree.query_pairs(diameter + sep, output_type="ndarray")
    if len(near):
        d = np.linalg.norm(pts[near[:, 0]] - pts[near[:, 1]], axis=1)
        hit = near[np.abs(d - diameter) < sep]
        bad.update(hit.max(axis=1).tolist())
    return np.array(sorted(bad), dtype=np.int64)


def generate(p: GenParams) -> Instance:
    rng = np.random.default_rng(p.seed)
    if p.n == 0:
        return Instance((), p.radius)
    sample = _sampler(p, rng)
    pts = sample(p.n)
    sep = p.separation
    if sep > 0:
        for _ in range(MAX_RESAMPLE_ROUNDS):
            bad = _bad_points(pts, 2 * p.radius, sep)
            if len(bad) == 0:
                break
            pts[bad] = sample(len(bad))
        else:
            raise InputError(
                f"could not place {p.n} disks with min_sep={sep} after {MAX_RESAMPLE_ROUNDS} rounds; "
                "lower the density or min_sep"
            )
    return Instance(tuple(Disk(i, float(x), float(y)) for i, (x, y) in enumerate(pts)), p.radius)
