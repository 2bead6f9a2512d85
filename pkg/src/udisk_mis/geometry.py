"""Disks, instances and the exact-convention predicates every solver relies on.

Adjacency compares raw floating-point squared distances against (2r)^2 with
no epsilon. The default convention is open: two disks whose centers are
exactly one diameter apart are tangent and count as independent. Pass
``closed=True`` to count tangency as an intersection.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np


class InputError(ValueError):
    """Malformed instance, unknown disk id or an out-of-range parameter."""


class InvariantViolation(RuntimeError):
    """An internal guarantee was broken (a bug, never bad input)."""


@dataclass(frozen=True)
class Disk:
    id: int
    cx: float
    cy: float

    def __post_init__(self):
        if not (math.isfinite(self.cx) and math.isfinite(self.cy)):
            raise InputError(f"disk {self.id}: non-finite center ({self.cx}, {self.cy})")
        if self.id < 0:
            raise InputError(f"disk id must be non-negative, got {self.id}")


@dataclass(frozen=True)
class Instance:
    """Equal-radius disks; the unit disk graph is implicit in their centers."""

    disks: tuple[Disk, ...]
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "disks", tuple(self.disks))
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise InputError(f"radius must be a positive finite number, got {self.radius}")
        seen = set()
        for d in self.disks:
            if d.id in seen:
                raise InputError(f"duplicate disk id {d.id}")
            seen.add(d.id)

    @classmethod
    def from_points(cls, points: Iterable[tuple[float, float]], radius: float) -> "Instance":
        return cls(tuple(Disk(i, float(x), float(y)) for i, (x, y) in enumerate(points)), float(radius))

    def __len__(self):
        return len(self.disks)

    @cached_property
    def by_id(self) -> dict[int, Disk]:
        return {d.id: d for d in self.disks}

    @cached_property
    def ids(self) -> np.ndarray:
        return np.array([d.id for d in self.disks], dtype=np.int64)

    @cached_property
    def xs(self) -> np.ndarray:
        return np.array([d.cx for d in self.disks], dtype=np.float64)

    @cached_property
    def ys(self) -> np.ndarray:
        return np.array([d.cy for d in self.disks], dtype=np.float64)

    def disk(self, disk_id: int) -> Disk:
        try:
            return self.by_id[disk_id]
        except KeyError:
            raise InputError(f"unknown disk id {disk_id}") from None

    def subset(self, ids: Iterable[int]) -> list[Disk]:
        return [self.disk(i) for i in ids]


@dataclass
class SolveResult:
    selected: frozenset[int]
    solver: str
    elapsed: float = 0.0
    stats: dict[str, int] = field(default_factory=dict)
    # None means "not checked"; paper-dp results are checked lazily by callers.
    verified: bool | None = None

    @property
    def size(self) -> int:
        return len(self.selected)


def dist_sq(a: Disk, b: Disk) -> float:
    dx = a.cx - b.cx
    dy = a.cy - b.cy
    return dx * dx + dy * dy


def adjacent(a: Disk, b: Disk, r: float, closed: bool = False) -> bool:
    if a.id == b.id:
        raise InputError(f"adjacency of disk {a.id} with itself is undefined")
    threshold = 4.0 * r * r
    d2 = dist_sq(a, b)
    return d2 <= threshold if closed else d2 < threshold


def stabs_line(d: Disk, y_line: float, r: float) -> bool:
    return abs(d.cy - y_line) <= r


def x_order_key(d: Disk) -> tuple[float, float, int]:
    return (d.cx, d.cy, d.id)


def adjacency_matrix(inst: Instance, closed: bool = False) -> np.ndarray:
    """Boolean n x n matrix in ``inst.disks`` order with a False diagonal."""
    xs, ys = inst.xs, inst.ys
    dx = xs[:, None] - xs[None, :]
    dy = ys[:, None] - ys[None, :]
    d2 = dx * dx + dy * dy
    threshold = 4.0 * inst.radius * inst.radius
    adj = d2 <= threshold if closed else d2 < threshold
    np.fill_diagonal(adj, False)
    return adj


def verify_independent(inst: Instance, ids: Iterable[int], closed: bool = False) -> bool:
    disks = inst.subset(set(ids))
    if len(disks) < 2:
        return True
    xs = np.array([d.cx for d in disks])
    ys = np.array([d.cy for d in disks])
    dx = xs[:, None] - xs[None, :]
    dy = ys[:, None] - ys[None, :]
    d2 = dx * dx + dy * dy
    threshold = 4.0 * inst.radius * inst.radius
    hit = d2 <= threshold if closed else d2 < threshold
    np.fill_diagonal(hit, False)
    return not bool(hit.any())


def scale(inst: Instance, c: float) -> Instance:
    if not (math.isfinite(c) and c > 0):
        raise InputError(f"scale factor must be positive, got {c}")
    return Instance(tuple(Disk(d.id, d.cx * c, d.cy * c) for d in inst.disks), inst.radius * c)
