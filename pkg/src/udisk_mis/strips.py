"""Horizontal strip decomposition: lines one diameter apart, one line per disk."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import Instance, adjacency_matrix


@dataclass(frozen=True)
class StripAssignment:
    line_ys: tuple[float, ...]
    strips: tuple[tuple[int, ...], ...]
    assignment: dict[int, int]

    @property
    def k(self) -> int:
        return len(self.line_ys)

    def to_json(self) -> dict:
        return {
            "line_ys": list(self.line_ys),
            "strips": [list(s) for s in self.strips],
        }


def decompose(inst: Instance) -> StripAssignment:
    """Assign every disk to its nearest stabbing line.

    Line 0 passes through the topmost center and each following line sits
    2r lower, down to the first line within r of the lowest center. A center
    equidistant from two lines goes to the upper one. Empty strips are kept so that strip parity matches geometric position.
    """
    if len(inst) == 0:
        return StripAssignment((), (), {})
    r = inst.radius
    gap = 2.0 * r
    ys = inst.ys
    y_max = float(ys.max())
    y_min = float(ys.min())
    # fewest lines such that the lowest center is within r of the last line
    k = max(1, math.ceil((y_max - y_min - r) / gap) + 1)
    while y_max - (k - 1) * gap - r > y_min:
        k += 1
    line_ys = tuple(y_max - i * gap for i in range(k))
    lines = np.array(line_ys)

    below = np.clip(np.floor((y_max - ys) / gap).astype(np.int64), 0, k - 1)
    lower = np.minimum(below + 1, k - 1)
    d_up = np.abs(ys - lines[below])
    d_low = np.abs(ys - lines[lower])
    idx = np.where(d_low < d_up, lower, below)

    members: list[list[int]] = [[] for _ in range(k)]
    assignment = {}
    for disk, i in zip(inst.disks, idx.tolist()):
        members[i].append(disk.id)
        assignment[disk.id] = i
    return StripAssignment(line_ys, tuple(tuple(m) for m in members), assignment)


def check_observation1(sa: StripAssignment, inst: Instance, closed: bool = False) -> bool:
    """True iff no adjacent pair sits in strips whose indices differ by more than one."""
    if len(inst) < 2:
        return True
    strip_of = np.array([sa.assignment[d.id] for d in inst.disks])
    far = np.abs(strip_of[:, None] - strip_of[None, :]) > 1
    return not bool((far & adjacency_matrix(inst, closed)).any())
