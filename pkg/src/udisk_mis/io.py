"""Instance and result files.

JSON instances look like ``{"radius": r, "disks": [{"id": 0, "x": .., "y": ..}]}``
(ids optional). CSV instances hold one ``x,y`` pair per line and need the
radius from the caller; ids follow row order.
"""
from __future__ import annotations

import csv
import io as _io
import json
import math
from pathlib import Path

from .geometry import Disk, Instance, InputError, SolveResult


def _reject_constant(name):
    raise InputError(f"non-finite number {name} in instance file")


def _fmt(path, fmt):
    if fmt:
        return fmt.lower()
    suffix = Path(path).suffix.lower()
    if suffix in (".json", ".csv"):
        return suffix[1:]
    raise InputError(f"cannot infer format of {path}; use .json or .csv or pass a format")


def _number(v, where):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise InputError(f"{where}: expected a number, got {v!r}")
    v = float(v)
    if not math.isfinite(v):
        raise InputError(f"{where}: non-finite value")
    return v


def instance_from_json(text: str) -> Instance:
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict) or "disks" not in data or "radius" not in data:
        raise InputError('instance JSON must be an object with "radius" and "disks"')
    radius = _number(data["radius"], "radius")
    if not isinstance(data["disks"], list):
        raise InputError('"disks" must be a list')
    disks = []
    for pos, entry in enumerate(data["disks"]):
        where = f"disks[{pos}]"
        if not isinstance(entry, dict) or "x" not in entry or "y" not in entry:
            raise InputError(f'{where}: expected an object with "x" and "y"')
        disk_id = entry.get("id", pos)
        if isinstance(disk_id, bool) or not isinstance(disk_id, int):
            raise InputError(f"{where}: id must be an integer")
        disks.append(Disk(disk_id, _number(entry["x"], f"{where}.x"), _number(entry["y"], f"{where}.y")))
    return Instance(tuple(disks), radius)


def instance_to_json(inst: Instance) -> str:
    payload = {
        "radius": inst.radius,
        "disks": [{"id": d.id, "x": d.cx, "y": d.cy} for d in inst.disks],
    }
    return json.dumps(payload, indent=1) + "\n"


def instance_from_csv(text: str, radius: float | None) -> Instance:
    if radius is None:
        raise InputError("CSV instances carry no radius; pass one (e.g. --radius 0.5)")
    points = []
    for lineno, row in enumerate(csv.reader(_io.StringIO(text)), start=1):
        if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
            continue
        if len(row) != 2:
            raise InputError(f"line {lineno}: expected 'x,y', got {len(row)} fields")
        try:
            x, y = float(row[0]), float(row[1])
        except ValueError:
            raise InputError(f"line {lineno}: not a number in {row!r}") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InputError(f"line {lineno}: non-finite coordinate")
        points.append((x, y))
    return Instance.from_points(points, radius)


def instance_to_csv(inst: Instance) -> str:
    return "".join(f"{d.cx!r},{d.cy!r}\n" for d in inst.disks)


def read_instance(path, fmt: str | None = None, radius: float | None = None) -> Instance:
    fmt = _fmt(path, fmt)
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    if fmt == "json":
        return instance_from_json(text)
    if fmt == "csv":
        return instance_from_csv(text, radius)
    raise InputError(f"unknown instance format {fmt!r}")


def write_instance(inst: Instance, path, fmt: str | None = None) -> None:
    fmt = _fmt(path, fmt)
    if fmt == "json":
        text = instance_to_json(inst)
    elif fmt == "csv":
        text = instance_to_csv(inst)
    else:
        raise InputError(f"unknown instance format {fmt!r}")
    Path(path).write_text(text)


def result_to_dict(result: SolveResult, algo: str | None = None) -> dict:
    return {
        "algo": algo or result.solver,
        "size": result.size,
        "selected": sorted(result.selected),
        "elapsed_ms": result.elapsed * 1000.0,
        "verified_independent": bool(result.verified),
    }


def write_result(result: SolveResult, path, algo: str | None = None, extra: dict | None = None) -> None:
    payload = result_to_dict(result, algo)
    if extra:
        payload.update(extra)
    Path(path).write_text(json.dumps(payload, indent=1) + "\n")


def read_result(path) -> SolveResult:
    try:
        data = json.loads(Path(path).read_text())
        selected = frozenset(int(i) for i in data["selected"])
        return SolveResult(
            selected,
            str(data.get("algo", "unknown")),
            float(data.get("elapsed_ms", 0.0)) / 1000.0,
            {},
            data.get("verified_independent"),
        )
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise InputError(f"cannot read result file {path}: {e}") from None
