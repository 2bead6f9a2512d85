"""Static SVG drawing of an instance, a solution and its stabbing lines."""
from __future__ import annotations

from .geometry import Instance, InputError, SolveResult
from .strips import StripAssignment


def _n(v: float) -> str:
    return f"{v:.6g}"


def render_svg(inst: Instance, result: SolveResult | None = None, sa: StripAssignment | None = None,
               px_per_unit: float | None = None) -> str:
    selected = frozenset() if result is None else result.selected
    unknown = selected - set(inst.by_id)
    if unknown:
        raise InputError(f"result names unknown disk ids {sorted(unknown)}")
    r = inst.radius
    if len(inst):
        x0, x1 = float(inst.xs.min()) - r, float(inst.xs.max()) + r
        y0, y1 = float(inst.ys.min()) - r, float(inst.ys.max()) + r
    else:
        x0, x1, y0, y1 = 0.0, 1.0, 0.0, 1.0
    pad = 0.5 * r if len(inst) else 0.0
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    w, h = x1 - x0, y1 - y0
    scale = px_per_unit or 600.0 / max(w, h)
    # SVG y grows downward; flip so the picture matches the plane
    sx = lambda x: (x - x0) * scale  # noqa: E731
    sy = lambda y: (y1 - y) * scale  # noqa: E731
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_n(w * scale)}" height="{_n(h * scale)}" '
        f'viewBox="0 0 {_n(w * scale)} {_n(h * scale)}">',
        f'<rect width="100%" height="100%" fill="white"/>',
    ]
    if sa is not None:
        for i, y in enumerate(sa.line_ys, start=1):
            out.append(
                f'<line class="stab" data-strip="{i}" x1="0" y1="{_n(sy(y))}" x2="{_n(w * scale)}" '
                f'y2="{_n(sy(y))}" stroke="gray" stroke-dasharray="6,4"/>'
            )
    for d in inst.disks:
        chosen = d.id in selected
        fill = "#4a90d9" if chosen else "none"
        cls = "disk selected" if chosen else "disk"
        out.append(
            f'<circle class="{cls}" data-id="{d.id}" cx="{_n(sx(d.cx))}" cy="{_n(sy(d.cy))}" '
            f'r="{_n(r * scale)}" fill="{fill}" fill-opacity="0.5" stroke="black"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
