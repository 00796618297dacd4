"""SVG pictures of patches in the Poincare disk."""
from __future__ import annotations

import colorsys
from dataclasses import dataclass

from .geometry import DiskLayout, layout_patch
from .patch import Patch

STRAIGHT_TOL = 1e-9


@dataclass(frozen=True)
class RenderSpec:
    size: int = 1000
    margin: int = 25
    stroke_width: float = 0.8
    geodesic: bool = True


def face_color(k: int) -> str:
    """Fixed hue per face size, as #rrggbb."""
    hue = ((k * 47 + 200) % 360) / 360.0
    r, g, b = colorsys.hls_to_rgb(hue, 0.72 if k % 2 else 0.82, 0.55)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _circumcenter(a: complex, b: complex, c: complex) -> complex | None:
    d = 2 * (a.real * (b.imag - c.imag) + b.real * (c.imag - a.imag) + c.real * (a.imag - b.imag))
    if abs(d) < 1e-15:
        return None
    aa, bb, cc = abs(a) ** 2, abs(b) ** 2, abs(c) ** 2
    ux = (aa * (b.imag - c.imag) + bb * (c.imag - a.imag) + cc * (a.imag - b.imag)) / d
    uy = (aa * (c.real - b.real) + bb * (a.real - c.real) + cc * (b.real - a.real)) / d
    return complex(ux, uy)


def geodesic_circle(z1: complex, z2: complex) -> tuple[complex, float] | None:
    """Center and radius of the circle orthogonal to the unit circle through
    ``z1`` and ``z2``; None when the geodesic is a diameter."""
    cross = z1.real * z2.imag - z1.imag * z2.real
    if abs(cross) < STRAIGHT_TOL:
        return None
    w = z1 if abs(z1) >= abs(z2) else z2
    inv = w / abs(w) ** 2
    c = _circumcenter(z1, z2, inv)
    if c is None:
        return None
    return c, abs(z1 - c)


def _edge_command(z1: complex, z2: complex, to_svg, scale: float, geodesic: bool) -> str:
    x, y = to_svg(z2)
    if geodesic:
        circ = geodesic_circle(z1, z2)
        if circ is not None:
            c, r = circ
            u, v = z1 - c, z2 - c
            # the y flip turns counterclockwise into the negative SVG angle direction
            sweep = 0 if (u.real * v.imag - u.imag * v.real) > 0 else 1
            rr = _fmt(r * scale)
            return f"A{rr} {rr} 0 0 {sweep} {x} {y}"
    return f"L{x} {y}"


def render_svg(p: Patch, spec: RenderSpec = RenderSpec(), layout: DiskLayout | None = None) -> str:
    """One ``<path class="face">`` per face, edges as geodesic arcs.

    The y axis is flipped so that the picture has the usual mathematical
    orientation.  Output bytes depend only on ``p`` and ``spec``.
    """
    size = spec.size
    half = size / 2.0
    scale = half - spec.margin

    def to_svg(z: complex) -> tuple[str, str]:
        return _fmt(half + scale * z.real), _fmt(half - scale * z.imag)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" '
        f'width="{size}" height="{size}">',
        f'<circle class="boundary" cx="{_fmt(half)}" cy="{_fmt(half)}" r="{_fmt(scale)}" '
        f'fill="#f7f7f7" stroke="#333" stroke-width="{_fmt(spec.stroke_width * 1.5)}"/>',
    ]
    if p.n_faces:
        if layout is None:
            layout = layout_patch(p)
        lines.append(f'<g stroke="#222" stroke-width="{_fmt(spec.stroke_width)}" stroke-linejoin="round">')
        for f in sorted(layout.faces):
            pts = layout.face_points(f)
            x0, y0 = to_svg(pts[0])
            cmds = [f"M{x0} {y0}"]
            for i in range(len(pts)):
                cmds.append(_edge_command(pts[i], pts[(i + 1) % len(pts)], to_svg, scale, spec.geodesic))
            cmds.append("Z")
            k = p.fsize[f]
            lines.append(f'<path class="face" data-face="{f}" data-size="{k}" '
                         f'fill="{face_color(k)}" d="{" ".join(cmds)}"/>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


__all__ = ["RenderSpec", "render_svg", "face_color", "geodesic_circle"]
