"""Byte-stable SVG strip of normalized orbit iterates.

One 256x256 frame per iterate, laid out left to right, stroke only. The
affine-normalized polygons have unit vertex second moment, so a fixed
window of half-width ``extent`` around the origin frames all of them.
"""
import numpy as np

FRAME = 256


def _num(v):
    return f"{round(float(v), 3) + 0.0:.3f}"


def orbit_svg(frames, extent=3.0, stroke_width=1.5):
    frames = [np.asarray(f, dtype=float) for f in frames]
    frames = [f for f in frames if np.all(np.isfinite(f))]
    width = FRAME * max(len(frames), 1)
    half = FRAME / 2
    s = half / extent
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{FRAME}" viewBox="0 0 {width} {FRAME}">',
    ]
    for k, pts in enumerate(frames):
        coords = " ".join(f"{_num(half + s * x)},{_num(half - s * y)}" for x, y in pts)
        out.append(f'  <g id="frame-{k}" transform="translate({FRAME * k},0)">')
        out.append(f'    <rect x="0" y="0" width="{FRAME}" height="{FRAME}" fill="none" stroke="#bbbbbb" stroke-width="1"/>')
        out.append(f'    <polygon points="{coords}" fill="none" stroke="black" stroke-width="{stroke_width}"/>')
        out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
