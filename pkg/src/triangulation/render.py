"""SVG and text renderings of skeletal triangulations.

The annulus is drawn as two concentric circles. Arc k runs from outer
position O_k to inner position U_k, where both positions count the steps
taken on each boundary since the first arc without reducing them modulo
the boundary size. Interpolating angle and radius between the two ends
keeps consecutive arcs from crossing.
"""

import math
from pathlib import Path

import drawsvg as draw
import structlog

from src.models import Boundary, IOFailureError, SkeletalTriangulation

logger = structlog.get_logger()

ARC_COLOR = "#1f5fa8"
BOUNDARY_COLOR = "#333333"
POINT_COLOR = "#c0392b"


def _unwrapped_positions(T: SkeletalTriangulation) -> list[tuple[int, int]]:
    o, i = T.arcs[0]
    outer, inner = o - 1, i - 1
    positions = []
    for turn in T.turns:
        positions.append((outer, inner))
        if turn is Boundary.B1:
            outer += 1
        else:
            inner += 1
    return positions


def build_drawing(T: SkeletalTriangulation, size: int = 480, samples: int = 24) -> draw.Drawing:
    m, n = T.outer_count, T.inner_count
    cx = cy = size / 2
    big, small = size * 0.42, size * 0.18

    def point(radius: float, angle: float) -> tuple[float, float]:
        return (round(cx + radius * math.cos(angle), 3), round(cy - radius * math.sin(angle), 3))

    d = draw.Drawing(size, size)
    d.append(draw.Rectangle(0, 0, size, size, fill="white"))
    d.append(draw.Circle(cx, cy, big, fill="none", stroke=BOUNDARY_COLOR, stroke_width=2))
    d.append(draw.Circle(cx, cy, small, fill="#eeeeee", stroke=BOUNDARY_COLOR, stroke_width=2))

    for outer, inner in _unwrapped_positions(T):
        start = 2 * math.pi * outer / m
        end = 2 * math.pi * inner / n
        path = draw.Path(stroke=ARC_COLOR, stroke_width=1.5, fill="none")
        path.M(*point(big, start))
        for s in range(1, samples + 1):
            f = s / samples
            path.L(*point(big + (small - big) * f, start + (end - start) * f))
        d.append(path)

    for label in range(1, m + 1):
        x, y = point(big, 2 * math.pi * (label - 1) / m)
        d.append(draw.Circle(x, y, 4, fill=POINT_COLOR))
        lx, ly = point(big + 16, 2 * math.pi * (label - 1) / m)
        d.append(draw.Text(str(label), 12, lx, ly, text_anchor="middle", dominant_baseline="middle"))
    for label in range(1, n + 1):
        x, y = point(small, 2 * math.pi * (label - 1) / n)
        d.append(draw.Circle(x, y, 4, fill=POINT_COLOR))
        lx, ly = point(small - 14, 2 * math.pi * (label - 1) / n)
        d.append(draw.Text(f"{label}\u0304", 11, lx, ly, text_anchor="middle", dominant_baseline="middle"))
    return d


def render_svg(
    T: SkeletalTriangulation,
    path: Path | str | None = None,
    size: int = 480,
    samples: int = 24,
) -> str:
    """SVG markup for T, also written to ``path`` when given.

    Raises:
        IOFailureError: If the file cannot be written
    """
    drawing = build_drawing(T, size=size, samples=samples)
    svg = drawing.as_svg()
    if path is not None:
        try:
            Path(path).write_text(svg, encoding="utf-8")
        except OSError as e:
            raise IOFailureError(f"Cannot write {path}: {e}") from e
        logger.info("svg_written", path=str(path), arcs=T.arc_count)
    return svg


def render_net(T: SkeletalTriangulation) -> str:
    """One line per arc in anti-clockwise order."""
    lines = [f"C_{{{T.outer_count},{T.inner_count}}} inner_offset={T.inner_offset}"]
    for o, i in T.arcs:
        lines.append(f"(outer {o} - inner {i}\u0304)")
    return "\n".join(lines)
