"""Skeletal triangulations of the annulus."""

from src.triangulation.annulus import (
    corner_counts,
    degrees,
    first_arc_choices,
    quiddity_pair,
    quiver_of,
    step_word,
    triangles,
    triangulation_from_quiddity,
    with_inner_offset,
)
from src.triangulation.ears import (
    attach_ear,
    decorate,
    detach_ear,
    pair_of,
    replay,
    skeleton_of,
)
from src.triangulation.render import build_drawing, render_net, render_svg

__all__ = [
    "corner_counts",
    "degrees",
    "first_arc_choices",
    "quiddity_pair",
    "quiver_of",
    "step_word",
    "triangles",
    "triangulation_from_quiddity",
    "with_inner_offset",
    "attach_ear",
    "decorate",
    "detach_ear",
    "pair_of",
    "replay",
    "skeleton_of",
    "build_drawing",
    "render_net",
    "render_svg",
]
