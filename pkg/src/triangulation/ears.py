"""Ears glued onto a skeletal triangulation, tracked on the quiddity pair."""

from src.models import Boundary, EarScript, QuiddityPair, SkeletalTriangulation
from src.quiddity import reduce_once, reduce_to_skeletal, reverse_reduce
from src.triangulation.annulus import quiddity_pair


def pair_of(T: SkeletalTriangulation) -> QuiddityPair:
    outer, inner = quiddity_pair(T)
    return QuiddityPair(outer, inner)


def attach_ear(pair: QuiddityPair, boundary: Boundary, gap: int) -> QuiddityPair:
    """Glue an ear on ``boundary``; the new 1 sits at ``gap``."""
    return pair.replace(boundary, reverse_reduce(pair.on(boundary), gap))


def detach_ear(pair: QuiddityPair, boundary: Boundary, index: int) -> QuiddityPair:
    """Remove the ear at the 1 in position ``index`` of ``boundary``.

    Raises:
        NotAOneError: If the entry is not 1
        IllegalReductionError: If the 1 cannot be reduced
    """
    return pair.replace(boundary, reduce_once(pair.on(boundary), index))


def replay(script: EarScript, pair: QuiddityPair) -> QuiddityPair:
    for step in script:
        pair = attach_ear(pair, step.boundary, step.gap)
    return pair


def decorate(T: SkeletalTriangulation, script: EarScript) -> QuiddityPair:
    return replay(script, pair_of(T))


def skeleton_of(pair: QuiddityPair) -> QuiddityPair:
    """Reduce both boundary sequences to skeletal form."""
    return QuiddityPair(reduce_to_skeletal(pair.outer), reduce_to_skeletal(pair.inner))
