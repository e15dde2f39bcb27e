"""Quiddity sequence operations."""

from src.quiddity.core import (
    block_form,
    canonical_rotation,
    classify,
    cyclically_equal,
    enumerate_skeletal,
    is_skeletal,
    is_trivial,
    least_rotation,
    legal_reductions,
    partner,
    reduce_once,
    reduce_to_skeletal,
    reduction_trace,
    reverse_reduce,
)

__all__ = [
    "block_form",
    "canonical_rotation",
    "classify",
    "cyclically_equal",
    "enumerate_skeletal",
    "is_skeletal",
    "is_trivial",
    "least_rotation",
    "legal_reductions",
    "partner",
    "reduce_once",
    "reduce_to_skeletal",
    "reduction_trace",
    "reverse_reduce",
]
