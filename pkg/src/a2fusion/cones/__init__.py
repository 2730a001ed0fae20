"""Exact polyhedral cones and cone-supported piecewise-linear expressions."""

from .core import (
    Cone,
    ConeSupportedExpression,
    ConeSupportedExpressionSet,
    Generators,
    LinearForm,
    PartitionReport,
    cses_add,
    cses_scale,
    cses_simplify,
    evaluate,
    find_uncovered_point,
    intersect,
    is_full_dimensional,
    is_union_convex,
    normalize_row,
    pullback,
    rays_and_lines,
    reduce,
    union_hull,
)

__all__ = [
    "Cone",
    "ConeSupportedExpression",
    "ConeSupportedExpressionSet",
    "Generators",
    "LinearForm",
    "PartitionReport",
    "cses_add",
    "cses_scale",
    "cses_simplify",
    "evaluate",
    "find_uncovered_point",
    "intersect",
    "is_full_dimensional",
    "is_union_convex",
    "normalize_row",
    "pullback",
    "rays_and_lines",
    "reduce",
    "union_hull",
]
