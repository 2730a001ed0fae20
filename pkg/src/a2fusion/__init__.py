"""Exact A2 tensor products, fusion rules and their closed formula."""

from .bmw import BmwIntermediates, bmw_fusion, bmw_fusion_theorem, bmw_g, bmw_intermediates, bmw_tensor
from .fusion import CONTRIBUTING_ALCOVES, contributing_alcoves, fusion_coefficient, fusion_decomposition
from .multiplicity import (
    freudenthal_diagram,
    mult,
    mult_freudenthal,
    mult_piecewise_table,
    weight_diagram,
)
from .rootsystem import (
    AffineWeylWord,
    Weight,
    alcove_weights,
    dimension,
    dot_action,
    fold_to_alcove,
    fold_to_chamber,
    in_alcove,
    is_dominant,
    killing_form,
)
from .tensor import tensor_coefficient, tensor_decomposition

__version__ = "0.1.0"

__all__ = [
    "AffineWeylWord",
    "BmwIntermediates",
    "CONTRIBUTING_ALCOVES",
    "Weight",
    "alcove_weights",
    "bmw_fusion",
    "bmw_fusion_theorem",
    "bmw_g",
    "bmw_intermediates",
    "bmw_tensor",
    "contributing_alcoves",
    "dimension",
    "dot_action",
    "fold_to_alcove",
    "fold_to_chamber",
    "freudenthal_diagram",
    "fusion_coefficient",
    "fusion_decomposition",
    "in_alcove",
    "is_dominant",
    "killing_form",
    "mult",
    "mult_freudenthal",
    "mult_piecewise_table",
    "tensor_coefficient",
    "tensor_decomposition",
    "weight_diagram",
]
