"""Dimension and Bose distance of primitive BCH codes.

The closed-form engine lives in :mod:`bchdim.formulas`, the brute-force
coset oracle in :mod:`bchdim.cosets`, and explicit code construction in
:mod:`bchdim.gf` and :mod:`bchdim.codes`.
"""
from .errors import ClosedFormInapplicable, DeferredToPriorWork, DeskScaleExceeded, DomainError
from .formulas import BchResult, Source, bch_parameters, bose_distance, dimension
from .qadic import CodeIndex

__all__ = [
    "BchResult",
    "ClosedFormInapplicable",
    "CodeIndex",
    "DeferredToPriorWork",
    "DeskScaleExceeded",
    "DomainError",
    "Source",
    "bch_parameters",
    "bose_distance",
    "dimension",
]
__version__ = "0.1.0"
