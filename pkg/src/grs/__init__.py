"""Exact symbolic engine for the two-parameter quantum group G_{r,s}."""

from .algebra import (
    DEFAULT_BOUND,
    AlgebraElement,
    Bound,
    GeneratorWord,
    Monomial,
    TensorElement,
    antipode,
    coproduct,
    counit,
    generator,
    multiply,
    normal_form,
    unit,
)
from .dual import FunctionalElement, grouplike, letter, pair, pair_tensor
from .parser import parse_expression
from .report import Report
from .scalars import LAMBDA, R, S, Scalar, ratio_equal

__all__ = [
    "DEFAULT_BOUND",
    "LAMBDA",
    "AlgebraElement",
    "Bound",
    "FunctionalElement",
    "GeneratorWord",
    "Monomial",
    "R",
    "Report",
    "S",
    "Scalar",
    "TensorElement",
    "antipode",
    "coproduct",
    "counit",
    "generator",
    "grouplike",
    "letter",
    "multiply",
    "normal_form",
    "pair",
    "pair_tensor",
    "parse_expression",
    "ratio_equal",
    "unit",
]
