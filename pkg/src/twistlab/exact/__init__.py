"""Exact scalars, dense matrices and truncated series."""
from fractions import Fraction

from .fields import (GF, QQ, QQ_q, Field, PrimeField, common_field, field_from_json, field_of,
                     field_to_json, scalar_from_json, scalar_to_json)
from .matrix import Matrix, kernel_basis, rank
from .scalars import GFElement, RatFunc, is_prime
from .series import DEFAULT_ORDER, TruncatedSeries, exp_integral_transform, expand_rational

__all__ = [
    "Fraction", "GF", "QQ", "QQ_q", "Field", "PrimeField", "GFElement", "RatFunc", "Matrix",
    "TruncatedSeries", "DEFAULT_ORDER", "rank", "kernel_basis", "exp_integral_transform",
    "expand_rational", "common_field", "field_of", "field_from_json", "field_to_json",
    "scalar_from_json", "scalar_to_json", "is_prime",
]
