"""Exact generalized Landen transforms and the maps they induce on projective space."""

from .exactrings import GF, QQ, ZZ, CyclotomicInt, CyclotomicRing, cyclotomic_polynomial, zeta_pow
from .multipoly import MultiPoly, NotDivisible
from .ratfunc import LaurentPrefix, ProjPoint, RatFunc, laurent_expand, normalize_proj
from .core import (
    LandenPair,
    MonoidElem,
    Report,
    generic_gh,
    laurent_transform_oracle,
    projective_map,
    transform,
)

__all__ = [
    "GF", "QQ", "ZZ", "CyclotomicInt", "CyclotomicRing", "cyclotomic_polynomial", "zeta_pow",
    "MultiPoly", "NotDivisible",
    "LaurentPrefix", "ProjPoint", "RatFunc", "laurent_expand", "normalize_proj",
    "LandenPair", "MonoidElem", "Report", "generic_gh", "laurent_transform_oracle",
    "projective_map", "transform",
]
