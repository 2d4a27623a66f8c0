"""Exact arithmetic in differential polynomial rings K[t;delta] and the
nonassociative quotient algebras S_f, with their nuclei, characteristic-p
invariants and resultant machinery."""

from .errors import DiffalgError
from .fields import Element, FieldTower, make_tower
from .ore import OrePoly, left_divmod, mod_r, mul, right_divmod, right_gcd
from .petit import PetitAlgebra, make_petit

__all__ = [
    "DiffalgError",
    "Element",
    "FieldTower",
    "make_tower",
    "OrePoly",
    "left_divmod",
    "mod_r",
    "mul",
    "right_divmod",
    "right_gcd",
    "PetitAlgebra",
    "make_petit",
]

__version__ = "0.1.0"
