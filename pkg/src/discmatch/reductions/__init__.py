"""Instance generators for the hardness constructions, with certificate codecs."""

from .base import ReductionOutput
from .composition import compose_certificate, cross_compose, is_induced_matching
from .one_in_three import (
    OneInThreeInstance,
    build_one_in_three,
    decode_matching,
    encode_assignment,
    gadget_separators,
    is_one_in_three,
    solutions,
    structure_report,
    table_rows,
)
from .x3c import X3CInstance, build_x3c, decode_cover, encode_cover, exact_covers, is_exact_cover

__all__ = [
    "ReductionOutput",
    "OneInThreeInstance",
    "build_one_in_three",
    "encode_assignment",
    "decode_matching",
    "structure_report",
    "gadget_separators",
    "table_rows",
    "is_one_in_three",
    "solutions",
    "X3CInstance",
    "build_x3c",
    "encode_cover",
    "decode_cover",
    "exact_covers",
    "is_exact_cover",
    "cross_compose",
    "compose_certificate",
    "is_induced_matching",
]
