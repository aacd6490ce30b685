"""Independent ways of computing the same numbers, used to cross-check the reduction engine."""

from .appendix import AppendixReport, Identity, appendix_identities, verify_appendix
from .divsym import (
    OracleDisagreement,
    divided_symmetrization,
    mixed_eulerian_divsym,
    permutohedron_volume,
    symmetrize_at,
)
from .quotient import (
    QuotientDimensionError,
    QuotientSpace,
    mixed_eulerian_quotient,
    quotient_reduce,
    quotient_space,
)
from .weylsum import EnumerationCapExceeded, mixed_eulerian_weylsum, weylsum_at

__all__ = [
    "AppendixReport",
    "Identity",
    "appendix_identities",
    "verify_appendix",
    "OracleDisagreement",
    "divided_symmetrization",
    "mixed_eulerian_divsym",
    "permutohedron_volume",
    "symmetrize_at",
    "QuotientDimensionError",
    "QuotientSpace",
    "mixed_eulerian_quotient",
    "quotient_reduce",
    "quotient_space",
    "EnumerationCapExceeded",
    "mixed_eulerian_weylsum",
    "weylsum_at",
]
