"""Exact integral-spectrum toolkit for Cayley graphs over small finite groups."""

from .classify import (
    MembershipReport,
    a2_structural,
    a3_structural,
    g3_structural,
    in_A_k,
    in_G_k,
    nilpotent_g3_case,
)
from .groups import (
    FiniteGroup,
    GroupProfile,
    Subgroup,
    catalog_groups,
    closure,
    construct,
    from_table,
    parse_word,
    profile,
    recognize_named,
    to_document,
)
from .polys import IntPolynomial
from .spectra import (
    AdjMatrix,
    SpectrumReport,
    cayley_adjacency,
    char_poly,
    integral_spectrum,
    is_integral_cayley,
    spectrum_by_factoring,
)
from .symsets import count_symmetric_sets, enumerate_symmetric_sets, inverse_partition
from .verify import Claim, ClaimResult, list_claims, run_all, run_claim

__version__ = "0.1.0"

__all__ = [
    "AdjMatrix",
    "Claim",
    "ClaimResult",
    "FiniteGroup",
    "GroupProfile",
    "IntPolynomial",
    "MembershipReport",
    "SpectrumReport",
    "Subgroup",
    "a2_structural",
    "a3_structural",
    "catalog_groups",
    "cayley_adjacency",
    "char_poly",
    "closure",
    "construct",
    "count_symmetric_sets",
    "enumerate_symmetric_sets",
    "from_table",
    "g3_structural",
    "in_A_k",
    "in_G_k",
    "integral_spectrum",
    "inverse_partition",
    "is_integral_cayley",
    "list_claims",
    "nilpotent_g3_case",
    "parse_word",
    "profile",
    "recognize_named",
    "run_all",
    "run_claim",
    "spectrum_by_factoring",
    "to_document",
    "__version__",
]
