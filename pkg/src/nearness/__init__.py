"""Finite merotopic and nearness spaces.

Canonical covers of small ground sets, merotopic structures as filters of
covers, the interior operator, joins, initial structures and the nearness
reflection, with exhaustive enumerators and independent oracles.
"""

from .covers import (
    Cover,
    GroundSet,
    SetMap,
    canonicalize,
    is_cover,
    members,
    preimage_cover,
    refines,
    singletons,
    wedge,
    whole,
)
from .enumeration import (
    CoverUniverse,
    enumerate_canonical_covers,
    enumerate_maps,
    enumerate_nearness_substructures,
    enumerate_structures,
    enumerate_structures_by_filters,
    find_counterexample,
    is_nearness_exhaustive,
    membership_oracle,
    naive_canonical_covers,
)
from .errors import (
    AlgorithmDisagreement,
    BudgetExceeded,
    EmptyGenerators,
    GroundSetMismatch,
    GroundSetTooLarge,
    NearnessError,
    NotACover,
    ParseError,
)
from .reflection import (
    ReflectionReport,
    initial_structure,
    iterate_reflection,
    join,
    reflect,
    reflect_iterative,
    reflect_maximal,
    verify_bireflection,
)
from .structures import (
    MerotopicStructure,
    contains,
    discrete,
    generate,
    indiscrete,
    interior,
    interior_image,
    is_nearness,
    subset_of,
    uniformly_continuous,
)

__version__ = "0.1.0"
