"""Chord-type multisets of Hamiltonian paths on circle points.

Library and CLI for enumerating admissible chord-type multisets of
n equally spaced points on a circle, realizing them as Hamiltonian
paths (randomized hill climbing and limited-discrepancy backtracking),
computing the exact vector space of length identities via cyclotomic
polynomial arithmetic, and counting distinct Euclidean path lengths
(OEIS A030077 and A352568).
"""

__version__ = "0.1.0"

from .core import (
    InvalidChordError,
    InvalidMultisetError,
    InvalidPathError,
    admissibility_violation,
    canonical_rep,
    chord_type,
    coprime_transform,
    coprime_units,
    is_admissible,
    num_types,
    parse_multiset,
    parse_path,
    path_length_numeric,
    path_multiset,
    rank,
    sigma_d,
    unrank,
)
from .enumeration import (
    EnumerationRange,
    count_admissible,
    count_all,
    full_range,
    iter_admissible,
    iter_canonical,
)
from .identities import (
    IdentityBasis,
    LinearSystem,
    build_remainder_system,
    cyclotomic,
    dimension_formula,
    identity_basis,
    improper_identity,
    is_antipalindromic,
    is_identity,
    is_palindromic,
    same_length,
    satisfies_sine_relation,
)
from .lengths import (
    BoundedIdentitySet,
    arrow,
    count_distinct_lengths,
    count_distinct_lengths_numeric,
    eliminates,
    enumerate_bounded_identities,
    essential_identities,
    integer_identity_lattice,
)
from .realize import (
    CampaignCheckpoint,
    CampaignReport,
    CheckpointIntegrityError,
    HillClimbConfig,
    LdsConfig,
    brute_force_realizable,
    campaign,
    heuristic_order,
    hillclimb,
    lds_backtrack,
    realize_multiset,
    spot_check,
    verify,
)
