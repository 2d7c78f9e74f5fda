"""Exact lattice computations for the group G_2d acting on 2d-polarized K3 moduli."""

from .discriminant import (
    DiscMultiplier,
    GroupElementG,
    compose,
    cubic_admissible,
    enumerate_multipliers,
    group_elements,
    induced_multiplier,
    p_of,
)
from .heegner import (
    FixedLocusReport,
    HeegnerInvariant,
    ReflectiveCandidate,
    brute_force_classify,
    classify_fixed_divisors,
    exists_fixed_class_with_norm,
    in_refl_set,
    is_nontrivial_in_G,
    multiplier_of,
    ns_gram_generic,
    orbit_invariant,
    representative,
)
from .binary_forms import binary_forms_equivalent
from .kernels import BACKEND
from .mukai import (
    CoprimePair,
    MukaiVector,
    coprime_factorizations,
    fm_partner_count,
    mukai_group_element,
    mukai_pairing,
)

__version__ = "0.1.0"
