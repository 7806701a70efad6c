"""Garside groups: normal forms, summit sets, G(n), translation bounds and roots."""

from .conjugacy import (Conjugate, NotConjugate, SummitSet, are_conjugate,
                        summit_representative, summit_set, uss_membership)
from .core import (Element, GarsideStructure, atom_norm, cycling, decycling, delta_power,
                   element_text, geodesic_length, identity, invert, join_l, join_r,
                   lc_closure, meet_l, meet_r, minimal_garside, multiply, normalize,
                   power, simple_element, tau_iter)
from .errors import (DomainError, GarsideError, InputError, ResourceError,
                     StructureMismatch, VerificationError)
from .instances import braid_structure, cyclic_structure, torus_structure
from .powers import (StableInvariants, TranslationBounds, classes_below,
                     compare_translation, stable_from_power, stable_invariants,
                     translation_bounds)
from .product import (gn_make, gn_parts, gn_structure, semidirect_make,
                      semidirect_parts, semidirect_structure)
from .roots import NoRoot, Root, nth_root, root_degrees

__version__ = "0.1.0"
