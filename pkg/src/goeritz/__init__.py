"""Mechanical verification that the reducing sphere's slide class is a
product of the half-twist, handle-swap and a discovered slide twist, in
the mapping-class model of the genus-2 one-holed surface."""

from .words import (parse_word, format_word, multiply, invert, reduce,
                    commutator, cyclic_reduce, canonical_cycle,
                    are_conjugate, conjugacy_solutions)
from .aut import (Endo, MappingClassModel, parse_endo, identity_endo,
                  apply, compose, compose_all, model_compose, model_power,
                  is_inner, verify_mapping_class)
from .homology import (J, abelianization_matrix, is_symplectic,
                       transvection, intersection_number, matrix_product)
from .twists import (CURVES, BOUNDARY, DELTA1, DELTA2, ACCEPTED_SIGN,
                     elementary_twists, boundary_twists, twist_library,
                     validate_library)
from .powell import (ConstraintProfile, slide_profile, spin_profile,
                     discover, half_twist, swap, conjugated_half_twist,
                     power_realizations)
from .verify import (Toggles, iter_toggles, generator_env, lemma_check,
                     residual_model, residual_check, pants_search,
                     theorem_verify, certificate_check, evaluate_expression,
                     save_certificate, load_certificate, WORD_C)

__version__ = "0.3.0"
