'''Finite-dimensional C*-algebras and actions on them by partial isomorphisms'''

from .algebra import AlgElement, FdAlgebra, complement_check, lattice_law_check
from .action import (
    PartialIsoAction, bimodule_identities_check, fd_action_from_space_action,
    ideal_I_tu, identity_partial_action, involution_J, theta, validate_fd_action,
    with_unit
)
from .matrices import (
    algebra_basis, algebra_dimension, block_dimensions, center_basis, rank, span_basis
)

__all__ = [
    'AlgElement',
    'FdAlgebra',
    'PartialIsoAction',
    'algebra_basis',
    'algebra_dimension',
    'bimodule_identities_check',
    'block_dimensions',
    'center_basis',
    'complement_check',
    'fd_action_from_space_action',
    'ideal_I_tu',
    'identity_partial_action',
    'involution_J',
    'lattice_law_check',
    'rank',
    'span_basis',
    'theta',
    'validate_fd_action',
    'with_unit',
]
