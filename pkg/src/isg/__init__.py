'''Finite inverse semigroups'''

from .semigroup import (
    InverseSemigroup, adjoin_unit, adjoin_zero, find_isomorphism, idempotents,
    leq, lower_bounds, order_is_partial_order, sorted_elements, validate,
    validate_semigroup, with_unit
)
from .partial_maps import (
    all_partial_bijections, from_partial_bijections, symmetric_inverse_monoid
)
from .small import cyclic_group, cyclic_group_with_zero, sign_monoid
from .unitary import is_e_star_unitary, is_e_unitary, order_condition

__all__ = [
    'InverseSemigroup',
    'adjoin_unit',
    'adjoin_zero',
    'all_partial_bijections',
    'cyclic_group',
    'cyclic_group_with_zero',
    'find_isomorphism',
    'from_partial_bijections',
    'idempotents',
    'is_e_star_unitary',
    'is_e_unitary',
    'leq',
    'lower_bounds',
    'order_condition',
    'order_is_partial_order',
    'sign_monoid',
    'sorted_elements',
    'symmetric_inverse_monoid',
    'validate',
    'validate_semigroup',
    'with_unit',
]
