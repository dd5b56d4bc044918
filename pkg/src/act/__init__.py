'''Actions on finite spaces and their groupoids of germs'''

from .action import (
    SpaceAction, natural_action, prim_action, trivial_action, universal_action,
    validate_action, with_unit
)
from .criteria import criterion_d1t_closed
from .crosscheck import (
    canonical_spectrum_map, check_equivariant_inheritance, e_unitary_cross_check
)
from .germs import (
    GermGroupoid, check_groupoid_laws, germ_groupoid, germ_relation_is_equivalence,
    groupoid_is_hausdorff, units_closed
)

__all__ = [
    'GermGroupoid',
    'SpaceAction',
    'canonical_spectrum_map',
    'check_equivariant_inheritance',
    'check_groupoid_laws',
    'criterion_d1t_closed',
    'e_unitary_cross_check',
    'germ_groupoid',
    'germ_relation_is_equivalence',
    'groupoid_is_hausdorff',
    'natural_action',
    'prim_action',
    'trivial_action',
    'units_closed',
    'universal_action',
    'validate_action',
    'with_unit',
]
