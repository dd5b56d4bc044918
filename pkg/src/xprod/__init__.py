'''Crossed products, conditional expectations and induced representations'''

from .crossed import (
    CrossedElement, CrossedProduct, expectation, expectation_laws_check,
    expectation_range_check, inner_product, lattice_of_ideals, multiply, normal_form,
    positivity_check, relation_span_check, star
)
from .representation import (
    AlgebraRep, InducedRepresentation, Representation, check_representation,
    e_faithful_check, grading_isometry_check, induce, induced_functional, lattice_criterion,
    regular_module_and_rep, restriction_formula
)
from .z2 import BlockAutomorphism, check_01m1_data, crossed_01m1, random_01m1_instance

__all__ = [
    'AlgebraRep',
    'BlockAutomorphism',
    'CrossedElement',
    'CrossedProduct',
    'InducedRepresentation',
    'Representation',
    'check_01m1_data',
    'check_representation',
    'crossed_01m1',
    'e_faithful_check',
    'expectation',
    'expectation_laws_check',
    'expectation_range_check',
    'grading_isometry_check',
    'induce',
    'induced_functional',
    'inner_product',
    'lattice_criterion',
    'lattice_of_ideals',
    'multiply',
    'normal_form',
    'positivity_check',
    'random_01m1_instance',
    'regular_module_and_rep',
    'relation_span_check',
    'restriction_formula',
    'star',
]
