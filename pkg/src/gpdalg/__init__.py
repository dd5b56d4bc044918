'''Finite groupoids, their convolution algebras, and the iterated crossed product'''

from .convolution import (
    ConvolutionAlgebra, convolution_algebra, inner_exactness_check, regular_representations,
    restriction_matrix
)
from .groupoid import (
    FiniteGroupoid, classical_transformation_groupoid, from_discrete_action, group_groupoid,
    pair_groupoid, unit_groupoid, validate_groupoid
)
from .iterated import GroupoidRepresentation, verify_iterated_iso

__all__ = [
    'ConvolutionAlgebra',
    'FiniteGroupoid',
    'GroupoidRepresentation',
    'classical_transformation_groupoid',
    'convolution_algebra',
    'from_discrete_action',
    'group_groupoid',
    'inner_exactness_check',
    'pair_groupoid',
    'regular_representations',
    'restriction_matrix',
    'unit_groupoid',
    'validate_groupoid',
    'verify_iterated_iso',
]
