'''Finite topological spaces and semilattice spectra'''

from .space import FiniteSpace, sierpinski, validate_space
from .spectrum import (
    SemilatticeSpectrum, basis_law, ideal_open_bijection_check,
    semilattice_spectrum, tight_characters, ultracharacters
)

__all__ = [
    'FiniteSpace',
    'SemilatticeSpectrum',
    'basis_law',
    'ideal_open_bijection_check',
    'semilattice_spectrum',
    'sierpinski',
    'tight_characters',
    'ultracharacters',
    'validate_space',
]
