'''
Convolution algebras of finite groupoids, their regular representations
on source fibres, and inner exactness.

Functions on arrows are vectors indexed by arrow. The regular
representation at a unit x acts on functions on s^-1(x) by
(f * xi)(gamma) = sum f(gamma beta^-1) xi(beta), so its matrix is
Lambda_x(f)[gamma, beta] = f(gamma beta^-1). The range-fibre convention
is the transpose picture through f -> f(. ^-1).
'''

from functools import cached_property

import numpy as np
import scipy.linalg

from common import EXACT_TOL
from exceptions import InternalError, PreconditionError
from fdalg import FdAlgebra, block_dimensions, rank
from fdalg.matrices import stack
from log_utils import get_logger
from report import Verdict

from .groupoid import FiniteGroupoid


class ConvolutionAlgebra:
    def __init__(self, groupoid: FiniteGroupoid):
        self.groupoid = groupoid

    @property
    def dimension(self):
        return self.groupoid.size

    def point_mass(self, g) -> np.ndarray:
        f = np.zeros(self.dimension, dtype=complex)
        f[g] = 1
        return f

    def multiply(self, f, g) -> np.ndarray:
        '''(f * g)(gamma) = sum over alpha beta = gamma of f(alpha) g(beta)'''
        result = np.zeros(self.dimension, dtype=complex)
        for (a, b), c in self.groupoid.composition.items():
            result[c] += f[a] * g[b]
        return result

    def star(self, f) -> np.ndarray:
        return np.conj(np.asarray(f)[list(self.groupoid.inverse)])

    def regular(self, x, f) -> np.ndarray:
        '''Lambda_x(f) on functions on the source fibre at x'''
        G = self.groupoid
        fibre = G.fibre(x)
        matrix = np.zeros((len(fibre), len(fibre)), dtype=complex)
        for i, gamma in enumerate(fibre):
            for j, beta in enumerate(fibre):
                matrix[i, j] = f[G.compose(gamma, G.inverse[beta])]
        return matrix

    def regular_sum(self, f) -> np.ndarray:
        '''The direct sum of Lambda_x(f) over all units'''
        parts = [self.regular(x, f) for x in range(self.groupoid.unit_count)]
        return scipy.linalg.block_diag(*parts)

    @cached_property
    def regular_images(self):
        return [self.regular_sum(self.point_mass(g)) for g in range(self.dimension)]

    @cached_property
    def presentation(self) -> FdAlgebra:
        '''
        The algebra as a direct sum of matrix blocks, read off from the
        faithful representation on all source fibres.
        '''
        images = self.regular_images
        if rank(stack(images, self.dimension ** 2)) != self.dimension:
            raise InternalError('the regular representations are not faithful',
                                {'arrows': self.dimension})
        blocks = block_dimensions(images, np.random.default_rng(0))
        return FdAlgebra(tuple(blocks))


def convolution_algebra(G: FiniteGroupoid) -> ConvolutionAlgebra:
    logger = get_logger('convolution')

    algebra = ConvolutionAlgebra(G)
    logger.info(f'{G.size} arrows, blocks {list(algebra.presentation.blocks)}')
    return algebra


def regular_representations(G: FiniteGroupoid):
    '''
    Lambda_x for every unit x as a function of f, after checking by rank
    that their direct sum is faithful.
    '''
    algebra = ConvolutionAlgebra(G)
    faithful = rank(stack(algebra.regular_images, G.size ** 2)) == G.size
    if not faithful:
        raise InternalError('the regular representations are not faithful', {'arrows': G.size})
    return {x: (lambda f, x=x: algebra.regular(x, f)) for x in range(G.unit_count)}


def restriction_matrix(G: FiniteGroupoid, F) -> np.ndarray:
    '''f -> f restricted to G_F, in point-mass coordinates'''
    F = frozenset(F)
    arrows = [g for g in range(G.size) if G.source[g] in F and G.range[g] in F]
    matrix = np.zeros((len(arrows), G.size), dtype=complex)
    for k, g in enumerate(arrows):
        matrix[k, g] = 1
    return matrix


def inner_exactness_check(G: FiniteGroupoid, U, seed=0, tol=EXACT_TOL) -> Verdict:
    '''
    For an invariant set of units U with complement F, the sequence
    C*_r(G_U) -> C*_r(G) -> C*_r(G_F) is exact: restriction to G_F is a
    surjective *-homomorphism whose kernel is the extension by zero of
    C*_r(G_U). Always true for finite groupoids.
    '''
    U = frozenset(U)
    if not G.is_invariant(U):
        raise PreconditionError(f'units {sorted(U)} are not invariant')
    F = frozenset(range(G.unit_count)) - U
    whole = ConvolutionAlgebra(G)
    quotient = ConvolutionAlgebra(G.restriction(F))
    R = restriction_matrix(G, F)
    over_U = [g for g in range(G.size) if G.source[g] in U]

    rng = np.random.default_rng(seed)
    for _ in range(3):
        f = rng.standard_normal(G.size) + 1j * rng.standard_normal(G.size)
        g = rng.standard_normal(G.size) + 1j * rng.standard_normal(G.size)
        scale = max(1.0, np.abs(f).sum() * np.abs(g).sum())
        if not np.allclose(R @ whole.multiply(f, g), quotient.multiply(R @ f, R @ g),
                           rtol=0, atol=tol * scale):
            raise InternalError('restriction is not multiplicative', {'U': sorted(U)})
        if not np.allclose(R @ whole.star(f), quotient.star(R @ f), rtol=0, atol=tol * scale):
            raise InternalError('restriction does not preserve the involution', {'U': sorted(U)})

    image_rank = rank(R)
    kernel_dimension = G.size - image_rank
    ideal = stack([whole.point_mass(g) for g in over_U], G.size)
    ideal_in_kernel = not ideal.size or np.allclose(R @ ideal, 0)
    exact = (image_rank == R.shape[0] and kernel_dimension == len(over_U) and ideal_in_kernel)
    details = {
        'U': sorted(U),
        'ideal_dimension': len(over_U),
        'kernel_dimension': kernel_dimension,
        'quotient_dimension': R.shape[0],
        'note': 'finite groupoids are inner exact',
    }
    if not exact:
        raise InternalError('restriction sequence is not exact', details)
    return Verdict(True, details=details)

