'''
The crossed product of functions on a finite discrete space by an
inverse-semigroup action, compared with the convolution algebra of the
transformation groupoid through xi delta_t -> sum_x xi(x) [t, x].
'''

import numpy as np

from act import SpaceAction
from common import EXACT_TOL, SPECTRAL_TOL
from exceptions import AssertionFailure, PreconditionError
from fdalg import AlgElement, fd_action_from_space_action, rank
from log_utils import get_logger
from report import Verdict
from xprod import CrossedProduct, Representation, check_representation

from .convolution import ConvolutionAlgebra
from .groupoid import classical_transformation_groupoid, from_discrete_action


class GroupoidRepresentation(Representation):
    '''The crossed product acting through the canonical map and the sum of the Lambda_x'''

    def __init__(self, crossed: CrossedProduct, algebra: ConvolutionAlgebra):
        self.algebra = algebra
        # the source fibres partition the arrows
        super().__init__(crossed, algebra.groupoid.size)

    def section(self, t, xi: AlgElement) -> np.ndarray:
        '''The function on arrows supported on the bisection G_t'''
        G = self.algebra.groupoid
        f = np.zeros(self.algebra.dimension, dtype=complex)
        for x in self.crossed.action.sources[t]:
            f[G.germs[(t, x)]] += xi.mats[x][0, 0]
        return f

    def generator(self, t, xi: AlgElement) -> np.ndarray:
        return self.algebra.regular_sum(self.section(t, xi))


def verify_iterated_iso(action: SpaceAction, seed=0, tol=EXACT_TOL,
                        spectral_tol=SPECTRAL_TOL) -> Verdict:
    '''
    Check that xi delta_t -> section on G_t is an isomorphism from the
    crossed product onto the groupoid convolution algebra: a
    representation (R1-R3), killing the relations, bijective, and taking E
    to restriction to the units. Global group actions are also compared
    with the classical transformation groupoid.
    '''
    logger = get_logger('iterated')

    X = action.space
    if not X.is_discrete():
        raise PreconditionError('the space must be discrete')
    fd_action = fd_action_from_space_action(action, [1] * X.size)
    crossed = CrossedProduct(fd_action)
    G = from_discrete_action(action)
    algebra = ConvolutionAlgebra(G)
    rep = GroupoidRepresentation(crossed, algebra)
    S, A = crossed.semigroup, crossed.algebra

    represented = check_representation(rep, seed, tol=spectral_tol)
    if not represented:
        raise AssertionFailure('the canonical map is not a representation', represented.witness)

    for t in range(S.size):
        for u in range(S.size):
            for x in crossed.common[(t, u)]:
                if G.germs[(t, x)] != G.germs[(u, x)]:
                    raise AssertionFailure('the canonical map does not kill a relation',
                                           {'t': t, 'u': u, 'x': x})

    sections = np.column_stack(
        [rep.section(t, A.matrix_unit(b, 0, 0)) for t, b, _, _ in crossed.basis]
    ) if crossed.dimension else np.zeros((G.size, 0))
    bijective = crossed.dimension == G.size and rank(sections) == G.size
    if not bijective:
        raise AssertionFailure('the canonical map is not bijective',
                               {'dim_crossed': crossed.dimension, 'arrows': G.size})

    for p in range(crossed.dimension):
        for q in range(crossed.dimension):
            z = crossed.basis_element(p) @ crossed.basis_element(q)
            product = algebra.multiply(sections[:, p], sections[:, q])
            expected = sum((rep.section(t, xi) for t, xi in z.components.items()),
                           np.zeros(G.size, dtype=complex))
            if not np.allclose(product, expected, rtol=0, atol=tol):
                raise AssertionFailure('the canonical map is not multiplicative', {'p': p, 'q': q})

    units = set(G.units)
    one = S.unit
    for t in range(S.size):
        for x in crossed.action.sources[t]:
            if (x in crossed.common[(one, t)]) != (G.germs[(t, x)] in units):
                raise AssertionFailure('E does not match restriction to the units',
                                       {'t': t, 'x': x})

    details = {'iso': True, 'dim': crossed.dimension, 'arrows': G.size,
               'blocks': list(algebra.presentation.blocks)}
    if _is_global_group_action(action):
        classical = classical_transformation_groupoid(action)
        details['classical_match'] = (classical.size == G.size
                                      and _same_composition(classical, G))
        if not details['classical_match']:
            raise AssertionFailure('germ groupoid differs from the classical construction',
                                   {'arrows': classical.size})

    logger.info(f'crossed product and groupoid algebra of dimension {crossed.dimension}, '
                f'blocks {details["blocks"]}')
    return Verdict(True, details=details)


def _is_global_group_action(action: SpaceAction):
    S, X = action.semigroup, action.space
    return (S.unit is not None
            and all(S.product(S.star(t), t) == S.unit for t in range(S.size))
            and all(action.domain(t) == X.points for t in range(S.size)))


def _same_composition(classical, G):
    '''(g, x) -> [g, x] must carry one composition onto the other'''
    to_germ = {index: G.germs[pair] for pair, index in classical.germs.items()}
    if len(set(to_germ.values())) != G.size:
        return False
    return all(G.compose(to_germ[g], to_germ[h]) == to_germ[k]
               for (g, h), k in classical.composition.items())
