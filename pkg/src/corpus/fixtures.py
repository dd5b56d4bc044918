'''
Named fixtures and seeded random families.

Every fixture has a kind: 'semigroup', 'space', 'action' (on a finite
space), 'fd-action' or 'sign-data' (the (I, alpha, u) data of a sign-monoid
action). `load_fixture` builds one by name.
'''

from functools import lru_cache

import numpy as np

from act import SpaceAction, natural_action, universal_action
from exceptions import StructuralError
from fdalg import AlgElement, FdAlgebra, fd_action_from_space_action
from isg import (
    cyclic_group, cyclic_group_with_zero, sign_monoid, symmetric_inverse_monoid
)
from topo import FiniteSpace, sierpinski
from xprod import BlockAutomorphism, random_01m1_instance

KINDS = ('semigroup', 'space', 'action', 'fd-action', 'sign-data')


def three_point_space() -> FiniteSpace:
    '''a is open, b and c are not, and no two points are separated'''
    return FiniteSpace.from_opens(
        ['a', 'b', 'c'], [[], ['a'], ['a', 'b'], ['a', 'c'], ['a', 'b', 'c']])


def sign_action(X: FiniteSpace, sigma, zero_domain) -> SpaceAction:
    '''
    {1, -1, 0} acting by the identity, by the involution sigma (a list of
    point indices) and by the identity of the open set `zero_domain`.
    '''
    identity = {x: x for x in X.points}
    flip = {x: int(sigma[x]) for x in X.points}
    return SpaceAction.from_maps(
        sign_monoid(), X, [identity, flip, {x: x for x in zero_domain}])


def swap_action(X: FiniteSpace, sigma) -> SpaceAction:
    '''Z/2 acting through the involution sigma'''
    return SpaceAction.from_maps(
        cyclic_group(2), X, [{x: x for x in X.points}, {x: int(sigma[x]) for x in X.points}])


def _random_involution(n, rng):
    sigma = list(range(n))
    points = [int(x) for x in rng.permutation(n)]
    while len(points) > 1:
        x, y = points.pop(), points.pop()
        if rng.random() < 0.5:
            sigma[x], sigma[y] = y, x
    return sigma


def _random_invariant_space(n, sigma, rng) -> FiniteSpace:
    '''
    A random preorder closed under sigma; N(x) is the set of points
    below x.
    '''
    below = np.eye(n, dtype=bool)
    for _ in range(int(rng.integers(0, n + 1))):
        x, y = (int(v) for v in rng.integers(0, n, size=2))
        below[y, x] = below[sigma[y], sigma[x]] = True
    for k in range(n):
        below = below | (below[:, [k]] & below[[k], :])
    labels = [chr(ord('a') + x) for x in range(n)]
    return FiniteSpace.from_neighbourhoods(
        labels, [frozenset(int(y) for y in np.flatnonzero(below[:, x])) for x in range(n)])


def random_space_action(seed) -> SpaceAction:
    '''
    A sign-monoid action on a random space with 2 to 4 points: -1 acts by
    an involutive homeomorphism sigma, 0 by the identity of an open set
    of sigma-fixed points.
    '''
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5))
    sigma = _random_involution(n, rng)
    X = _random_invariant_space(n, sigma, rng)
    fixed = [x for x in range(n) if sigma[x] == x and rng.random() < 0.7]
    return sign_action(X, sigma, X.interior(fixed))


def random_swap_action(seed) -> SpaceAction:
    '''Z/2 acting on a random space with 2 to 4 points by an involutive homeomorphism'''
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5))
    sigma = _random_involution(n, rng)
    return swap_action(_random_invariant_space(n, sigma, rng), sigma)


def random_discrete_action(seed) -> SpaceAction:
    '''A sign-monoid action on a discrete space with 2 to 4 points'''
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5))
    sigma = _random_involution(n, rng)
    X = FiniteSpace.discrete([chr(ord('a') + x) for x in range(n)])
    fixed = [x for x in range(n) if sigma[x] == x and rng.random() < 0.7]
    return sign_action(X, sigma, fixed)


def random_fd_action(seed, max_dim=2):
    '''
    The action on the direct sum of M_{d_x}, x in a random discrete
    space, induced by `random_discrete_action`, with d_x constant on
    orbits and random implementing unitaries.
    '''
    action = random_discrete_action(seed)
    rng = np.random.default_rng(seed)
    sigma = action.maps[1]
    dims = [0] * action.space.size
    for x in range(action.space.size):
        if not dims[x]:
            dims[x] = dims[sigma[x]] = int(rng.integers(1, max_dim + 1))
    return fd_action_from_space_action(action, dims, seed)


def sierpinski_sign_action() -> SpaceAction:
    '''-1 acts trivially and 0 by the identity of the open point a'''
    X = sierpinski()
    return sign_action(X, [0, 1], [0])


def discrete_sign_action() -> SpaceAction:
    X = FiniteSpace.discrete(['a', 'b'])
    return sign_action(X, [0, 1], [0])


def point_action() -> SpaceAction:
    '''Z/2 acting trivially on a point'''
    X = FiniteSpace.discrete(['p'])
    return swap_action(X, [0])


def swap_two_points() -> SpaceAction:
    return swap_action(FiniteSpace.discrete(['a', 'b']), [1, 0])


def trivial_sign_algebra():
    '''A = C + C, I = the first block, alpha = id, u = [I]'''
    A = FdAlgebra((1, 1))
    alpha = BlockAutomorphism(A, (0, 1), (np.eye(1), np.eye(1)))
    return A, frozenset([0]), alpha, A.support_projection([0])


def twisted_sign_algebra():
    '''A = M_2 + C, I = M_2, alpha = Ad(diag(1, -1)) + id, u = diag(1, -1)'''
    A = FdAlgebra((2, 1))
    w = np.diag([1.0, -1.0]).astype(complex)
    alpha = BlockAutomorphism(A, (0, 1), (w, np.eye(1, dtype=complex)))
    u = AlgElement(A, (w, np.zeros((1, 1), dtype=complex)))
    return A, frozenset([0]), alpha, u


def empty_ideal_sign_algebra():
    '''I = 0: the crossed product is all of A x| Z/2'''
    A = FdAlgebra((1, 2))
    w = (np.eye(1, dtype=complex), np.diag([1.0, -1.0]).astype(complex))
    return A, frozenset(), BlockAutomorphism(A, (0, 1), w), A.zero()


def character_swap_action():
    '''A = C^2 with Z/2 swapping the two characters'''
    return fd_action_from_space_action(swap_two_points(), [1, 1])


FIXTURES = {
    'sign-monoid': ('semigroup', sign_monoid),
    'z2': ('semigroup', lambda: cyclic_group(2)),
    'z2-zero': ('semigroup', lambda: cyclic_group_with_zero(2)),
    'I2': ('semigroup', lambda: symmetric_inverse_monoid(2)),
    'I3': ('semigroup', lambda: symmetric_inverse_monoid(3)),

    'sierpinski': ('space', sierpinski),
    'three-point': ('space', three_point_space),
    'discrete-3': ('space', lambda: FiniteSpace.discrete(['a', 'b', 'c'])),

    'sign-sierpinski': ('action', sierpinski_sign_action),
    'sign-discrete': ('action', discrete_sign_action),
    'sign-three-point': ('action', lambda: sign_action(three_point_space(), [0, 2, 1], [0])),
    'z2-point': ('action', point_action),
    'z2-swap': ('action', swap_two_points),
    'z2-three-point': ('action', lambda: swap_action(three_point_space(), [0, 2, 1])),
    'natural-I2': ('action', lambda: natural_action(symmetric_inverse_monoid(2))),
    'natural-I3': ('action', lambda: natural_action(symmetric_inverse_monoid(3))),
    'universal-sign-monoid': ('action', lambda: universal_action(sign_monoid())),
    'universal-z2-zero': ('action', lambda: universal_action(cyclic_group_with_zero(2))),
    'universal-I2': ('action', lambda: universal_action(symmetric_inverse_monoid(2))),
    'universal-I3': ('action', lambda: universal_action(symmetric_inverse_monoid(3))),

    'fd-sign-discrete': ('fd-action', lambda: fd_action_from_space_action(
        discrete_sign_action(), [1, 1])),
    'fd-character-swap': ('fd-action', character_swap_action),
    'fd-natural-I2': ('fd-action', lambda: fd_action_from_space_action(
        natural_action(symmetric_inverse_monoid(2)), [2, 2], 0)),

    'sign-trivial': ('sign-data', trivial_sign_algebra),
    'sign-twisted': ('sign-data', twisted_sign_algebra),
    'sign-empty-ideal': ('sign-data', empty_ideal_sign_algebra),
}

# name prefix -> (kind, factory of the seed)
FAMILIES = {
    'random-space-action': ('action', random_space_action),
    'random-swap-action': ('action', random_swap_action),
    'random-discrete-action': ('action', random_discrete_action),
    'random-fd-action': ('fd-action', random_fd_action),
    'random-sign-data': ('sign-data', random_01m1_instance),
}


def fixture_names(kind=None):
    return sorted(name for name, (k, _) in FIXTURES.items() if kind in (None, k))


def family_member(family, seed):
    '''
    >>> family_member('random-fd-action', 3)
    'random-fd-action-3'
    '''
    if family not in FAMILIES:
        raise StructuralError(f'unknown family: {family}')
    return f'{family}-{int(seed)}'


def _parse(name):
    if name in FIXTURES:
        return FIXTURES[name][0], FIXTURES[name][1], ()
    family, _, seed = name.rpartition('-')
    if family in FAMILIES and seed.isdigit():
        kind, factory = FAMILIES[family]
        return kind, factory, (int(seed),)
    raise StructuralError(f'unknown fixture: {name}')


def fixture_kind(name):
    '''
    >>> fixture_kind('I3'), fixture_kind('random-space-action-7')
    ('semigroup', 'action')
    '''
    return _parse(name)[0]


@lru_cache(maxsize=None)
def load_fixture(name, kind=None):
    '''Build the fixture `name`, which must be of `kind` when given'''
    found, factory, args = _parse(name)
    if kind is not None and found != kind:
        raise StructuralError(f'fixture {name} is a {found}, expected a {kind}')
    return factory(*args)
